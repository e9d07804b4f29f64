"""Generalised Svetlichny polynomials and their quantum maximisation.

Each party measures one of two dichotomic observables ``R(theta)`` or
``R(theta')`` from the y-z plane family

    R(theta) = cos(theta) sz + sin(theta) sy.

A polynomial is a map from setting strings to exact dyadic coefficients.
A setting string is a tuple with one entry per party: ``0`` selects the
unprimed observable ``o_j`` (angle ``theta_j``), ``1`` the primed one
``O_j`` (angle ``theta'_j``).
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from .errors import DimMismatch, TooManyParties
from .linalg import SY, SZ, as_density, kron, num_qubits

CLASSICAL_MAX_PARTIES = 8
TWO_PI = 2.0 * np.pi


def observable(theta):
    """2x2 observable ``[[cos t, -i sin t], [i sin t, -cos t]]``."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -1j * s], [1j * s, -c]], dtype=complex)


def correlation(state, thetas):
    """``Tr[rho (x)_j R(theta_j)]`` for one angle per site."""
    rho = as_density(state)
    n = num_qubits(rho.shape[0])
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    if thetas.shape != (n,):
        raise DimMismatch(f"need {n} angles, got {thetas.size}")
    val = np.trace(rho @ kron(*(observable(t) for t in thetas)))
    if abs(val.imag) > 1e-10:
        raise ValueError(f"correlation has imaginary part {val.imag:.3e}; state not Hermitian?")
    return float(val.real)


@dataclass(frozen=True)
class BellPolynomial:
    n: int
    terms: Dict[Tuple[int, ...], Fraction]

    def algebraic_max(self):
        """Sum of coefficient magnitudes, the bound for any +-1 correlators."""
        return sum(abs(c) for c in self.terms.values())

    def coefficient_array(self):
        """Float coefficients as an ``(2,)*n`` array indexed by setting string."""
        arr = np.zeros((2,) * self.n)
        for s, c in self.terms.items():
            arr[s] = float(c)
        return arr


def _step(m, big):
    # m_n = 1/2 m_{n-1}(o+O) + 1/2 M_{n-1}(o-O)
    # M_n = 1/2 M_{n-1}(o+O) + 1/2 m_{n-1}(O-o)
    half = Fraction(1, 2)
    new_m, new_big = {}, {}

    def add(d, key, val):
        d[key] = d.get(key, 0) + val

    for s, c in m.items():
        add(new_m, s + (0,), half * c)
        add(new_m, s + (1,), half * c)
        add(new_big, s + (1,), half * c)
        add(new_big, s + (0,), -half * c)
    for s, c in big.items():
        add(new_big, s + (0,), half * c)
        add(new_big, s + (1,), half * c)
        add(new_m, s + (0,), half * c)
        add(new_m, s + (1,), -half * c)
    prune = lambda d: {s: c for s, c in d.items() if c != 0}
    return prune(new_m), prune(new_big)


@lru_cache(maxsize=None)
def svetlichny_polynomial(n: int) -> BellPolynomial:
    """Expand ``S_n``: ``m_n`` for even ``n``, ``(m_n + M_n)/2`` for odd ``n``.

    The recursion starts from ``m_1 = o_1`` and ``M_1 = O_1``.
    """
    if n < 2:
        raise ValueError("Svetlichny polynomials need n >= 2")
    m, big = {(0,): Fraction(1)}, {(1,): Fraction(1)}
    for _ in range(2, n + 1):
        m, big = _step(m, big)
    if n % 2 == 0:
        terms = m
    else:
        terms = {}
        for d in (m, big):
            for s, c in d.items():
                terms[s] = terms.get(s, 0) + c / 2
        terms = {s: c for s, c in terms.items() if c != 0}
    return BellPolynomial(n, dict(sorted(terms.items())))


def classical_max(poly: BellPolynomial) -> Fraction:
    """Maximum over all deterministic assignments ``o_j, O_j in {-1, +1}``.

    Exhaustive over ``4**n`` assignments; coefficients are scaled to a common
    power-of-two denominator so the search runs in exact integer arithmetic.
    """
    n = poly.n
    if n > CLASSICAL_MAX_PARTIES:
        raise TooManyParties(f"exhaustive search limited to {CLASSICAL_MAX_PARTIES} parties")
    denom = 1
    for c in poly.terms.values():
        denom = max(denom, c.denominator)
    strings = np.array(list(poly.terms), dtype=np.int64)           # (T, n)
    numer = np.array([int(c * denom) for c in poly.terms.values()], dtype=np.int64)
    # (A, n, 2): value of o_j (index 0) and O_j (index 1) in each assignment
    assign = np.array(list(itertools.product((1, -1), repeat=2 * n)), dtype=np.int64)
    assign = assign.reshape(-1, n, 2)
    picked = assign[:, np.arange(n)[None, :], strings]              # (A, T, n)
    values = np.prod(picked, axis=2) @ numer
    return Fraction(int(values.max()), denom)


@dataclass(frozen=True)
class MeasurementSettings:
    """Per-site angle pairs; ``unprimed[j]`` is theta_j, ``primed[j]`` theta'_j."""

    unprimed: np.ndarray
    primed: np.ndarray

    def __post_init__(self):
        u = np.mod(np.asarray(self.unprimed, dtype=float), TWO_PI)
        p = np.mod(np.asarray(self.primed, dtype=float), TWO_PI)
        if u.ndim != 1 or u.shape != p.shape:
            raise DimMismatch("unprimed and primed angles must be equal-length vectors")
        object.__setattr__(self, "unprimed", u)
        object.__setattr__(self, "primed", p)

    @property
    def n(self):
        return self.unprimed.size

    @classmethod
    def from_vector(cls, x):
        x = np.asarray(x, dtype=float)
        half = x.size // 2
        return cls(x[:half], x[half:])

    def as_vector(self):
        return np.concatenate([self.unprimed, self.primed])

    def angles_for(self, setting):
        return np.where(np.asarray(setting) == 0, self.unprimed, self.primed)


def evaluate(poly: BellPolynomial, state, settings: MeasurementSettings):
    """``sum_s coeff(s) * correlation(state, angles selected by s)``."""
    rho = as_density(state)
    n = num_qubits(rho.shape[0])
    if not poly.n == n == settings.n:
        raise DimMismatch(
            f"polynomial has {poly.n} parties, state {n} qubits, settings {settings.n} sites")
    return sum(float(c) * correlation(rho, settings.angles_for(s))
               for s, c in poly.terms.items())


def pauli_correlations(state):
    """``G[a_1..a_n] = Tr[rho (x)_j P_{a_j}]`` with ``P_0 = sz``, ``P_1 = sy``."""
    rho = as_density(state)
    n = num_qubits(rho.shape[0])
    t = rho.reshape((2,) * (2 * n))
    paulis = np.stack([SZ, SY])
    operands = [t, list(range(2 * n))]
    for j in range(n):
        # Tr[rho A] = sum rho[i, k] A[k, i]
        operands += [paulis, [2 * n + j, n + j, j]]
    g = np.einsum(*operands, list(range(2 * n, 3 * n)), optimize="greedy")
    return g.real


class SvetlichnyObjective:
    """Fast evaluation of a polynomial on one fixed state.

    Expanding ``R = cos sz + sin sy`` turns the polynomial into a contraction
    of a ``4**n`` coefficient tensor with one 4-vector per site,
    ``(cos t_j, sin t_j, cos t'_j, sin t'_j)``.
    """

    def __init__(self, poly: BellPolynomial, state):
        g = pauli_correlations(state)
        n = g.ndim
        if poly.n != n:
            raise DimMismatch(f"polynomial has {poly.n} parties, state {n} qubits")
        self.n = n
        q = np.multiply.outer(poly.coefficient_array(), g)          # s_1..s_n, a_1..a_n
        order = [ax for j in range(n) for ax in (j, n + j)]
        self._q = np.ascontiguousarray(q.transpose(order)).reshape(-1)

    def __call__(self, x):
        n = self.n
        x = np.asarray(x, dtype=float)
        c, s = np.cos(x), np.sin(x)
        u = np.stack([c[:n], s[:n], c[n:], s[n:]], axis=1)
        v = self._q
        for j in range(n):
            v = u[j] @ v.reshape(4, -1)
        return float(v[0])


@dataclass(frozen=True)
class OptimizerConfig:
    starts: int = 64
    tol: float = 1e-7
    seed: int = 0
    max_evals: Optional[int] = None


@dataclass(frozen=True)
class BellResult:
    value: float
    settings: MeasurementSettings
    starts: int
    converged: bool
    restart_values: Tuple[float, ...] = field(default=(), repr=False)


def _local_refine(fun, x0, tol, max_evals):
    opts = {"xatol": 1e-7, "fatol": tol * 0.1, "adaptive": x0.size > 4,
            "maxfev": max_evals, "maxiter": max_evals}
    res = minimize(fun, x0, method="Nelder-Mead", options=opts)
    # A fresh simplex around the first result escapes premature collapse.
    res2 = minimize(fun, res.x, method="Nelder-Mead", options=opts)
    return res2 if res2.fun <= res.fun else res


def optimize(poly: BellPolynomial, state, cfg: Optional[OptimizerConfig] = None,
             initial: Sequence = ()):
    """Maximise ``|S_n|`` over all ``2n`` angles by seeded multistart Nelder-Mead.

    ``initial`` holds extra starting points (``MeasurementSettings`` or flat
    angle vectors) tried before the ``cfg.starts`` random ones. The result is
    flagged converged when the two best restarts agree within ``cfg.tol``.
    """
    cfg = cfg or OptimizerConfig()
    obj = SvetlichnyObjective(poly, state)
    n = obj.n
    max_evals = cfg.max_evals or 1000 * 2 * n
    fun = lambda x: -abs(obj(x))

    rng = np.random.default_rng(cfg.seed)
    starts = [s.as_vector() if isinstance(s, MeasurementSettings) else np.asarray(s, float)
              for s in initial]
    starts += list(rng.uniform(0.0, TWO_PI, size=(cfg.starts, 2 * n)))

    results = []
    for x0 in starts:
        res = _local_refine(fun, x0, cfg.tol, max_evals)
        results.append((-res.fun, res.x))
    order = sorted(range(len(results)), key=lambda i: (-results[i][0], i))
    best_val, best_x = results[order[0]]
    converged = len(order) > 1 and best_val - results[order[1]][0] <= cfg.tol
    settings = MeasurementSettings.from_vector(best_x)
    return BellResult(
        value=abs(obj(settings.as_vector())),
        settings=settings,
        starts=len(starts),
        converged=bool(converged),
        restart_values=tuple(r[0] for r in results),
    )
