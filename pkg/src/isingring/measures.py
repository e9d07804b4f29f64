"""Entanglement quantifiers: negativity, tripartite negativity, N-concurrence."""
from dataclasses import dataclass
from typing import FrozenSet

import numpy as np

from .errors import BadSiteSet, OddQubitCount, WrongSize
from .linalg import SY, as_density, kron, num_qubits, partial_transpose

NEGATIVE_CUTOFF = 1e-10


@dataclass(frozen=True)
class Bipartition:
    """Split of sites ``1..n`` into two nonempty complementary sides."""

    side_a: FrozenSet[int]
    side_b: FrozenSet[int]

    def __post_init__(self):
        a, b = frozenset(self.side_a), frozenset(self.side_b)
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)
        if not a or not b:
            raise BadSiteSet("both sides of a bipartition must be nonempty")
        if a & b:
            raise BadSiteSet(f"sides overlap on {sorted(a & b)}")
        if a | b != frozenset(range(1, len(a) + len(b) + 1)):
            raise BadSiteSet("bipartition sides must cover sites 1..n")

    @property
    def n(self):
        return len(self.side_a) + len(self.side_b)

    @classmethod
    def of(cls, side_a, n):
        side_a = frozenset(side_a)
        return cls(side_a, frozenset(range(1, n + 1)) - side_a)


def _cut_for(cut, n):
    if not isinstance(cut, Bipartition):
        cut = Bipartition.of(cut, n)
    if cut.n != n:
        raise BadSiteSet(f"bipartition covers {cut.n} sites, state has {n}")
    return cut


def negativity(rho, cut):
    """``-2 * (sum of negative eigenvalues of rho^{T_A})``, floored at zero.

    ``cut`` is a :class:`Bipartition` or the iterable of sites on side A.
    Eigenvalues above -1e-10 are treated as zero.
    """
    rho = as_density(rho)
    n = num_qubits(rho.shape[0])
    cut = _cut_for(cut, n)
    pt = partial_transpose(rho, cut.side_a)
    vals = np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))
    neg = vals[vals < -NEGATIVE_CUTOFF]
    return max(0.0, -2.0 * float(np.sum(neg)))


def tripartite_negativity(rho):
    """Geometric mean of the three one-versus-rest negativities of 3 qubits."""
    rho = as_density(rho)
    if num_qubits(rho.shape[0]) != 3:
        raise WrongSize("tripartite negativity needs exactly 3 qubits")
    prod = 1.0
    for site in (1, 2, 3):
        prod *= negativity(rho, {site})
    return prod ** (1.0 / 3.0)


def n_concurrence(rho):
    """N-concurrence of an even-size register.

    With ``eta`` the eigenvalues of ``rho Y rho* Y`` (``Y`` the collective
    sigma_y flip) in descending order, returns
    ``max(0, sqrt(eta_1) - sum_{j>=2} sqrt(eta_j))``.
    """
    rho = as_density(rho)
    n = num_qubits(rho.shape[0])
    if n % 2:
        raise OddQubitCount(f"N-concurrence is defined for even qubit counts, got {n}")
    flip = kron(*([SY] * n))
    prod = rho @ flip @ rho.conj() @ flip
    eta = np.sort(np.clip(np.linalg.eigvals(prod).real, 0.0, None))[::-1]
    roots = np.sqrt(eta)
    return max(0.0, float(roots[0] - np.sum(roots[1:])))
