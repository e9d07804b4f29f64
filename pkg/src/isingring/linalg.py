"""Dense linear algebra on qubit registers.

States are plain numpy arrays: a pure state is a length-``2**n`` complex
vector, a density matrix a ``2**n x 2**n`` complex array. Basis index bits
follow the tensor-product order with site 1 as the most significant bit, so
``|b_1 b_2 ... b_n>`` has index ``sum(b_k << (n - k))``.

Site sets are 1-based throughout the package.
"""
from functools import reduce
from typing import Iterable, NamedTuple

import numpy as np

from .errors import BadSiteSet, DimMismatch, IsingRingError, NotHermitian

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

HERMITIAN_ATOL = 1e-10
PSD_ATOL = 1e-10


class SpectrumResult(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def kron(*ops):
    """Kronecker product of the operators, left factor most significant."""
    if not ops:
        raise ValueError("kron needs at least one operand")
    return reduce(np.kron, (np.asarray(op) for op in ops))


def num_qubits(dim):
    n = int(dim).bit_length() - 1
    if n < 0 or 1 << n != dim:
        raise DimMismatch(f"dimension {dim} is not a power of two")
    return n


def site_operator(op, site, n):
    """Embed a single-qubit operator at 1-based ``site`` of an ``n``-qubit register."""
    if not 1 <= site <= n:
        raise BadSiteSet(f"site {site} outside 1..{n}")
    left = np.eye(1 << (site - 1))
    right = np.eye(1 << (n - site))
    return kron(left, op, right)


def is_hermitian(m, atol=HERMITIAN_ATOL):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    return bool(np.max(np.abs(m - m.conj().T)) <= atol * scale)


def _fix_phase(vecs):
    # Rotate each column so its largest-magnitude entry (first one on ties)
    # is real and positive.
    mags = np.abs(vecs)
    out = vecs.copy()
    for col in range(vecs.shape[1]):
        m = mags[:, col]
        idx = int(np.flatnonzero(m >= m.max() - 1e-12)[0])
        out[:, col] *= np.conj(vecs[idx, col]) / m[idx]
    return out


def hermitian_eig(m):
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues come back ascending; each eigenvector's global phase is
    fixed so that its largest-magnitude component is real and positive.

    Raises:
        NotHermitian: if ``m`` deviates from its adjoint by more than 1e-10
            (relative to its largest entry).
    """
    m = np.asarray(m)
    if not is_hermitian(m):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    herm = 0.5 * (m + m.conj().T)
    vals, vecs = np.linalg.eigh(herm)
    return SpectrumResult(vals, _fix_phase(vecs.astype(complex)))


def as_density(state):
    """Return a density matrix for either a state vector or a density matrix."""
    state = np.asarray(state)
    if state.ndim == 1:
        return np.outer(state, state.conj())
    if state.ndim == 2 and state.shape[0] == state.shape[1]:
        return state
    raise DimMismatch(f"cannot interpret array of shape {state.shape} as a state")


def check_pure_state(psi, atol=1e-12):
    psi = np.asarray(psi)
    num_qubits(psi.shape[0])
    if abs(np.linalg.norm(psi) - 1.0) > atol:
        raise IsingRingError("state vector is not normalised")
    return psi


def check_density_matrix(rho, atol=1e-12):
    """Validate the density-matrix invariants, returning ``rho`` unchanged.

    Hermitian and unit trace within ``atol``; eigenvalues no lower than -1e-10.
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimMismatch("density matrix must be square")
    num_qubits(rho.shape[0])
    if not is_hermitian(rho, atol):
        raise NotHermitian("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > atol:
        raise IsingRingError(f"density matrix trace is {np.trace(rho).real!r}")
    if np.linalg.eigvalsh(rho)[0] < -PSD_ATOL:
        raise IsingRingError("density matrix has a negative eigenvalue")
    return rho


def _site_set(sites, n, allow_all=True):
    sites = sorted(set(int(s) for s in sites))
    if not sites:
        raise BadSiteSet("site set is empty")
    if sites[0] < 1 or sites[-1] > n:
        raise BadSiteSet(f"sites {sites} outside 1..{n}")
    if not allow_all and len(sites) == n:
        raise BadSiteSet("site set must be a strict subset of the register")
    return sites


def partial_trace(rho, keep: Iterable[int]):
    """Reduced density matrix on the 1-based sites in ``keep``.

    The kept sites retain their relative order. ``rho`` may also be a pure
    state vector.
    """
    rho = as_density(rho)
    n = num_qubits(rho.shape[0])
    keep = _site_set(keep, n)
    t = rho.reshape([2] * (2 * n))
    kets = list(range(n))
    bras = [n + k for k in range(n)]
    for k in range(n):
        if k + 1 not in keep:
            bras[k] = kets[k]
    out = [kets[s - 1] for s in keep] + [bras[s - 1] for s in keep]
    d = 1 << len(keep)
    return np.einsum(t, kets + bras, out).reshape(d, d)


def partial_transpose(rho, sites: Iterable[int]):
    """Transpose the 1-based ``sites`` subsystem of ``rho``.

    ``sites`` must be a nonempty strict subset of the register.
    """
    rho = as_density(rho)
    n = num_qubits(rho.shape[0])
    sites = _site_set(sites, n, allow_all=False)
    t = rho.reshape([2] * (2 * n))
    axes = list(range(2 * n))
    for s in sites:
        axes[s - 1], axes[n + s - 1] = axes[n + s - 1], axes[s - 1]
    return t.transpose(axes).reshape(rho.shape)


def trace_distance(a, b):
    """Half the trace norm of ``a - b``."""
    a = as_density(a)
    b = as_density(b)
    if a.shape != b.shape:
        raise DimMismatch(f"shapes {a.shape} and {b.shape} differ")
    diff = a - b
    vals = np.linalg.eigvalsh(0.5 * (diff + diff.conj().T))
    return 0.5 * float(np.sum(np.abs(vals)))


def expectation(state, op):
    """Real part of Tr[rho op] for a Hermitian ``op``."""
    rho = as_density(state)
    return float(np.real(np.trace(rho @ op)))
