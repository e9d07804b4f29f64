"""Thermal states of the ring and related quantities.

Temperatures are dimensionless, in units of the energy scale of the
Hamiltonian, with the Boltzmann exponent taken as ``-beta H / T`` and
``beta = 1``.
"""
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidParams
from .linalg import SZ, as_density, hermitian_eig, num_qubits, site_operator
from .model import RingParams, build_hamiltonian


@dataclass(frozen=True)
class ThermalParams:
    temperature: float
    beta: float = 1.0

    def __post_init__(self):
        if not self.temperature > 0:
            raise InvalidParams(f"temperature must be positive, got {self.temperature}")

    @property
    def inverse_temperature(self):
        return self.beta / self.temperature


def _thermal(t):
    return t if isinstance(t, ThermalParams) else ThermalParams(float(t))


def _boltzmann(energies, t: ThermalParams):
    # Shifting by the ground energy keeps exp() finite at low T and cancels
    # in the normalisation.
    w = np.exp(-t.inverse_temperature * (energies - energies[0]))
    return w / w.sum()


def thermal_state(p: RingParams, t: Union[ThermalParams, float]):
    """Gibbs state ``exp(-beta H / T) / Z`` of the ring."""
    t = _thermal(t)
    spec = hermitian_eig(build_hamiltonian(p))
    w = _boltzmann(spec.eigenvalues, t)
    v = spec.eigenvectors
    rho = (v * w) @ v.conj().T
    return 0.5 * (rho + rho.conj().T)


def two_level_approx(p: RingParams, t: Union[ThermalParams, float]):
    """Ground and first excited states mixed with their full-``Z`` Boltzmann weights.

    Returns ``(rho_approx, quasi_norm)``. ``rho_approx`` is deliberately not
    renormalised: its trace equals ``quasi_norm``, the fraction of thermal
    weight carried by the two lowest levels, which measures how good the
    approximation is.
    """
    t = _thermal(t)
    spec = hermitian_eig(build_hamiltonian(p))
    w = _boltzmann(spec.eigenvalues, t)[:2]
    v = spec.eigenvectors[:, :2]
    rho = (v * w) @ v.conj().T
    return 0.5 * (rho + rho.conj().T), float(w.sum())


def energy_spectrum(p: RingParams):
    """All ``2**n`` eigenvalues of the ring Hamiltonian, ascending."""
    return np.linalg.eigvalsh(build_hamiltonian(p))


def magnetization(state):
    """Per-site modulus ``|<sum_j sz_j>| / n`` of a state vector or density matrix."""
    rho = as_density(state)
    n = num_qubits(rho.shape[0])
    diag = np.real(np.diag(rho))
    # sum_j sz_j is diagonal: n - 2 * (number of |1> sites)
    ones = np.array([bin(i).count("1") for i in range(1 << n)])
    return abs(float(diag @ (n - 2 * ones))) / n


def total_sz(n):
    return sum(site_operator(SZ, k, n) for k in range(1, n + 1))
