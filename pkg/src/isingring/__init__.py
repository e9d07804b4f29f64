"""Exact entanglement and multipartite non-locality of small transverse-field Ising rings."""
from .bell import (BellPolynomial, BellResult, MeasurementSettings, OptimizerConfig,
                   classical_max, correlation, evaluate, observable, optimize,
                   svetlichny_polynomial)
from .linalg import (hermitian_eig, kron, partial_trace, partial_transpose,
                     trace_distance)
from .measures import Bipartition, n_concurrence, negativity, tripartite_negativity
from .model import (FermionSpectrum, RingParams, build_hamiltonian, fermion_spectrum,
                    ghz_x, ground_state)
from .thermal import (ThermalParams, energy_spectrum, magnetization, thermal_state,
                      two_level_approx)

__version__ = "0.1.0"
