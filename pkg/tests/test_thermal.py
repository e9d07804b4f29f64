import numpy as np
import pytest

from isingring.errors import InvalidParams
from isingring.linalg import check_density_matrix, trace_distance
from isingring.model import RingParams, build_hamiltonian, ghz_x, ground_state
from isingring.thermal import (ThermalParams, energy_spectrum, magnetization, thermal_state,
                               total_sz, two_level_approx)


def test_thermal_params_validation():
    with pytest.raises(InvalidParams):
        ThermalParams(0.0)
    assert ThermalParams(2.0).inverse_temperature == 0.5


def test_thermal_state_is_density_matrix():
    check_density_matrix(thermal_state(RingParams(4, 5, 1), 0.3))


def test_low_temperature_limit():
    p = RingParams(2, 5, 1)
    psi = ground_state(p)
    assert trace_distance(thermal_state(p, 1e-4), psi) <= 1e-6


def test_high_temperature_limit():
    p = RingParams(3, 5, 1)
    assert trace_distance(thermal_state(p, 1e6), np.eye(8) / 8) <= 1e-4


def test_boltzmann_populations():
    p = RingParams(2, 5, 1)
    e = np.linalg.eigvalsh(build_hamiltonian(p))
    w = np.exp(-e / 2.0)
    w /= w.sum()
    got = np.linalg.eigvalsh(thermal_state(p, ThermalParams(2.0)))
    assert np.allclose(np.sort(got), np.sort(w), atol=1e-10)


def test_thermal_state_finite_at_tiny_temperature():
    rho = thermal_state(RingParams(6, 5, 10), 1e-3)
    assert np.all(np.isfinite(rho))


def test_quasi_norm_limits():
    p = RingParams(3, 5, 2)
    _, low = two_level_approx(p, 1e-3)
    _, high = two_level_approx(p, 1e7)
    assert low == pytest.approx(1, abs=1e-12)
    assert high == pytest.approx(2 / 8, abs=1e-6)


def test_two_level_trace_equals_quasi_norm():
    rho, q = two_level_approx(RingParams(4, 5, 1), 0.5)
    assert np.trace(rho).real == pytest.approx(q, abs=1e-12)


def test_two_level_approx_close_to_thermal():
    p = RingParams(4, 5, 1)
    for t in (0.05, 0.2, 0.5, 1.0):
        approx, q = two_level_approx(p, t)
        if q >= 0.99:
            assert trace_distance(approx, thermal_state(p, t)) <= 0.05


def test_spectrum_zero_field():
    assert np.allclose(energy_spectrum(RingParams(2, 5, 0)), [-10, -10, 10, 10])


def test_spectrum_gap_grows_with_field():
    gap = lambda b: np.diff(energy_spectrum(RingParams(2, 5, b))[:2])[0]
    assert gap(3) > gap(1) > 0


def test_spectrum_traceless():
    assert energy_spectrum(RingParams(5, 5, 3)).sum() == pytest.approx(0, abs=1e-9)


def test_magnetization_cases():
    assert magnetization(ghz_x(4)) == pytest.approx(0)
    assert magnetization(np.eye(16)[15]) == 1
    assert magnetization(ground_state(RingParams(2, 5, 100))) >= 0.99


def test_magnetization_matches_operator(rng):
    n = 3
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    direct = abs(np.vdot(psi, total_sz(n) @ psi).real) / n
    assert magnetization(psi) == pytest.approx(direct, abs=1e-12)
