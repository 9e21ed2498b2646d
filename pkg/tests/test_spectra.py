import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from polarlattice import SystemParams
from polarlattice.errors import DomainError
from polarlattice.polariton import diagonalize_two_mode, resolve_system
from polarlattice.spectra import (
    LineWidths,
    absorption,
    local_maxima,
    peak_visibility,
    response_amplitudes,
    spectrum,
    spectrum_at_theta,
)

REF_LW = LineWidths(gamma_mirror=1e-5, Gamma_s=1e-7)


def test_linewidth_default():
    assert LineWidths(1e-5, Gamma_atom=3e-8).Gamma_s == 6e-8


def test_empty_cavity_resonance():
    t, r = response_amplitudes(1.999, 1.999, 1.999, 0.0, REF_LW)
    assert t == pytest.approx(1, abs=1e-15)
    assert r == pytest.approx(0, abs=1e-15)
    t, _ = response_amplitudes(1.999 + 1e-5, 1.999, 1.999, 0.0, REF_LW)
    assert abs(t) ** 2 == pytest.approx(0.5, rel=1e-9)


def test_zero_mirror_width_rejected():
    with pytest.raises(DomainError):
        response_amplitudes(2.0, 2.0, 2.0, 1e-4, LineWidths(0.0, 1e-7))


def test_lorentzian_reduction():
    w = np.linspace(1.9989, 1.9991, 401)
    curve = spectrum(w, 1.999, 1.998, 0.0, REF_LW)
    np.testing.assert_allclose(curve.T, 1e-10 / ((w - 1.999) ** 2 + 1e-10), rtol=1e-12)
    assert curve.peaks_T == pytest.approx([1.999], abs=1e-12)


def test_peaks_dense_grid_oracle():
    # oracle: brute argmax of |t|^2 on each side of resonance, 1e-9 eV grid
    fine = np.linspace(1.9985, 1.9995, 1_000_001)
    t, _ = response_amplitudes(fine, 1.999, 1.999, 1.5e-4, REF_LW)
    T = np.abs(t) ** 2
    left, right = fine < 1.999, fine > 1.999
    oracle = [fine[left][np.argmax(T[left])], fine[right][np.argmax(T[right])]]
    assert oracle == pytest.approx([1.999 - 1.5e-4, 1.999 + 1.5e-4], abs=2e-6)

    grid = np.arange(1.9985, 1.9995, 1e-6)
    curve = spectrum(grid, 1.999, 1.999, 1.5e-4, REF_LW)
    assert len(curve.peaks_T) == 2
    assert curve.peaks_T == pytest.approx(oracle, abs=2e-8)
    assert curve.dips_R == pytest.approx(oracle, abs=2e-8)


def test_energy_accounting_and_passivity():
    grid = np.linspace(1.997, 2.001, 20001)
    curve = spectrum(grid, 1.9995, 1.999, 3e-4, REF_LW)
    np.testing.assert_allclose(curve.T + curve.R + curve.A, 1.0, rtol=0, atol=1e-12)
    assert np.all(curve.A >= 0)
    assert np.all((curve.T >= 0) & (curve.T <= 1) & (curve.R >= 0) & (curve.R <= 1))


@given(
    st.floats(-1e-3, 1e-3), st.floats(-1e-3, 1e-3), st.floats(0, 1e-3),
    st.floats(1e-7, 1e-4), st.floats(0, 1e-4), st.floats(-2e-3, 2e-3),
)
def test_identity_random(dc, ds, f, gamma, Gamma_s, dw):
    lw = LineWidths(gamma, Gamma_s)
    t, r = response_amplitudes(2.0 + dw, 2.0 + dc, 2.0 + ds, f, lw)
    curve = spectrum(np.array([2.0 + dw, 2.0 + dw + 1e-9]), 2.0 + dc, 2.0 + ds, f, lw) if f == 0 else None
    A = absorption(2.0 + dw, 2.0 + dc, 2.0 + ds, f, lw)
    assert abs(t) ** 2 + abs(r) ** 2 + A == pytest.approx(1.0, abs=1e-12)
    assert A >= -1e-15
    if curve is not None:
        assert curve.A == pytest.approx(0.0, abs=1e-12)


def test_even_symmetry_on_resonance():
    x = np.linspace(0, 5e-4, 501)
    t_plus, _ = response_amplitudes(1.999 + x, 1.999, 1.999, 1.5e-4, REF_LW)
    t_minus, _ = response_amplitudes(1.999 - x, 1.999, 1.999, 1.5e-4, REF_LW)
    np.testing.assert_allclose(np.abs(t_plus) ** 2, np.abs(t_minus) ** 2, rtol=0, atol=1e-12)


def test_peak_polariton_agreement():
    rng = np.random.default_rng(3)
    for _ in range(10):
        f = rng.uniform(1e-4, 5e-4)
        wc = 1.999 + rng.uniform(-f, f)
        sol = diagonalize_two_mode(wc, 1.999, f)
        grid = np.linspace(sol.omega_lower - 5 * f, sol.omega_upper + 5 * f, 40001)
        curve = spectrum(grid, wc, 1.999, f, REF_LW)
        assert len(curve.peaks_T) == 2
        assert curve.peaks_T == pytest.approx([sol.omega_lower, sol.omega_upper], abs=1e-5)


def test_weak_coupling_washout():
    grid = np.linspace(1.998, 2.0, 20001)
    curve = spectrum(grid, 1.999, 1.999, 1.5e-4, LineWidths(1e-5, 1e-2))
    assert curve.peaks_T == pytest.approx([1.999], abs=1e-7)
    with pytest.raises(DomainError):
        peak_visibility(curve)


def test_visibility_strong_and_merging():
    grid = np.linspace(1.9985, 1.9995, 10001)
    assert peak_visibility(spectrum(grid, 1.999, 1.999, 1.5e-4, REF_LW)) > 10
    fine = np.linspace(1.999 - 2e-6, 1.999 + 2e-6, 40001)
    contrasts = [peak_visibility(spectrum(fine, 1.999, 1.999, f, REF_LW)) for f in (1e-6, 3e-7, 1e-7)]
    assert contrasts[0] > contrasts[1] > contrasts[2] > 1
    assert contrasts[2] < 1.05


def test_grid_validation():
    with pytest.raises(DomainError):
        spectrum([2.0], 2.0, 2.0, 1e-4, REF_LW)
    with pytest.raises(DomainError):
        spectrum([2.0, 1.9, 2.1], 2.0, 2.0, 1e-4, REF_LW)


def test_coarse_grid_warns():
    with pytest.warns(UserWarning, match="splitting"):
        spectrum(np.linspace(1.99, 2.01, 11), 2.0, 2.0, 1e-4, REF_LW)


def test_spectrum_at_theta_zero_detuning():
    system = resolve_system(SystemParams(f_s=1.5e-4))
    grid = np.arange(system.omega_c0 - 5e-4, system.omega_c0 + 5e-4, 1e-6)
    curve = spectrum_at_theta(system, 0.0, grid)
    sol = diagonalize_two_mode(system.omega_c0, system.omega_s_at((0, 0)), 1.5e-4)
    assert len(curve.peaks_T) == 2
    assert curve.peaks_T == pytest.approx([sol.omega_lower, sol.omega_upper], abs=2e-6)
    assert curve.peaks_T[1] - curve.peaks_T[0] == pytest.approx(sol.splitting, abs=4e-6)


def test_local_maxima_plateau_and_edges():
    assert local_maxima([0, 1, 2, 3], [0, 1, 2, 3]) == []
    assert local_maxima([0, 1, 2], [0, 1, 0]) == [1.0]


def test_three_mode_spectrum_passive():
    system = resolve_system(SystemParams(three_mode=True))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        curve = spectrum_at_theta(system, 0.3, np.linspace(1.997, 2.003, 6001), k=(2e-4, 0.0))
    np.testing.assert_allclose(curve.T + curve.R + curve.A, 1.0, atol=1e-12)
    assert np.all(curve.A >= -1e-15)
