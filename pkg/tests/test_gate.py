from __future__ import annotations

import numpy as np
import pytest

from catgate.errors import PhaseDomainError, SingularShearError, ZeroProbabilityError
from catgate.gate import (
    GateParams,
    exact_output,
    perfect_cat,
    phase_function,
    semiclassical_factor,
    semiclassical_output,
    taylor_phase,
)
from catgate.numerics import Grid1D, default_grid
from catgate.states import CoherentParams, coherent_wavefunction


def test_gate_params_radius():
    assert GateParams(4, 0.0).radius == 3.0
    assert GateParams(12, 1.0).radius == 5.0
    with pytest.raises(ValueError):
        GateParams(-1, 0.0)


@pytest.mark.parametrize("n", [0, 1, 4, 9])
def test_phase_function_endpoints(n):
    assert phase_function(n, 0.0) == 0.0
    np.testing.assert_allclose(phase_function(n, 1.0), (2 * n + 1) * np.pi / 4.0, rtol=1e-15)
    np.testing.assert_allclose(phase_function(n, -1.0), -(2 * n + 1) * np.pi / 4.0, rtol=1e-15)


def test_phase_function_odd_and_monotone():
    z = np.linspace(-1.0, 1.0, 201)
    phi = phase_function(3, z)
    np.testing.assert_allclose(phi, -phase_function(3, -z), rtol=0, atol=1e-14)
    assert np.all(np.diff(phi) > 0)


def test_phase_function_derivative():
    z = np.linspace(-0.9, 0.9, 1801)
    phi = phase_function(5, z)
    dphi = np.gradient(phi, z[1] - z[0])
    np.testing.assert_allclose(dphi[5:-5], 11.0 * np.sqrt(1.0 - z[5:-5] ** 2), atol=2e-4)


def test_phase_function_domain_error():
    with pytest.raises(PhaseDomainError):
        phase_function(2, 1.001)
    np.testing.assert_allclose(
        phase_function(2, 1.0 + 5e-13), 5.0 * np.pi / 4.0, rtol=1e-12
    )


def _output(n, y_m, x0, p0=0.0, count=4001):
    c = 0.5 * (x0 + y_m)
    half = 8.0 + np.sqrt(2.0 * n + 1.0) + 0.5 * abs(y_m - x0)
    grid = Grid1D(c - half, c + half, count)
    psi = coherent_wavefunction(CoherentParams(x0, p0), grid)
    return exact_output(GateParams(n, y_m), psi)


@pytest.mark.parametrize("n, y_m, x0", [(0, 0.0, 0.0), (3, 1.0, 0.5), (10, -2.0, 1.0)])
def test_exact_output_normalized(n, y_m, x0):
    out = _output(n, y_m, x0)
    np.testing.assert_allclose(out.state.norm(), 1.0, rtol=0, atol=1e-12)
    assert out.density > 0.0


@pytest.mark.parametrize("n", [1, 3, 7])
def test_exact_output_parity_zero_at_outcome(n):
    out = _output(n, 0.0, 0.0)
    grid = out.state.grid
    center = (grid.count - 1) // 2
    assert grid.xs[center] == 0.0
    assert abs(out.state.values[center]) < 1e-12


def test_exact_output_translation_covariance():
    shift = 2.0
    base = _output(4, 0.5, 0.25)
    moved = _output(4, 0.5 + shift, 0.25 + shift)
    np.testing.assert_allclose(
        moved.state.values, base.state.values, rtol=0, atol=1e-12
    )
    np.testing.assert_allclose(moved.density, base.density, rtol=1e-12)


def test_exact_output_rejects_vanishing_overlap():
    grid = Grid1D(-9.0, 9.0, 2001)
    psi = coherent_wavefunction(CoherentParams(0.0, 0.0), grid)
    with pytest.raises(ZeroProbabilityError):
        exact_output(GateParams(2, 40.0), psi)


def test_semiclassical_factor_zero_outside_band():
    params = GateParams(2, 0.0)
    x = np.array([-3.0, -2.4, 2.4, 3.0])
    np.testing.assert_allclose(semiclassical_factor(params, x), 0.0)


def test_semiclassical_factor_parity_at_outcome():
    x = np.array([1.5])
    assert semiclassical_factor(GateParams(3, 1.5), x)[0] == 0.0
    np.testing.assert_allclose(semiclassical_factor(GateParams(2, 1.5), x)[0], 2.0, rtol=1e-14)


def test_semiclassical_output_constant_tail_ratio():
    params = GateParams(1, 0.0)
    grid = default_grid(1, 0.0)
    psi = coherent_wavefunction(CoherentParams(0.0, 0.0), grid)
    out = semiclassical_output(params, psi)
    tail = np.abs(grid.xs) > params.radius + 0.5
    ratio = np.abs(out.values[tail]) / np.abs(psi.values[tail])
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-10)
    np.testing.assert_allclose(out.norm(), 1.0, rtol=0, atol=1e-12)


@pytest.mark.parametrize("n, y_m, center", [(1, 0.0, 0.5), (5, 1.0, 0.0), (10, -1.0, 2.0)])
def test_taylor_phase_closed_forms(n, y_m, center):
    tp = taylor_phase(GateParams(n, y_m), center)
    u = center - y_m
    r2 = 2.0 * n + 1.0
    np.testing.assert_allclose(tp.p_plus, np.sqrt(r2 - u * u), rtol=1e-14)
    np.testing.assert_allclose(
        tp.theta0, phase_function(n, u / np.sqrt(r2)), rtol=1e-14
    )
    np.testing.assert_allclose(tp.dp_plus, -u / (2.0 * np.sqrt(r2 - u * u)), rtol=1e-12)


def test_taylor_phase_singular_at_turning_point():
    with pytest.raises(SingularShearError):
        taylor_phase(GateParams(4, 0.0), 3.0)
    with pytest.raises(SingularShearError):
        taylor_phase(GateParams(1, 0.0), 2.5)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_perfect_cat_components(n):
    params = GateParams(n, 0.7)
    inp = CoherentParams(1.1, -0.4)
    cat = perfect_cat(params, inp)
    r = params.radius
    np.testing.assert_allclose(
        cat.alpha_plus, complex(1.1, -0.4 + r) / np.sqrt(2.0), rtol=1e-15
    )
    np.testing.assert_allclose(
        cat.alpha_minus, complex(1.1, -0.4 - r) / np.sqrt(2.0), rtol=1e-15
    )
    np.testing.assert_allclose(cat.phase_theta, r * (0.55 - 0.7), rtol=1e-12)
    assert cat.parity_sign == (-1) ** n
