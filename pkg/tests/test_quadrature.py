"""Quadrature rule checks against closed-form integrals."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairstat import DomainError, Grid1D, integrate_values, simpson_weights, snap_interval


def test_weights_sum_to_length():
    for count in (3, 4, 5, 64, 101):
        w = simpson_weights(count, 0.25)
        assert math.fsum(w) == pytest.approx(0.25 * (count - 1), rel=1e-14)


def test_cubic_exact_on_odd_counts():
    # composite Simpson integrates cubics exactly
    grid = Grid1D(-2.0, 5.0, 701)
    vals = grid.x**3 - 2 * grid.x**2 + 0.5
    exact = (5.0**4 - (-2.0) ** 4) / 4 - 2 * (5.0**3 - (-2.0) ** 3) / 3 + 0.5 * 7.0
    got = integrate_values(vals.astype(complex), grid)
    assert got.real == pytest.approx(exact, rel=1e-13)
    assert got.imag == 0.0


def test_quadratic_exact_on_even_counts():
    # the three-point end correction keeps quadratics exact
    grid = Grid1D(0.0, 1.0, 100)
    vals = (3 * grid.x**2).astype(complex)
    assert integrate_values(vals, grid).real == pytest.approx(1.0, rel=1e-13)


def test_gaussian_against_erf():
    grid = Grid1D(-10.0, 10.0, 2001)
    vals = np.exp(-grid.x**2).astype(complex)
    got = integrate_values(vals, grid, (-1.0, 1.5))
    exact = math.sqrt(math.pi) / 2 * (math.erf(1.5) + math.erf(1.0))
    assert got.real == pytest.approx(exact, rel=1e-10)


def test_oscillatory_complex_integrand():
    k = 7.3
    grid = Grid1D(0.0, 4.0, 8001)
    vals = np.exp(1j * k * grid.x)
    got = integrate_values(vals, grid, (0.5, 3.5))
    exact = (np.exp(1j * k * 3.5) - np.exp(1j * k * 0.5)) / (1j * k)
    assert abs(got - exact) < 1e-11


def test_additivity_at_interior_split():
    grid = Grid1D(-3.0, 3.0, 1201)
    vals = np.cos(2.1 * grid.x) * np.exp(-0.3 * grid.x**2) + 0.0j
    whole = integrate_values(vals, grid, (-2.0, 2.5))
    parts = integrate_values(vals, grid, (-2.0, 0.5)) + integrate_values(
        vals, grid, (0.5, 2.5)
    )
    # split panels differ from the unsplit layout by one end correction,
    # so agreement is at the rule's accuracy, not machine epsilon
    assert abs(whole - parts) < 1e-10


def test_parity_cancellation_on_symmetric_grid():
    grid = Grid1D(-4.0, 4.0, 1601)
    odd_vals = (grid.x**3 * np.exp(-grid.x**2)).astype(complex)
    assert abs(integrate_values(odd_vals, grid)) < 1e-16
    # mirror intervals get mirror weights
    left = integrate_values(odd_vals, grid, (-np.inf, -1.0))
    right = integrate_values(odd_vals, grid, (1.0, np.inf))
    assert abs(left + right) < 1e-16


def test_infinite_endpoints_clamp_to_grid():
    grid = Grid1D(-5.0, 5.0, 501)
    vals = np.ones(grid.n, dtype=complex)
    assert integrate_values(vals, grid, (-np.inf, np.inf)).real == pytest.approx(10.0)
    assert integrate_values(vals, grid, (0.0, np.inf)).real == pytest.approx(5.0)


def test_snap_interval_reports_distance():
    grid = Grid1D(0.0, 1.0, 11)  # dx = 0.1
    i_lo, i_hi, snap = snap_interval(grid, 0.24, 0.76)
    assert (i_lo, i_hi) == (2, 8)
    assert snap == pytest.approx(0.04)
    i_lo, i_hi, snap = snap_interval(grid, -np.inf, np.inf)
    assert (i_lo, i_hi, snap) == (0, 10, 0.0)


def test_degenerate_and_bad_intervals():
    grid = Grid1D(0.0, 1.0, 11)
    vals = np.ones(11, dtype=complex)
    assert integrate_values(vals, grid, (0.52, 0.53)) == 0
    with pytest.raises(DomainError):
        snap_interval(grid, 0.8, 0.2)
    with pytest.raises(DomainError):
        grid.index_of(float("nan"))


def test_grid_validation():
    from pairstat import ConfigurationError

    with pytest.raises(ConfigurationError):
        Grid1D(1.0, 0.0, 100)
    with pytest.raises(ConfigurationError):
        Grid1D(0.0, 1.0, 2)
    with pytest.raises(ConfigurationError):
        Grid1D(0.0, float("inf"), 100)


def test_grid_x_is_frozen():
    grid = Grid1D(0.0, 1.0, 11)
    with pytest.raises(ValueError):
        grid.x[0] = 5.0


@settings(max_examples=40, deadline=None)
@given(
    c0=st.floats(-5, 5),
    c1=st.floats(-5, 5),
    c2=st.floats(-5, 5),
    count=st.integers(9, 120),
)
def test_quadratic_polynomials_exact_any_count(c0, c1, c2, count):
    grid = Grid1D(-1.0, 2.0, count)
    x = grid.x
    vals = (c0 + c1 * x + c2 * x**2).astype(complex)
    exact = c0 * 3.0 + c1 * (4.0 - 1.0) / 2 + c2 * (8.0 + 1.0) / 3
    got = integrate_values(vals, grid).real
    assert got == pytest.approx(exact, rel=1e-12, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(split=st.floats(-1.8, 1.8))
def test_half_plus_half_matches_whole(split):
    grid = Grid1D(-2.0, 2.0, 801)
    vals = np.exp(-(grid.x**2)) * np.exp(2j * grid.x)
    whole = integrate_values(vals, grid)
    parts = integrate_values(vals, grid, (-np.inf, split)) + integrate_values(
        vals, grid, (split, np.inf)
    )
    assert abs(whole - parts) < 1e-9
