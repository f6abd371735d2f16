import numpy as np
import pytest

from heptoep.symbol_model import (PhasePoint, build_matrix, eval_g,
                                  eval_g_derivatives, fourier_coefficients,
                                  g_inverse, grid_point)


def test_fourier_coefficients_match_polynomial_expansion():
    # independent oracle: convolve the coefficients of (t - 2 + 1/t) three times
    base = np.array([1.0, -2.0, 1.0])
    expanded = np.convolve(np.convolve(base, base), base)
    got = np.array(fourier_coefficients().coeffs)
    assert np.array_equal(got, expanded)
    assert got[3 + 0] == -20.0 and got[3 + 1] == 15.0
    assert got[3 + 2] == -6.0 and got[3 + 3] == 1.0


def test_fourier_coefficients_symmetric_and_sum_zero():
    c = fourier_coefficients()
    assert c.total == 0.0
    for k in range(4):
        assert c[k] == c[-k]
    with pytest.raises(IndexError):
        c[4]


def test_g_special_values():
    assert eval_g(np.pi) == -64.0
    assert eval_g(0.0) == 0.0
    assert abs(eval_g(np.pi / 3.0) - (-1.0)) < 1e-14
    assert eval_g(2.0 * np.pi) == pytest.approx(0.0, abs=1e-28)


def test_g_equals_symbol_on_circle(phase_grid):
    coeffs = fourier_coefficients()
    ks = np.arange(-3, 4)
    vals = np.exp(1j * np.outer(phase_grid, ks)) @ np.array([coeffs[k] for k in ks])
    g = eval_g(phase_grid)
    assert np.max(np.abs(vals.real - g)) < 1e-12
    assert np.max(np.abs(vals.imag)) < 1e-12


def test_g_strictly_decreasing(phase_grid):
    g = eval_g(phase_grid)
    assert np.all(np.diff(g) < 0.0)
    assert g.min() > -64.0 and g.max() < 0.0


def test_g_derivatives_at_pi():
    g1, g2 = eval_g_derivatives(np.pi)
    assert g1 == pytest.approx(0.0, abs=1e-13)
    assert g2 > 0.0


def test_g_derivatives_match_finite_differences():
    # below phi ~ 0.06 the h = 1e-5 central difference itself carries more
    # than 1e-6 relative truncation (g' ~ -6 phi^5), so the strict check
    # starts there; the small-phi regime is covered with a scaled step below
    h = 1e-5
    grid = np.linspace(0.06, np.pi - 1e-3, 301)
    g1, g2 = eval_g_derivatives(grid)
    fd1 = (eval_g(grid + h) - eval_g(grid - h)) / (2.0 * h)
    assert np.max(np.abs(fd1 - g1) / np.abs(g1)) < 1e-6
    # second difference needs a larger step: its rounding error is eps |g|/h^2
    h2 = 1e-4
    fd2 = (eval_g(grid + h2) - 2.0 * eval_g(grid) + eval_g(grid - h2)) / h2**2
    assert np.max(np.abs(fd2 - g2) / np.maximum(np.abs(g2), 1e-2)) < 1e-4


def test_g_derivative_at_small_phase():
    g1, _ = eval_g_derivatives(0.01)
    h = 1e-7  # keeps the oracle's own truncation ~3 h^2/phi^2 below 1e-9
    fd = (eval_g(0.01 + h) - eval_g(0.01 - h)) / (2.0 * h)
    assert abs(fd - g1) / abs(g1) < 1e-6


def test_g_inverse_roundtrip():
    phis = np.linspace(1e-3, np.pi, 50)
    back = g_inverse(eval_g(phis))
    assert np.max(np.abs(back - phis)) < 1e-9
    with pytest.raises(ValueError):
        g_inverse(1.0)


def test_grid_point_values():
    gp = grid_point(1, 197)
    assert gp.d == pytest.approx(np.pi / 100.0, rel=1e-15)
    assert gp.parity == 1 and gp.j == 1
    # odd m = 2j-1 gives 2 pi j/(n+3)
    for j in (1, 3, 7):
        assert grid_point(2 * j - 1, 64).d == pytest.approx(2 * np.pi * j / 67.0, rel=1e-15)
    # even m = 2j gives pi (2j+1)/(n+3)
    for j in (1, 4):
        assert grid_point(2 * j, 64).d == pytest.approx(np.pi * (2 * j + 1) / 67.0, rel=1e-15)
    assert grid_point(64, 64).d < np.pi


@pytest.mark.parametrize("m,n", [(0, 8), (9, 8), (-1, 8)])
def test_grid_point_range_errors(m, n):
    with pytest.raises(ValueError):
        grid_point(m, n)


def test_phase_point_validation():
    PhasePoint(1.0)
    for bad in (0.0, np.pi, -0.5, 4.0):
        with pytest.raises(ValueError):
            PhasePoint(bad)


def test_build_matrix_small_cases():
    assert np.array_equal(build_matrix(1).toarray(), [[-20.0]])
    assert np.array_equal(build_matrix(2).toarray(), [[-20.0, 15.0], [15.0, -20.0]])
    row = build_matrix(4).toarray()[0]
    assert np.array_equal(row, [-20.0, 15.0, -6.0, 1.0])
    with pytest.raises(ValueError):
        build_matrix(0)


def test_build_matrix_symmetric_toeplitz():
    full = build_matrix(9).toarray()
    assert np.array_equal(full, full.T)
    coeffs = fourier_coefficients()
    for i in range(9):
        for j in range(9):
            expect = coeffs[j - i] if abs(j - i) <= 3 else 0.0
            assert full[i, j] == expect
