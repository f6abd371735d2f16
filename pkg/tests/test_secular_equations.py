import numpy as np
import pytest

from heptoep.aux_functions import aux_arrays
from heptoep.secular_equations import (DIRECT_LIMIT, eval_F, eval_G, eval_f,
                                       eval_h, secular_fh_arrays)
from heptoep.secular_equations import _fh_direct


def test_direct_and_scaled_paths_agree():
    # (n+3) b < 600 here, so both evaluation routes are representable
    for phi in (0.3, 0.5, 1.1, 2.0):
        for n in (8, 64, 200):
            f_direct, h_direct = _fh_direct(phi, n)
            f_scaled, h_scaled = secular_fh_arrays(phi, n)
            assert abs(f_direct - float(f_scaled)) <= 1e-12 * abs(f_direct)
            assert abs(h_direct - float(h_scaled)) <= 1e-12 * abs(h_direct)


def test_scale_note_records_path():
    assert eval_f(0.5, 64).scale_note == "direct"
    assert eval_h(0.5, 64).scale_note == "direct"
    assert eval_f(3.0, 10**6).scale_note == "tanh_scaled"
    _, b, _, _ = aux_arrays(3.0)
    assert (10**6 + 3) * float(b) > DIRECT_LIMIT


def test_overflow_safety_at_huge_n():
    f = eval_f(3.0, 10**6)
    h = eval_h(3.0, 10**6)
    assert np.isfinite(f.value) and np.isfinite(h.value)


def test_f_diverges_toward_pi():
    # sin(phi) in the denominator forces |f| -> infinity at fixed n
    vals = [abs(eval_f(np.pi - eps, 16).value) for eps in (1e-2, 1e-4, 1e-6)]
    assert vals[0] < vals[1] < vals[2]
    assert vals[2] > 1e4


def test_f_large_depth_limit():
    # once tanh((n+3)b) is 1 to machine accuracy, f collapses to 2C/sin(phi)
    phi, n = 2.0, 512
    _, _, _, C = aux_arrays(phi)
    f = eval_f(phi, n).value
    assert abs(f - 2.0 * float(C) / np.sin(phi)) <= 1e-10 * abs(f)


def test_h_plus_f_exponentially_small():
    # f + h = 4 B sin((n+3)c) sech / (...) is O(e^{-(n+3)b}) / sin(phi)
    phi, n = 0.5, 128
    _, b, _, _ = aux_arrays(phi)
    f = eval_f(phi, n).value
    h = eval_h(phi, n).value
    assert abs(h + f) <= 10.0 * np.exp(-(n + 3) * float(b)) / np.sin(phi)


def test_h_negative_where_cosine_term_vanishes():
    # at (n+3) c(phi) = pi the numerator of h reduces to -C sinh < 0
    n = 40
    target = np.pi / (n + 3)
    lo, hi = 1e-6, np.pi - 1e-6
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if float(aux_arrays(mid)[0]) < target:
            lo = mid
        else:
            hi = mid
    phi = 0.5 * (lo + hi)
    assert abs(float(aux_arrays(phi)[0]) * (n + 3) - np.pi) < 1e-9
    assert eval_h(phi, n).value < 0.0


def test_domain_validation():
    for bad in (0.0, np.pi, -1.0):
        with pytest.raises(ValueError):
            eval_f(bad, 8)
        with pytest.raises(ValueError):
            eval_G(bad, 8)
    with pytest.raises(ValueError):
        eval_h(1.0, 0)


def test_F_below_pi_at_left_bracket():
    for n in (16, 64, 200):
        assert eval_F(np.pi / (n + 3), n) < np.pi


def test_F_and_G_strictly_increasing():
    for n in (16, 64):
        grid = np.linspace(np.pi / (n + 3), np.pi - 1e-6, 4001)
        F = np.array([eval_F(p, n) for p in grid])
        assert np.all(np.diff(F) > 0.0)
        gridG = np.linspace(2 * np.pi / (n + 3), np.pi - 1e-6, 4001)
        G = np.array([eval_G(p, n) for p in gridG])
        assert np.all(np.diff(G) > 0.0)


def test_F_deterministic():
    assert eval_F(0.7, 32) == eval_F(0.7, 32)


@pytest.mark.parametrize("n", [64, 200, 1024])
def test_phase_map_derivative_bound(n):
    # |(2/(n+3)) f'/(1+f^2)| = |d/dphi (2 arctan f)/(n+3)| < 0.8 + 1e-3,
    # estimated by centered differences of arctan f (and likewise for h)
    h_step = 1e-6
    grid = np.linspace(np.pi / (n + 3) + 1e-5, np.pi - 1e-4, 1500)
    f_hi, h_hi = secular_fh_arrays(grid + h_step, n)
    f_lo, h_lo = secular_fh_arrays(grid - h_step, n)
    slope_f = (np.arctan(f_hi) - np.arctan(f_lo)) / (2.0 * h_step) * 2.0 / (n + 3)
    assert np.max(np.abs(slope_f)) < 0.8 + 1e-3
    mask = grid >= 2 * np.pi / (n + 3) + 1e-5
    slope_h = (np.arctan(h_hi) - np.arctan(h_lo)) / (2.0 * h_step) * 2.0 / (n + 3)
    assert np.max(np.abs(slope_h[mask])) < 0.8 + 1e-3
