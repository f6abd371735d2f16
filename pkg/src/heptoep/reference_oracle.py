"""Independent ground truth for the spectrum.

Two routes that share nothing with the secular-equation machinery:

* inertia counting: the number of eigenvalues of T_n below a shift equals
  the number of negative pivots of the symmetric banded LDL^T factorization
  of T_n - lambda I (O(n) per shift, no pivoting needed for counting), and
  bisection on the count brackets every eigenvalue individually;

* the determinant identity: det T_n(a - g(phi)) factors into two 3x3
  determinants of Chebyshev-family values (V/W for even n, U/Q for odd n)
  at the arguments cos(phi), cos(beta), cos(gamma), divided by the squared
  Vandermonde of those arguments.  The Chebyshev values at the complex
  arguments are evaluated through the closed trig forms with per-column
  exponential scaling, so only the log-magnitude grows with n.

binary64 inertia bisection carries an absolute error floor of roughly
1e-14-1e-13 (machine epsilon times the matrix scale), which destroys the
*relative* accuracy of the eigenvalues near zero; refine_spectrum_mp redoes
the affected indices with multi-precision arithmetic (gmpy2), after which
values are exact to a float64 rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
import numpy as np

from .aux_functions import eval_beta
from .symbol_model import LAMBDA_MIN, fourier_coefficients, grid_point

__all__ = [
    "EigenCount",
    "ChebDetValue",
    "ORACLE_CAP",
    "ldlt_negcount",
    "negcount_array",
    "bisect_spectrum",
    "refine_spectrum_mp",
    "reference_spectrum",
    "chebyshev_det",
    "det_root_residual",
]

ORACLE_CAP = 4096        # largest n the reporting layer bisects by default
BISECT_LO = LAMBDA_MIN - 1e-6
MP_PRECISION = 192       # bits; leaves ~40 spare decimal digits below float64


@dataclass(frozen=True)
class EigenCount:
    """Number of eigenvalues of T_n strictly below the shift lam."""

    lam: float
    count: int


@dataclass(frozen=True)
class ChebDetValue:
    """det T_n(a - g(phi)) as log-magnitude plus a unit phase factor."""

    log_magnitude: float
    sign_or_phase: complex
    raw_ok: bool  # exp(log_magnitude) representable in binary64

    @property
    def value(self) -> complex:
        return self.sign_or_phase * np.exp(self.log_magnitude)


def negcount_array(n: int, lams) -> np.ndarray:
    """Negative-pivot counts of T_n - lam I for an array of shifts at once.

    The factorization is streamed row by row with a 4-row working window;
    all arithmetic is elementwise over the shift axis.  Zero pivots are
    perturbed by 1e-30 relative to the row scale.
    """
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    a = fourier_coefficients()
    a0, a1, a2, a3 = a[0], a[1], a[2], a[3]
    nl = lams.shape[0]
    tiny = 1e-30 * (1.0 + np.abs(lams))

    def fresh(idx: int) -> list:
        if idx >= n:
            return [np.ones(nl), np.zeros(nl), np.zeros(nl), np.zeros(nl)]
        return [a0 - lams,
                np.full(nl, a1 if idx + 1 < n else 0.0),
                np.full(nl, a2 if idx + 2 < n else 0.0),
                np.full(nl, a3 if idx + 3 < n else 0.0)]

    rows = [fresh(i) for i in range(4)]
    count = np.zeros(nl, dtype=int)
    for i in range(n):
        r0 = rows[0]
        d = np.where(r0[0] == 0.0, tiny, r0[0])
        count += d < 0.0
        l1 = r0[1] / d
        l2 = r0[2] / d
        l3 = r0[3] / d
        r1, r2, r3 = rows[1], rows[2], rows[3]
        r1[0] -= l1 * r0[1]
        r1[1] -= l1 * r0[2]
        r1[2] -= l1 * r0[3]
        r2[0] -= l2 * r0[2]
        r2[1] -= l2 * r0[3]
        r3[0] -= l3 * r0[3]
        rows = [r1, r2, r3, fresh(i + 4)]
    return count


def ldlt_negcount(n: int, lam: float) -> EigenCount:
    """Inertia count at a single shift."""
    if n < 1:
        raise ValueError(f"matrix dimension n={n} must be >= 1")
    return EigenCount(lam=float(lam), count=int(negcount_array(n, [lam])[0]))


def bisect_spectrum(n: int, tol: float = 1e-12) -> np.ndarray:
    """All n eigenvalues, ascending, each bracketed to width <= tol.

    Runs n simultaneous bisections of the count function over
    [-64 - 1e-6, 0]; binary64 accuracy only (see refine_spectrum_mp).
    """
    if n < 1:
        raise ValueError(f"matrix dimension n={n} must be >= 1")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    lo = np.full(n, BISECT_LO)
    hi = np.zeros(n)
    want = np.arange(1, n + 1)
    rounds = int(np.ceil(np.log2((0.0 - BISECT_LO) / tol)))
    for _ in range(rounds):
        mid = 0.5 * (lo + hi)
        below = negcount_array(n, mid) >= want
        hi = np.where(below, mid, hi)
        lo = np.where(below, lo, mid)
    return 0.5 * (lo + hi)


def _negcount_mp(n: int, lam) -> int:
    """Inertia count with gmpy2 scalars (lam is an mpfr)."""
    a0, a1, a2, a3 = gmpy2.mpfr(-20), gmpy2.mpfr(15), gmpy2.mpfr(-6), gmpy2.mpfr(1)
    zero = gmpy2.mpfr(0)
    tiny = gmpy2.mpfr("1e-300")

    def fresh(idx):
        if idx >= n:
            return [gmpy2.mpfr(1), zero, zero, zero]
        return [a0 - lam,
                a1 if idx + 1 < n else zero,
                a2 if idx + 2 < n else zero,
                a3 if idx + 3 < n else zero]

    rows = [fresh(i) for i in range(4)]
    count = 0
    for i in range(n):
        r0 = rows[0]
        d = r0[0] if r0[0] != 0 else tiny
        if d < 0:
            count += 1
        l1, l2, l3 = r0[1] / d, r0[2] / d, r0[3] / d
        r1, r2, r3 = rows[1], rows[2], rows[3]
        r1[0] -= l1 * r0[1]
        r1[1] -= l1 * r0[2]
        r1[2] -= l1 * r0[3]
        r2[0] -= l2 * r0[2]
        r2[1] -= l2 * r0[3]
        r3[0] -= l3 * r0[3]
        rows = [r1, r2, r3, fresh(i + 4)]
    return count


def _mp_bisect_index(n: int, k: int, lo, hi, rel_tol: float, max_iter: int = 420):
    """Bisect the k-th smallest eigenvalue (1-based) inside [lo, hi] (mpfr)."""
    while hi - lo > rel_tol * max(abs(lo), abs(hi)):
        mid = (lo + hi) / 2
        if _negcount_mp(n, mid) >= k:
            hi = mid
        else:
            lo = mid
        max_iter -= 1
        if max_iter <= 0:
            break
    return (lo + hi) / 2


def refine_spectrum_mp(n: int, values: np.ndarray, indices, rel_tol: float = 1e-20,
                       seed_halfwidth: float = 4e-9) -> np.ndarray:
    """Redo the listed ascending indices (1-based) in multi-precision.

    Each index starts from a bracket of +-seed_halfwidth around its binary64
    value (generously above the binary64 floor) whose counts are verified
    and widened if needed, then bisects to rel_tol before rounding back.
    """
    out = np.array(values, dtype=float)
    with gmpy2.context(precision=MP_PRECISION):
        for k in sorted(set(int(i) for i in indices)):
            if not 1 <= k <= n:
                raise ValueError(f"ascending index {k} outside 1..{n}")
            est = gmpy2.mpfr(out[k - 1])
            half = gmpy2.mpfr(seed_halfwidth)
            lo, hi = est - half, min(est + half, gmpy2.mpfr(0))
            for _ in range(8):
                if _negcount_mp(n, lo) < k <= _negcount_mp(n, hi):
                    break
                half *= 16
                lo, hi = est - half, min(est + half, gmpy2.mpfr(0))
            else:
                lo, hi = gmpy2.mpfr(BISECT_LO), gmpy2.mpfr(0)
            out[k - 1] = float(_mp_bisect_index(n, k, lo, hi, rel_tol))
    return out


def reference_spectrum(n: int, tol: float = 1e-12, mp_threshold: float = 1e-2,
                       mp_indices=None) -> np.ndarray:
    """Ascending eigenvalues with relative accuracy restored near zero.

    Indices whose binary64 value has modulus below mp_threshold (or, if
    given, exactly mp_indices) are recomputed in multi-precision.
    """
    vals = bisect_spectrum(n, tol=tol)
    if mp_indices is None:
        mp_indices = [k for k in range(1, n + 1) if abs(vals[k - 1]) < mp_threshold]
    return refine_spectrum_mp(n, vals, mp_indices) if len(mp_indices) else vals


# ---------------------------------------------------------------------------
# Chebyshev determinant identity
# ---------------------------------------------------------------------------

def _cos_scaled(K: float, c: float, b: float, s: float) -> complex:
    """cos(K (c + i b)) e^{-s}, assembled from damped exponentials."""
    return 0.5 * (np.exp(1j * K * c - K * b - s) + np.exp(-1j * K * c + K * b - s))


def _sin_scaled(K: float, c: float, b: float, s: float) -> complex:
    return (np.exp(1j * K * c - K * b - s) - np.exp(-1j * K * c + K * b - s)) / 2j


def _det3(cols) -> complex:
    m = np.array(cols, dtype=complex).T
    return complex(np.linalg.det(m))


def chebyshev_det(n: int, phi: float) -> ChebDetValue:
    """det T_n(a - g(phi)) via the Chebyshev 3x3-determinant identity.

    Even n = 2p pairs third/fourth-kind values (V, W) on rows p..p+2; odd
    n = 2p+1 pairs second/first-kind values, U on rows p..p+2 and Q on rows
    p+1..p+3.  Arguments are cos(phi), cos(beta), cos(gamma = conj beta);
    the beta/gamma columns are scaled by e^{-Kmax b} entrywise, so the only
    large number is the returned log-magnitude.
    """
    phi = float(phi)
    if not 0.0 < phi < np.pi:
        raise ValueError("phase outside the open interval (0, pi)")
    if n < 2:
        raise ValueError("the determinant identity needs n >= 2")
    beta = eval_beta(phi)
    c, b = beta.real, beta.imag
    a1 = np.cos(phi)
    a2 = complex(np.cos(beta))
    a3 = np.conj(a2)
    seps = (abs(a1 - a2), abs(a2 - a3), abs(a1 - a3))
    if min(seps) <= 1e-14:
        raise ArithmeticError(f"Chebyshev arguments collide at phi={phi}")
    vdm = (a2 - a1) * (a3 - a1) * (a3 - a2)

    p = n // 2
    if n % 2 == 0:
        smax = (p + 2.5) * b
        cb2 = complex(np.cos(beta / 2.0))
        sb2 = complex(np.sin(beta / 2.0))
        colV_phi, colV_b = [], []
        colW_phi, colW_b = [], []
        for i in range(3):
            K = p + i + 0.5
            colV_phi.append(np.cos(K * phi) / np.cos(phi / 2.0))
            colW_phi.append(np.sin(K * phi) / np.sin(phi / 2.0))
            colV_b.append(_cos_scaled(K, c, b, smax) / cb2)
            colW_b.append(_sin_scaled(K, c, b, smax) / sb2)
        detV = _det3([colV_phi, colV_b, np.conj(colV_b)])
        detW = _det3([colW_phi, colW_b, np.conj(colW_b)])
        z = detV * detW / (vdm * vdm) / 64.0
        scale = 4.0 * smax
    else:
        smax = (p + 3.0) * b
        sb = complex(np.sin(beta))
        colU_phi, colU_b = [], []
        colQ_phi, colQ_b = [], []
        for i in range(3):
            KU = p + i + 1.0
            KQ = p + i + 1.0
            colU_phi.append(np.sin(KU * phi) / np.sin(phi))
            colQ_phi.append(np.cos(KQ * phi))
            colU_b.append(_sin_scaled(KU, c, b, smax) / sb)
            colQ_b.append(_cos_scaled(KQ, c, b, smax))
        detU = _det3([colU_phi, colU_b, np.conj(colU_b)])
        detQ = _det3([colQ_phi, colQ_b, np.conj(colQ_b)])
        z = -detU * detQ / (vdm * vdm) / 8.0
        scale = 4.0 * smax

    mag = abs(z)
    if mag == 0.0:
        return ChebDetValue(log_magnitude=-np.inf, sign_or_phase=1.0 + 0j, raw_ok=True)
    log_mag = float(np.log(mag) + scale)
    return ChebDetValue(log_magnitude=log_mag, sign_or_phase=z / mag,
                        raw_ok=log_mag < 708.0)


def det_root_residual(n: int, phi: float, m: int, samples: int = 41) -> float:
    """|det| at phi, normalized by the largest |det| on the index-m bracket.

    The bracket is (d_m - pi/(n+3), d_m + pi/(n+3)); at a true root the
    ratio collapses to the rounding floor.
    """
    d = grid_point(m, n).d
    w = np.pi / (n + 3.0)
    grid = np.linspace(d - w * (1 - 1e-9), d + w * (1 - 1e-9), samples)
    logs = [chebyshev_det(n, p).log_magnitude for p in grid]
    here = chebyshev_det(n, phi).log_magnitude
    return float(np.exp(here - max(logs)))
