"""Symbol of the matrix family and everything derived directly from it.

The matrices studied here are the n x n symmetric heptadiagonal Toeplitz
matrices generated by the Laurent polynomial

    a(t) = (t - 2 + 1/t)^3,

whose seven Fourier coefficients form the diagonals.  On the unit circle the
symbol restricts to the real phase function

    g(phi) = a(e^{i phi}) = -(2 sin(phi/2))^6,

strictly decreasing from 0 to -64 on (0, pi).  Every eigenvalue is g(phi_m)
for a phase root phi_m, and the starting grid for the root solver is
d_m = pi (m+1) / (n+3).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SymbolCoefficients",
    "PhasePoint",
    "GridIndex",
    "BandedMatrix",
    "BANDWIDTH",
    "LAMBDA_MIN",
    "fourier_coefficients",
    "eval_g",
    "eval_g_derivatives",
    "g_inverse",
    "grid_point",
    "build_matrix",
]

BANDWIDTH = 3
LAMBDA_MIN = -64.0  # g(pi); the spectrum lies in (LAMBDA_MIN, 0)


@dataclass(frozen=True)
class SymbolCoefficients:
    """The seven Fourier coefficients a_{-3}..a_{3} of (t - 2 + 1/t)^3."""

    coeffs: tuple

    def __getitem__(self, k: int) -> float:
        if not -BANDWIDTH <= k <= BANDWIDTH:
            raise IndexError(f"coefficient index {k} outside [-3, 3]")
        return self.coeffs[k + BANDWIDTH]

    @property
    def total(self) -> float:
        """a(1) = sum of all coefficients (equals 0 for this symbol)."""
        return float(sum(self.coeffs))


@dataclass(frozen=True)
class PhasePoint:
    """A phase in the open interval (0, pi)."""

    phi: float

    def __post_init__(self):
        if not 0.0 < self.phi < np.pi:
            raise ValueError(f"phase {self.phi} outside the open interval (0, pi)")


@dataclass(frozen=True)
class GridIndex:
    """Grid point d_m = pi (m+1) / (n+3) attached to eigenvalue index m."""

    m: int
    n: int
    d: float

    @property
    def j(self) -> int:
        """Secular-equation counter: m = 2j-1 (odd) or m = 2j (even)."""
        return (self.m + 1) // 2

    @property
    def parity(self) -> int:
        """1 for odd m (tan = f equation), 2 for even m (tan = 1/h)."""
        return 1 if self.m % 2 == 1 else 2


@dataclass(frozen=True)
class BandedMatrix:
    """Symmetric banded storage: band[k] holds the k-th superdiagonal.

    band has shape (BANDWIDTH + 1, n); band[k, i] is entry (i, i+k) and, by
    symmetry, (i+k, i).  The trailing k entries of row k are unused padding.
    """

    n: int
    band: np.ndarray

    def toarray(self) -> np.ndarray:
        full = np.zeros((self.n, self.n))
        for k in range(BANDWIDTH + 1):
            for i in range(self.n - k):
                full[i, i + k] = self.band[k, i]
                full[i + k, i] = self.band[k, i]
        return full


def fourier_coefficients() -> SymbolCoefficients:
    """Coefficients of t^{-3}..t^{3} in (t - 2 + 1/t)^3.

    Expanding the cube gives (1, -6, 15, -20, 15, -6, 1); the expansion is
    symmetric and sums to a(1) = 0.
    """
    return SymbolCoefficients((1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0))


def eval_g(phi):
    """g(phi) = a(e^{i phi}) = -(2 sin(phi/2))^6, valid for 0 <= phi <= 2 pi."""
    phi = np.asarray(phi, dtype=float)
    out = -((2.0 * np.sin(phi / 2.0)) ** 6)
    return out if out.ndim else float(out)

def eval_g_derivatives(phi):
    """Analytic g'(phi) and g''(phi).

    g'  = -192 sin^5(phi/2) cos(phi/2)
    g'' = -96 sin^4(phi/2) (5 cos^2(phi/2) - sin^2(phi/2))
    """
    phi = np.asarray(phi, dtype=float)
    s, c = np.sin(phi / 2.0), np.cos(phi / 2.0)
    g1 = -192.0 * s**5 * c
    g2 = -96.0 * s**4 * (5.0 * c * c - s * s)
    if g1.ndim:
        return g1, g2
    return float(g1), float(g2)


def g_inverse(lam):
    """The unique phi in [0, pi] with g(phi) = lam, for lam in [-64, 0]."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam > 0.0) or np.any(lam < LAMBDA_MIN):
        raise ValueError("lambda outside the range [-64, 0] of g")
    r = (-lam) ** (1.0 / 6.0) / 2.0
    out = 2.0 * np.arcsin(np.clip(r, 0.0, 1.0))
    return out if out.ndim else float(out)


def grid_point(m: int, n: int) -> GridIndex:
    """Grid point d_m = pi (m+1)/(n+3) for eigenvalue index 1 <= m <= n.

    Odd m = 2j-1 gives d = 2 pi j/(n+3); even m = 2j gives pi (2j+1)/(n+3).
    """
    if not 1 <= m <= n:
        raise ValueError(f"eigenvalue index m={m} outside 1..{n}")
    return GridIndex(m=m, n=n, d=np.pi * (m + 1) / (n + 3))


def build_matrix(n: int) -> BandedMatrix:
    """Materialize T_n as banded storage (used by the factorization oracle)."""
    if n < 1:
        raise ValueError(f"matrix dimension n={n} must be >= 1")
    coeffs = fourier_coefficients()
    band = np.zeros((BANDWIDTH + 1, n))
    for k in range(BANDWIDTH + 1):
        band[k, : max(n - k, 0)] = coeffs[k]
    return BandedMatrix(n=n, band=band)
