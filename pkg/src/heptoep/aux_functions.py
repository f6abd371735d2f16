"""The complex phase branch and the real auxiliary functions built from it.

Everything here lives on phi in (0, pi).  The central object is the regular
branch beta(phi) of Arccos(1 - (1 - cos phi) e^{2 pi i/3}) fixed by
beta(0) = 0; writing beta = c + i b, the secular equations use

    B = Re(sin(beta) e^{-i pi/3}),    C = -Im(sin(beta) e^{-i pi/3}),

together with the polar data of alpha_2 = cos(beta) and of the square root
sin(beta) = (1 - alpha_2^2)^{1/2}:

    B_c = |alpha_2|,  psi_c = arg(alpha_2)   in (-arctan(sqrt3/2), 0),
    B_s = |sin beta|, psi_s = arg(sin beta)  in (pi/4, pi/3).

Numerically all eight quantities are computed from x = 1 - cos phi
= 2 sin^2(phi/2) through closed real forms,

    B_c   = sqrt(1 + x + x^2)
    psi_c = -arctan(sqrt3 x / (2 + x))
    B_s   = sqrt(x) ((x+1)^2 + 3)^{1/4}
    psi_s = pi/3 - delta,   delta = arctan(sqrt3 x / (4 + x)) / 2
    B     = B_s cos(delta),  C = B_s sin(delta),

which stay relatively accurate as phi -> 0 (the naive complex arithmetic
loses C entirely to cancellation below phi ~ 1e-4, since C ~ phi^3).  The
branch itself comes from w = e^{i beta} = alpha_2 + i sin(beta): c = arg w,
b = -log|w|; Re w > 0 on (0, pi), so the principal argument is the
continuous branch with beta(0) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AuxValues",
    "AuxDerivatives",
    "SmallPhaseCubics",
    "TAYLOR_WINDOW",
    "eval_beta",
    "eval_aux",
    "eval_aux_derivatives",
    "taylor_small_phi",
    "aux_arrays",
    "aux_polar_arrays",
    "aux_derivative_arrays",
]

SQRT3 = np.sqrt(3.0)
TAYLOR_WINDOW = 0.2  # cubic surrogates keep the phi^5 remainder below ~1e-5 here


@dataclass(frozen=True)
class AuxValues:
    """Values of the eight auxiliary functions at one phase."""

    c: float
    b: float
    B: float
    C: float
    Bs: float
    psis: float
    Bc: float
    psic: float


@dataclass(frozen=True)
class AuxDerivatives:
    """First derivatives of c, b, B, C at one phase."""

    dc: float
    db: float
    dB: float
    dC: float


@dataclass(frozen=True)
class SmallPhaseCubics:
    """Cubic Taylor surrogates of c, b, B, C near phi = 0."""

    c: float
    b: float
    B: float
    C: float


def _check_open_interval(phi) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    if np.any(phi <= 0.0) or np.any(phi >= np.pi):
        raise ValueError("phase outside the open interval (0, pi)")
    return phi


def aux_polar_arrays(phi):
    """(Bs, psis, Bc, psic) for an array of phases in (0, pi)."""
    phi = np.asarray(phi, dtype=float)
    x = 2.0 * np.sin(phi / 2.0) ** 2
    Bc = np.sqrt(1.0 + x + x * x)
    psic = -np.arctan(SQRT3 * x / (2.0 + x))
    Bs = np.sqrt(x) * ((x + 1.0) ** 2 + 3.0) ** 0.25
    delta = 0.5 * np.arctan(SQRT3 * x / (4.0 + x))
    psis = np.pi / 3.0 - delta
    return Bs, psis, Bc, psic


def aux_arrays(phi):
    """(c, b, B, C) for an array of phases in (0, pi); the solver kernel."""
    phi = np.asarray(phi, dtype=float)
    Bs, psis, Bc, psic = aux_polar_arrays(phi)
    delta = np.pi / 3.0 - psis
    B = Bs * np.cos(delta)
    C = Bs * np.sin(delta)
    # w = e^{i beta}; Re w > 0 on (0, pi), so principal arg is the branch
    re = Bc * np.cos(psic) - Bs * np.sin(psis)
    im = Bc * np.sin(psic) + Bs * np.cos(psis)
    c = np.arctan2(im, re)
    b = -0.5 * np.log(re * re + im * im)
    return c, b, B, C


def aux_derivative_arrays(phi):
    """(dc, db, dB, dC): derivatives via beta' = (sin phi / sin beta) e^{2 pi i/3}.

    dc + i db = (sin phi / Bs) e^{i(2 pi/3 - psis)}, and from
    D' = sin(phi) cot(beta) e^{i pi/3}:
    dB = (Bc/Bs) cos(psic - psis + pi/3) sin phi,
    dC = -(Bc/Bs) sin(psic - psis + pi/3) sin phi.
    """
    phi = np.asarray(phi, dtype=float)
    Bs, psis, Bc, psic = aux_polar_arrays(phi)
    sphi = np.sin(phi)
    ang = 2.0 * np.pi / 3.0 - psis
    dc = sphi / Bs * np.cos(ang)
    db = sphi / Bs * np.sin(ang)
    cot_ang = psic + (np.pi / 3.0 - psis)
    dB = (Bc / Bs) * np.cos(cot_ang) * sphi
    dC = -(Bc / Bs) * np.sin(cot_ang) * sphi
    return dc, db, dB, dC


def eval_beta(phi: float) -> complex:
    """The regular Arccos branch with beta(0) = 0; domain [0, pi).

    Im(beta) > 0 for phi > 0, and cos(beta) reproduces
    1 + (cos phi - 1) e^{2 pi i/3} to machine accuracy.
    """
    phi = float(phi)
    if not 0.0 <= phi < np.pi:
        raise ValueError("eval_beta requires 0 <= phi < pi")
    if phi == 0.0:
        return complex(0.0, 0.0)
    c, b, _, _ = aux_arrays(phi)
    return complex(c, b)


def eval_aux(phi: float) -> AuxValues:
    """All eight auxiliary values at a single phase in (0, pi)."""
    phi = _check_open_interval(phi)
    c, b, B, C = aux_arrays(phi)
    Bs, psis, Bc, psic = aux_polar_arrays(phi)
    return AuxValues(c=float(c), b=float(b), B=float(B), C=float(C),
                     Bs=float(Bs), psis=float(psis), Bc=float(Bc), psic=float(psic))


def eval_aux_derivatives(phi: float) -> AuxDerivatives:
    """Derivatives of c, b, B, C at a single phase in (0, pi)."""
    phi = _check_open_interval(phi)
    dc, db, dB, dC = aux_derivative_arrays(phi)
    return AuxDerivatives(dc=float(dc), db=float(db), dB=float(dB), dC=float(dC))


def taylor_small_phi(phi: float) -> SmallPhaseCubics:
    """Cubic surrogates near phi = 0 (valid window [0, TAYLOR_WINDOW]):

        c = phi/2 - phi^3/16
        b = (sqrt3/2) phi - (sqrt3/48) phi^3
        B = phi + phi^3/48
        C = (sqrt3/16) phi^3

    The phi^3 coefficient of B is +1/48: it is forced by the cubic term of
    D = sin(beta) e^{-i pi/3} (D''' (0) = 1/8 - 3 sqrt3 i/8) and equally by
    B/sin(phi) = 1 + (3/16) phi^2 + O(phi^4).
    """
    phi = float(phi)
    if not 0.0 <= phi <= TAYLOR_WINDOW:
        raise ValueError(f"phi={phi} outside the Taylor window [0, {TAYLOR_WINDOW}]")
    p3 = phi**3
    return SmallPhaseCubics(
        c=0.5 * phi - p3 / 16.0,
        b=SQRT3 / 2.0 * phi - SQRT3 / 48.0 * p3,
        B=phi + p3 / 48.0,
        C=SQRT3 / 16.0 * p3,
    )
