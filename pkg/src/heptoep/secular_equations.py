"""Overflow-safe evaluation of the secular functions f, h and the phases F, G.

The characteristic equation of T_n(a - g(phi)) splits into

    tan(((n+3)/2) phi) = f(phi)      and      tan(((n+3)/2) phi) = 1/h(phi),

with

    f = 2 (B sin((n+3)c) + C sinh((n+3)b)) / (sin phi (cos((n+3)c) + cosh((n+3)b)))
    h = 2 (B sin((n+3)c) - C sinh((n+3)b)) / (sin phi (-cos((n+3)c) + cosh((n+3)b)))

(n+3) b exceeds 700 already for moderate n, so cosh/sinh overflow binary64;
dividing numerator and denominator by cosh((n+3)b) leaves only tanh and
sech factors, finite for every n.  Both evaluation paths agree to ~1e-15
relative wherever the direct quotient is representable.

The bracketing phases used to count and locate the roots are

    F(phi, n) = ((n+3)/2) phi - arctan f(phi)
    G(phi, n) = ((n+3)/2) phi - pi/2 + arctan h(phi),

strictly increasing in phi; F = pi j at the odd roots, G = pi j at the even
ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .aux_functions import aux_arrays

__all__ = [
    "SecularValue",
    "DIRECT_LIMIT",
    "eval_f",
    "eval_h",
    "eval_F",
    "eval_G",
    "secular_fh_arrays",
]

# largest (n+3)*b for which the printed quotient is evaluated directly;
# cosh overflows just above 710
DIRECT_LIMIT = 600.0


@dataclass(frozen=True)
class SecularValue:
    """Value of f or h together with the evaluation path that produced it."""

    value: float
    scale_note: str  # 'direct' or 'tanh_scaled'


def _sech(v):
    """1/cosh(v) without overflow for any v."""
    e = np.exp(-np.abs(v))
    return 2.0 * e / (1.0 + e * e)


def secular_fh_arrays(phi, n: int):
    """(f, h) on an array of phases, always through the cosh-normalized form."""
    phi = np.asarray(phi, dtype=float)
    N = n + 3.0
    c, b, B, C = aux_arrays(phi)
    sc = _sech(N * b)
    th = np.tanh(N * b)
    sNc = np.sin(N * c) * sc
    cNc = np.cos(N * c) * sc
    sphi = np.sin(phi)
    f = 2.0 * (B * sNc + C * th) / (sphi * (cNc + 1.0))
    h = 2.0 * (B * sNc - C * th) / (sphi * (1.0 - cNc))
    return f, h


def _fh_direct(phi: float, n: int):
    """The printed quotients, evaluated with raw sinh/cosh (no scaling)."""
    N = n + 3.0
    c, b, B, C = aux_arrays(phi)
    num_f = 2.0 * (B * np.sin(N * c) + C * np.sinh(N * b))
    num_h = 2.0 * (B * np.sin(N * c) - C * np.sinh(N * b))
    den_f = np.sin(phi) * (np.cos(N * c) + np.cosh(N * b))
    den_h = np.sin(phi) * (-np.cos(N * c) + np.cosh(N * b))
    return float(num_f / den_f), float(num_h / den_h)


def _validate(phi: float, n: int) -> float:
    phi = float(phi)
    if not 0.0 < phi < np.pi:
        raise ValueError("phase outside the open interval (0, pi)")
    if n < 1:
        raise ValueError(f"matrix dimension n={n} must be >= 1")
    return phi


def _eval_one(phi: float, n: int, pick: int) -> SecularValue:
    phi = _validate(phi, n)
    _, b, _, _ = aux_arrays(phi)
    if (n + 3.0) * float(b) <= DIRECT_LIMIT:
        return SecularValue(value=_fh_direct(phi, n)[pick], scale_note="direct")
    f, h = secular_fh_arrays(phi, n)
    return SecularValue(value=float((f, h)[pick]), scale_note="tanh_scaled")


def eval_f(phi: float, n: int) -> SecularValue:
    """f(phi) for the odd-index secular equation tan(((n+3)/2) phi) = f."""
    return _eval_one(phi, n, 0)


def eval_h(phi: float, n: int) -> SecularValue:
    """h(phi) for the even-index secular equation tan(((n+3)/2) phi) = 1/h."""
    return _eval_one(phi, n, 1)


def eval_F(phi: float, n: int) -> float:
    """F(phi, n) = ((n+3)/2) phi - arctan f(phi); equals pi j at odd roots."""
    phi = _validate(phi, n)
    f, _ = secular_fh_arrays(phi, n)
    return float((n + 3.0) / 2.0 * phi - np.arctan(f))


def eval_G(phi: float, n: int) -> float:
    """G(phi, n) = ((n+3)/2) phi - pi/2 + arctan h(phi); pi j at even roots."""
    phi = _validate(phi, n)
    _, h = secular_fh_arrays(phi, n)
    return float((n + 3.0) / 2.0 * phi - np.pi / 2.0 + np.arctan(h))
