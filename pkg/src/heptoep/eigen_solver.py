"""Fixed-point solver for all n phase roots and the eigenvalues g(phi_m).

The odd/even secular equations are solved in the shifted variable
u = q (phi - d_m), q = (n+3)/2, where both recurrences read

    u <- arctan f(d_m + u/q)        (odd m = 2j-1)
    u <- -arctan h(d_m + u/q)       (even m = 2j)

with start u = 0 (phi = d_m).  arctan keeps |u| <= pi/2, so every iterate
stays inside the bracket (d_m - pi/(n+3), d_m + pi/(n+3)) automatically and
inside (0, pi).  The map contracts with factor < 0.8, uniformly in j and n.

Iteration gaps and the stop tolerance are measured in u; since
|phi gap| = |u gap|/q, the documented phi-gap stop criterion is satisfied a
fortiori, and the exit residual |u - map(u)| is bounded by (contraction) x
tol independent of n.

All roots of one parity are iterated together as numpy arrays; a full
spectrum at n = 1e5 takes ~0.1 s.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .secular_equations import secular_fh_arrays
from .symbol_model import eval_g, g_inverse

__all__ = [
    "SolverOptions",
    "RootResult",
    "SpectrumResult",
    "ConvergenceError",
    "BracketError",
    "InterlacingError",
    "solve_odd_root",
    "solve_even_root",
    "full_spectrum",
    "solve_roots_batch",
]

MIN_SOLVER_N = 4  # below this the solver defers to the factorization oracle


class ConvergenceError(RuntimeError):
    """Fixed-point iteration did not reach the tolerance within max_iters."""


class BracketError(RuntimeError):
    """A converged root left its bracketing interval (implementation bug)."""


class InterlacingError(RuntimeError):
    """Roots failed to be strictly increasing (implementation bug)."""


@dataclass(frozen=True)
class SolverOptions:
    max_iters: int = 60
    tol: float = 1e-14
    record_history: bool = False
    # diagnostic runs (fixed iteration budgets) set this to False
    require_convergence: bool = True

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class RootResult:
    """One converged phase root and its eigenvalue lambda = g(phi)."""

    m: int
    phi: float
    lam: float
    iters: int
    residual: float
    history: list | None = None


@dataclass(frozen=True)
class SpectrumResult:
    n: int
    roots: list  # RootResult, sorted by m (phi increasing, |lambda| increasing)
    method: str  # 'fixed_point', 'asymptotic' or 'oracle'

    @property
    def phis(self) -> np.ndarray:
        return np.array([r.phi for r in self.roots])

    def eigenvalues(self, order: str = "modulus") -> np.ndarray:
        """Eigenvalues ordered by index m ('modulus') or ascending in lambda."""
        lam = np.array([r.lam for r in self.roots])
        if order == "modulus":
            return lam
        if order == "ascending":
            return lam[::-1]
        raise ValueError(f"unknown order {order!r}")


def solve_roots_batch(m_values, n: int, opts: SolverOptions | None = None):
    """Solve the roots for an array of eigenvalue indices simultaneously.

    Returns (phi, iters, residual, history) where history is None unless
    opts.record_history, in which case it is a list of phi arrays, one per
    iteration (index 0 = the d_m start).
    """
    opts = opts or SolverOptions()
    m = np.asarray(m_values, dtype=int)
    if m.size and (m.min() < 1 or m.max() > n):
        raise ValueError("eigenvalue indices outside 1..n")
    N = n + 3.0
    q = N / 2.0
    odd = m % 2 == 1
    d = np.pi * (m + 1) / N
    u = np.zeros(m.shape)
    iters = np.zeros(m.shape, dtype=int)
    active = np.ones(m.shape, dtype=bool)
    history = [d.copy()] if opts.record_history else None

    for k in range(1, opts.max_iters + 1):
        f, h = secular_fh_arrays(d + u / q, n)
        u_new = np.where(odd, np.arctan(f), -np.arctan(h))
        gap = np.abs(u_new - u)
        u = u_new
        if history is not None:
            history.append(d + u / q)
        newly = active & (gap < opts.tol)
        iters[newly] = k
        active &= ~newly
        if not active.any():
            break
    if active.any() and opts.require_convergence:
        bad = m[active][:8].tolist()
        raise ConvergenceError(
            f"roots {bad} of n={n} not converged to {opts.tol} in {opts.max_iters} iterations")
    iters[active] = opts.max_iters

    f, h = secular_fh_arrays(d + u / q, n)
    residual = np.abs(np.where(odd, np.arctan(f), -np.arctan(h)) - u)
    phi = d + u / q
    lo, hi = d - np.pi / N, d + np.pi / N
    if np.any(phi <= lo) or np.any(phi >= hi):
        raise BracketError(f"a root of n={n} left its bracketing interval")
    return phi, iters, residual, history


def _one_root(m: int, n: int, opts: SolverOptions | None) -> RootResult:
    phi, iters, residual, history = solve_roots_batch(np.array([m]), n, opts)
    hist = [float(h[0]) for h in history] if history is not None else None
    return RootResult(m=m, phi=float(phi[0]), lam=float(eval_g(phi[0])),
                      iters=int(iters[0]), residual=float(residual[0]), history=hist)


def solve_odd_root(j: int, n: int, opts: SolverOptions | None = None) -> RootResult:
    """Root phi_{2j-1} in (pi(2j-1)/(n+3), pi(2j+1)/(n+3)), 1 <= j <= [(n+1)/2]."""
    if not 1 <= j <= (n + 1) // 2:
        raise ValueError(f"odd-equation index j={j} outside 1..{(n + 1) // 2}")
    return _one_root(2 * j - 1, n, opts)


def solve_even_root(j: int, n: int, opts: SolverOptions | None = None) -> RootResult:
    """Root phi_{2j} in (2 pi j/(n+3), 2 pi (j+1)/(n+3)), 1 <= j <= [n/2]."""
    if not 1 <= j <= n // 2:
        raise ValueError(f"even-equation index j={j} outside 1..{n // 2}")
    return _one_root(2 * j, n, opts)


def full_spectrum(n: int, opts: SolverOptions | None = None) -> SpectrumResult:
    """All n roots, sorted by index m; interlacing is verified before return.

    For n < 4 the asymptotic root count arguments do not apply and the
    factorization oracle supplies the eigenvalues instead (method 'oracle').
    """
    if n < 1:
        raise ValueError(f"matrix dimension n={n} must be >= 1")
    opts = opts or SolverOptions()
    if n < MIN_SOLVER_N:
        from .reference_oracle import bisect_spectrum

        lam_mod = bisect_spectrum(n, tol=1e-13)[::-1]  # by increasing |lambda|
        roots = [RootResult(m=i + 1, phi=float(g_inverse(l)), lam=float(l),
                            iters=0, residual=float("nan"))
                 for i, l in enumerate(lam_mod)]
        return SpectrumResult(n=n, roots=roots, method="oracle")

    m = np.arange(1, n + 1)
    phi, iters, residual, history = solve_roots_batch(m, n, opts)
    if not np.all(np.diff(phi) > 0.0):
        raise InterlacingError(f"roots of n={n} are not strictly increasing")
    lam = eval_g(phi)
    roots = []
    for i in range(n):
        hist = [float(h[i]) for h in history] if history is not None else None
        roots.append(RootResult(m=i + 1, phi=float(phi[i]), lam=float(lam[i]),
                                iters=int(iters[i]), residual=float(residual[i]),
                                history=hist))
    return SpectrumResult(n=n, roots=roots, method="fixed_point")
