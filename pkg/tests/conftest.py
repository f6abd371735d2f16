"""Shared fixtures: cached solver spectra and oracle references.

The oracle cache keys on (n, refinement choice) so the expensive
multi-precision refinements run once per session no matter how many tests
consume them.
"""

import numpy as np
import pytest

from heptoep.eigen_solver import SolverOptions, full_spectrum
from heptoep.reference_oracle import (bisect_spectrum, refine_spectrum_mp,
                                      reference_spectrum)


@pytest.fixture(scope="session")
def solver_cache():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = full_spectrum(n, SolverOptions())
        return cache[n]

    return get


@pytest.fixture(scope="session")
def oracle_cache():
    """Oracle eigenvalues by modulus index (m=1 closest to zero).

    get(n) refines every index with |lambda| < 1e-2 in multi-precision;
    get(n, modulus_indices=...) refines only those indices (used where a
    handful of tiny eigenvalues of a large matrix are needed).
    """
    cache = {}

    def get(n, modulus_indices=None):
        key = (n, None if modulus_indices is None else tuple(sorted(modulus_indices)))
        if key not in cache:
            if modulus_indices is None:
                cache[key] = reference_spectrum(n, mp_threshold=1e-2)[::-1]
            else:
                vals = bisect_spectrum(n)
                asc = [n + 1 - m for m in modulus_indices if abs(vals[n - m]) < 1e-2]
                cache[key] = refine_spectrum_mp(n, vals, asc)[::-1]
        return cache[key]

    return get


@pytest.fixture
def phase_grid():
    """Uniform interior grid on (0, pi) used by the property suites."""
    return np.linspace(0.0, np.pi, 10002)[1:-1]
