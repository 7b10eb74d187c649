"""Bracket-closure kernel with a switchable numba/numpy backend.

The closure loop is the package's one hot path (the acceptance sweep runs
it over every pair of partitions of n <= 10).  The same source function is
compiled with numba's @njit by default; setting BORELCENSUS_NO_NUMBA=1 in
the environment selects the uncompiled pure-numpy path.  Both backends
execute identical statements in identical order, so results match bit for
bit.  benchmarks/closure_bench.py times one against the other.
"""

import os

import numpy as np


def _closure_impl(gens, n, tol, max_rounds):
    """Orthonormal Frobenius basis of the Lie algebra generated by gens.

    gens is a (k, n*n) array of flattened skew matrices.  Candidates pass
    two rounds of Gram-Schmidt against the current basis and join it when
    the residual norm exceeds tol; each round brackets the newly accepted
    elements against everything accepted so far (breadth-first, fixed
    order, hence deterministic).  Returns (basis storage, dimension,
    rounds); dimension is -1 if max_rounds was exhausted, which is
    impossible in exact arithmetic and guards float pathology only.
    """
    nn = n * n
    cap = n * (n - 1) // 2
    basis = np.zeros((cap, nn))
    m = 0
    for idx in range(gens.shape[0]):
        v = gens[idx].copy()
        for _ in range(2):
            if m > 0:
                coef = basis[:m] @ v
                v = v - basis[:m].T @ coef
        nrm = np.sqrt(v @ v)
        if nrm > tol and m < cap:
            basis[m] = v / nrm
            m += 1
    rounds = 0
    lo = 0
    hi = m
    while lo < hi:
        rounds += 1
        if rounds > max_rounds:
            return basis, -1, rounds
        for i in range(lo, hi):
            x = basis[i].reshape(n, n)
            for j in range(hi):
                y = basis[j].reshape(n, n)
                z = x @ y - y @ x
                v = z.flatten()
                for _ in range(2):
                    if m > 0:
                        coef = basis[:m] @ v
                        v = v - basis[:m].T @ coef
                nrm = np.sqrt(v @ v)
                if nrm > tol and m < cap:
                    basis[m] = v / nrm
                    m += 1
        lo = hi
        hi = m
    return basis, m, rounds


closure_kernel_numpy = _closure_impl

if os.environ.get("BORELCENSUS_NO_NUMBA", "") == "1":
    BACKEND = "numpy"
    closure_kernel = _closure_impl
else:
    try:
        from numba import njit

        BACKEND = "numba"
        closure_kernel = njit(cache=True)(_closure_impl)
    except ImportError:  # pragma: no cover - numba is a declared dependency
        BACKEND = "numpy"
        closure_kernel = _closure_impl
