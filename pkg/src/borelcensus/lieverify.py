"""Numerical oracle for generated-group structure and sphere transitivity.

Block skew algebras so(N_1) + ... + so(N_r) are realized as matrices,
closed under commutators, and the closure's dimension and tangent ranks
are compared against the exact predictions of the pairs module.  A
connected group is transitive on the sphere of a subspace exactly when its
tangent space at a point spans the sphere's tangent space, so transitivity
reduces to a rank test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import BACKEND, closure_kernel
from .errors import DomainError, IndeterminateError, NumericalError, ProbeDisagreementError
from .flags import InvolutionSpec, borel_descriptor
from .partitions import Partition

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_RANK_TOL",
    "SkewBasis",
    "LieClosure",
    "block_algebra",
    "closure",
    "transitive_on",
    "involution_normalizes",
    "swap_matrix",
]

DEFAULT_TOL = 1e-9
DEFAULT_RANK_TOL = 1e-8
_PROBE_SEED = 62831853  # fixed so every run draws the same test vector
_SKEW_TOL = 1e-12


@dataclass(frozen=True)
class SkewBasis:
    """Skew-symmetric matrices, orthonormal under the Frobenius product."""

    n: int
    elements: np.ndarray  # shape (k, n, n)

    @property
    def count(self):
        return self.elements.shape[0]


@dataclass(frozen=True)
class LieClosure:
    basis: SkewBasis
    dimension: int
    iterations: int
    tol: float


def block_algebra(p: Partition) -> SkewBasis:
    """Basis of the block algebra: (E_ab - E_ba)/sqrt(2) inside each block."""
    if p.min_part < 2:
        raise DomainError("block algebras need every part >= 2")
    n = p.n
    desc = borel_descriptor(p)
    mats = []
    for offset, size in zip(desc.block_offsets, p.parts):
        for a in range(offset, offset + size):
            for b in range(a + 1, offset + size):
                x = np.zeros((n, n))
                x[a, b] = 1.0 / np.sqrt(2.0)
                x[b, a] = -1.0 / np.sqrt(2.0)
                mats.append(x)
    return SkewBasis(n=n, elements=np.array(mats))


def _check_skew(elements, tol):
    worst = np.max(np.abs(elements + np.transpose(elements, (0, 2, 1))))
    if worst > tol:
        raise DomainError(f"input matrices are not skew-symmetric (residual {worst:.2e})")


def closure(b1: SkewBasis, b2: SkewBasis, tol: float = DEFAULT_TOL) -> LieClosure:
    """Close the union of two skew bases under commutators."""
    if b1.n != b2.n:
        raise DomainError(f"bases live in different dimensions: {b1.n} vs {b2.n}")
    if not tol > 0:
        raise DomainError("tol must be positive")
    n = b1.n
    _check_skew(b1.elements, max(tol, _SKEW_TOL))
    _check_skew(b2.elements, max(tol, _SKEW_TOL))
    gens = np.ascontiguousarray(
        np.concatenate([b1.elements, b2.elements]).reshape(-1, n * n), dtype=np.float64
    )
    max_rounds = 10 * (n * (n - 1) // 2)
    storage, dim, rounds = closure_kernel(gens, n, tol, max_rounds)
    if dim < 0:
        raise NumericalError(f"bracket closure did not converge in {max_rounds} rounds")
    basis = SkewBasis(n=n, elements=storage[:dim].reshape(dim, n, n).copy())
    return LieClosure(basis=basis, dimension=dim, iterations=rounds, tol=tol)


def _tangent_rank(elements, x, window, rank_tol):
    lo, hi = window
    tangent = elements @ x  # one row of velocities per basis element
    sv = np.linalg.svd(tangent[:, lo:hi], compute_uv=False)
    ambiguous = (sv >= rank_tol / 10.0) & (sv <= rank_tol)
    if np.any(ambiguous):
        raise IndeterminateError(
            f"singular value {sv[ambiguous][0]:.3e} falls inside the ambiguity band "
            f"[{rank_tol / 10.0:.1e}, {rank_tol:.1e}]"
        )
    return int(np.sum(sv > rank_tol))


def transitive_on(c: LieClosure, window, rank_tol: float = DEFAULT_RANK_TOL) -> bool:
    """Whether the closed algebra's group is transitive on the window's sphere.

    window is a half-open coordinate range (lo, hi); every basis element
    must preserve the window subspace.  The tangent rank is probed at the
    window's first standard basis vector and at a seeded random unit
    vector; the two verdicts must agree.
    """
    lo, hi = window
    n = c.basis.n
    if not (0 <= lo < hi <= n):
        raise DomainError(f"window {window} does not fit in dimension {n}")
    elements = c.basis.elements
    outside = np.r_[0:lo, hi:n].astype(int)
    if outside.size:
        spill = max(
            np.max(np.abs(elements[:, outside, :][:, :, lo:hi])),
            np.max(np.abs(elements[:, lo:hi, :][:, :, outside])),
        )
        if spill > c.tol:
            raise DomainError(f"window {window} is not invariant (spill {spill:.2e})")

    dim = hi - lo
    x1 = np.zeros(n)
    x1[lo] = 1.0
    rng = np.random.default_rng(_PROBE_SEED)
    v = rng.standard_normal(dim)
    x2 = np.zeros(n)
    x2[lo:hi] = v / np.linalg.norm(v)

    verdicts = [_tangent_rank(elements, x, window, rank_tol) == dim - 1 for x in (x1, x2)]
    if verdicts[0] != verdicts[1]:
        raise ProbeDisagreementError(
            f"tangent-rank probes disagree on window {window}: {verdicts}"
        )
    return verdicts[0]


def swap_matrix(p: Partition, inv: InvolutionSpec) -> np.ndarray:
    """Permutation matrix exchanging the two blocks coordinate-by-coordinate."""
    parts = p.parts
    a, b = inv.block_a - 1, inv.block_b - 1
    if not (0 <= a < b < len(parts)):
        raise DomainError(f"block indices {inv.block_a}, {inv.block_b} out of range")
    if parts[a] != parts[b] or parts[a] != inv.block_size:
        raise DomainError(
            f"blocks {inv.block_a} and {inv.block_b} of {p} are not both of size "
            f"{inv.block_size}"
        )
    desc = borel_descriptor(p)
    oa, ob = desc.block_offsets[a], desc.block_offsets[b]
    t = np.eye(p.n)
    for i in range(inv.block_size):
        t[oa + i, oa + i] = t[ob + i, ob + i] = 0.0
        t[oa + i, ob + i] = t[ob + i, oa + i] = 1.0
    return t


def involution_normalizes(p: Partition, inv: InvolutionSpec, tol: float = DEFAULT_TOL) -> bool:
    """Check T X T^-1 stays in the block algebra's span for every basis X."""
    t = swap_matrix(p, inv)
    if np.max(np.abs(t @ t - np.eye(p.n))) > 0:
        raise NumericalError("swap matrix is not an involution")  # pragma: no cover
    basis = block_algebra(p)
    flat = basis.elements.reshape(basis.count, -1)
    for x in basis.elements:
        y = (t @ x @ t).ravel()
        resid = y - flat.T @ (flat @ y)
        if np.linalg.norm(resid) > tol:
            return False
    return True
