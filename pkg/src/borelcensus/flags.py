"""Classification of orthogonal partial flags and maximal block subgroups.

A flag class is determined by its partition's multiplicity profile; the
Weyl group of the associated block subgroup O(N_1) x ... x O(N_r) is the
product of symmetric groups permuting equal-size blocks.  This module
computes the profile, the equivalence test, orbit lengths, Weyl
descriptors, the class census, the static classification of connected
groups transitive on spheres, and the fixed subspaces contributing to
nodal sets.

Block indices exposed here (InvolutionSpec, phi_indices, nodal subspaces)
are 1-based positions in the canonical non-decreasing partition.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .partitions import (
    Partition,
    count_p,
    count_p_ge2,
    count_q,
    count_q_ge2,
    count_r,
    count_r_ge2,
    enumerate_partitions,
)

__all__ = [
    "MultiplicityProfile",
    "InvolutionSpec",
    "WeylDescriptor",
    "BorelDescriptor",
    "SignRep",
    "FixedSubspaceSpec",
    "ClassCensus",
    "profile",
    "phi_indices",
    "equivalent",
    "orbit_length",
    "weyl",
    "nontrivial_factors",
    "class_census",
    "borel_classification",
    "nodal_subspaces",
    "borel_descriptor",
]


@dataclass(frozen=True)
class MultiplicityProfile:
    """Part value -> multiplicity, the complete flag-equivalence invariant.

    counts holds (value, multiplicity) pairs sorted by value; values not
    listed have multiplicity 0.
    """

    n: int
    counts: tuple

    def multiplicity(self, value: int) -> int:
        for v, m in self.counts:
            if v == value:
                return m
        return 0

    @property
    def psi(self) -> dict:
        return dict(self.counts)


@dataclass(frozen=True)
class InvolutionSpec:
    """A transposition of two equal-size blocks (1-based block positions)."""

    block_a: int
    block_b: int
    block_size: int

    def __post_init__(self):
        if not (1 <= self.block_a < self.block_b):
            raise DomainError("need 1 <= block_a < block_b")
        if self.block_size < 1:
            raise DomainError("block_size must be positive")


@dataclass(frozen=True)
class WeylDescriptor:
    """Product-of-symmetric-groups structure of the normalizer quotient."""

    factors: tuple  # ((part value, multiplicity), ...) sorted by value
    order: int
    nontrivial: bool
    involutions: tuple  # one block swap per adjacent equal pair


@dataclass(frozen=True)
class BorelDescriptor:
    """A maximal block subgroup in its standard frame."""

    partition: Partition
    kind: str  # "full" -> O(N_j) blocks, "connected" -> SO(N_j) blocks
    block_offsets: tuple  # starting coordinate of each block

    @property
    def lie_dimension(self) -> int:
        return sum(v * (v - 1) // 2 for v in self.partition.parts)


@dataclass(frozen=True)
class SignRep:
    """Sign character of the Weyl group: one delta per factor of multiplicity >= 2.

    deltas are ordered by part value; 1 antisymmetrizes the factor, 0 keeps
    it symmetric.  Factors of multiplicity 1 admit only the trivial
    character and carry no entry.
    """

    deltas: tuple

    def __post_init__(self):
        deltas = tuple(int(d) for d in self.deltas)
        for d in deltas:
            if d not in (0, 1):
                raise DomainError("deltas must be 0 or 1")
        object.__setattr__(self, "deltas", deltas)

    @property
    def trivial(self) -> bool:
        return all(d == 0 for d in self.deltas)


@dataclass(frozen=True)
class FixedSubspaceSpec:
    """Fixed subspace of a signed block swap; codimension equals the block size."""

    block_a: int
    block_b: int
    codimension: int


@dataclass(frozen=True)
class ClassCensus:
    """Flag-class counts for one n, split by Weyl-group triviality."""

    n: int
    total: int
    trivial_weyl: int
    nontrivial_weyl: int
    total_ge2: int
    trivial_weyl_ge2: int
    nontrivial_weyl_ge2: int


def profile(p: Partition) -> MultiplicityProfile:
    """Multiplicity profile of a partition (count of each part value)."""
    return MultiplicityProfile(n=p.n, counts=tuple(sorted(Counter(p.parts).items())))


def phi_indices(p: Partition, value: int) -> frozenset:
    """1-based positions of the blocks of the given size; empty if absent."""
    return frozenset(j + 1 for j, v in enumerate(p.parts) if v == value)


def equivalent(p1: Partition, p2: Partition) -> bool:
    """Whether two partitions define equivalent flags (conjugate subgroups)."""
    if p1.n != p2.n:
        raise DomainError(f"partitions of different numbers: {p1.n} vs {p2.n}")
    return profile(p1) == profile(p2)


def orbit_length(p: Partition) -> int:
    """Length of the index-permutation orbit: r! / prod over values of mult!."""
    num = math.factorial(p.length)
    for _, m in profile(p).counts:
        num //= math.factorial(m)
    return num


def weyl(p: Partition) -> WeylDescriptor:
    """Weyl descriptor of the flag: factors, order, canonical involutions."""
    counts = profile(p).counts
    order = 1
    for _, m in counts:
        order *= math.factorial(m)
    parts = p.parts
    invs = tuple(
        InvolutionSpec(block_a=j, block_b=j + 1, block_size=parts[j - 1])
        for j in range(1, len(parts))
        if parts[j - 1] == parts[j]
    )
    return WeylDescriptor(
        factors=counts,
        order=order,
        nontrivial=order >= 2,
        involutions=invs,
    )


def nontrivial_factors(p: Partition) -> tuple:
    """The Weyl factors with multiplicity >= 2, ordered by part value."""
    return tuple((v, m) for v, m in profile(p).counts if m >= 2)


def _recount(parts_list):
    nontrivial = sum(1 for q in parts_list if len(set(q.parts)) < q.length)
    return len(parts_list), nontrivial


def class_census(n: int) -> ClassCensus:
    """Census of flag classes of n, recounted by enumeration as a safety net.

    The closed-form counts (P, Q, R and the parts>=2 triple) are compared
    against a direct enumeration; a mismatch raises.  Enumeration makes
    this O(P(n)), so the census is a desk-scale operation.
    """
    total, trivial = count_p(n), count_q(n)
    if n >= 2:
        total2, trivial2 = count_p_ge2(n), count_q_ge2(n)
    else:
        total2 = trivial2 = 0

    all_parts = enumerate_partitions(n, 1, False)
    etotal, enontrivial = _recount(all_parts)
    ge2_parts = [q for q in all_parts if q.min_part >= 2]
    etotal2, enontrivial2 = _recount(ge2_parts)
    expected = (total, count_r(n), total2, (total2 - trivial2) if n >= 2 else 0)
    got = (etotal, enontrivial, etotal2, enontrivial2)
    if expected != got:
        raise RuntimeError(f"census recount mismatch at n={n}: {expected} vs {got}")

    return ClassCensus(
        n=n,
        total=total,
        trivial_weyl=trivial,
        nontrivial_weyl=total - trivial,
        total_ge2=total2,
        trivial_weyl_ge2=trivial2,
        nontrivial_weyl_ge2=total2 - trivial2,
    )


def borel_classification(n: int) -> list:
    """Connected groups acting transitively on the sphere of R^n, as name pairs.

    Static lookup keyed on the parity of n and s = n/2: (SO(n), SO(n-1))
    always; (G2, SU(3)) at n = 7; (SU(s), SU(s-1)) for even n with s >= 2;
    (Sp(s/2), Sp(s/2 - 1)) when additionally s is even; the two spinor
    pairs at n = 16 and n = 8.  Names are opaque strings.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"the sphere classification needs n >= 2, got {n!r}")
    out = [(f"SO({n})", f"SO({n - 1})")]
    if n == 7:
        out.append(("G2", "SU(3)"))
    if n % 2 == 0:
        s = n // 2
        if s >= 2:
            out.append((f"SU({s})", f"SU({s - 1})"))
            if s % 2 == 0:
                out.append((f"Sp({s // 2})", f"Sp({s // 2 - 1})"))
    if n == 16:
        out.append(("Spin(9)", "Spin(7)"))
    if n == 8:
        out.append(("Spin(7)", "G2"))
    return out


def nodal_subspaces(p: Partition, rho: SignRep) -> list:
    """Fixed subspaces of the signed block swaps, one per transposition.

    For every Weyl factor carrying delta = 1 and every unordered pair of
    blocks of that size, the swap fixes the subspace where the two blocks
    agree coordinate-wise; its codimension is the block size.
    """
    factors = nontrivial_factors(p)
    if not factors:
        raise DomainError("the Weyl group is trivial; no signed swaps exist")
    if len(rho.deltas) != len(factors):
        raise DomainError(
            f"sign rep has {len(rho.deltas)} deltas but the partition has "
            f"{len(factors)} nontrivial Weyl factors"
        )
    out = []
    for (value, _m), delta in zip(factors, rho.deltas):
        if delta != 1:
            continue
        for a, b in combinations(sorted(phi_indices(p, value)), 2):
            out.append(FixedSubspaceSpec(block_a=a, block_b=b, codimension=value))
    return out


def borel_descriptor(p: Partition, kind: str = "full") -> BorelDescriptor:
    """Standard-frame descriptor; "connected" demands every block size >= 2."""
    if kind not in ("full", "connected"):
        raise DomainError(f"kind must be 'full' or 'connected', got {kind!r}")
    if kind == "connected" and p.min_part < 2:
        raise DomainError("connected block groups need every part >= 2")
    offsets, acc = [], 0
    for v in p.parts:
        offsets.append(acc)
        acc += v
    return BorelDescriptor(partition=p, kind=kind, block_offsets=tuple(offsets))
