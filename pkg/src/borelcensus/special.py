"""The mod-4 families of double partitions with guaranteed symmetry.

For n = 4M, 4M+2, 4M+3, 4M+5 each partition of M doubles into a partition
of n whose parts are all >= 2 and whose Weyl group is nontrivial (doubling
always produces an equal pair).  Distinct bases give non-equivalent
doubles, so each family realizes exactly P(M) classes; that count is the
number of geometrically distinct solution series the construction yields.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

from .errors import UnsupportedDimensionError
from .flags import equivalent, weyl
from .partitions import Partition, count_p, enumerate_partitions

__all__ = ["SpecialFamily", "applicable_case", "double_partition", "family", "solutions_count"]

_CASES = {"mod0": 0, "mod2": 2, "mod3": 3, "mod5": 5}


@dataclass(frozen=True)
class SpecialFamily:
    """All double partitions of n built from the partitions of the base M."""

    n: int
    case: str  # mod0 | mod2 | mod3 | mod5
    m: int
    members: tuple


def applicable_case(n: int):
    """Which construction applies to n, as (case, M).

    n = 5 and n < 4 admit none (the residue-1 form needs n >= 9).
    """
    if isinstance(n, int) and not isinstance(n, bool) and n >= 4:
        rem = n % 4
        if rem == 0:
            return "mod0", n // 4
        if rem == 2:
            return "mod2", (n - 2) // 4
        if rem == 3:
            return "mod3", (n - 3) // 4
        if n >= 9:
            return "mod5", (n - 5) // 4
    raise UnsupportedDimensionError(f"no double-partition construction covers n={n}")


def double_partition(base: Partition, n: int) -> Partition:
    """Double a partition of M into the family member for dimension n.

    Every base part M_i becomes the equal pair 2M_i, 2M_i; depending on the
    residue a part 2, 3 or 5 is added.  Sorted insertion reproduces both of
    the case-split forms of the odd-part constructions in one code path.
    """
    case, m = applicable_case(n)
    if base.n != m:
        raise UnsupportedDimensionError(
            f"n={n} needs a base partition of {m}, got one of {base.n}"
        )
    doubled = []
    for v in base.parts:
        doubled.extend((2 * v, 2 * v))
    extra = _CASES[case]
    if extra == 2:
        doubled.insert(0, 2)
    elif extra:
        insort(doubled, extra)
    return Partition(tuple(doubled))


def family(n: int) -> SpecialFamily:
    """The full family at dimension n, with its invariants re-verified."""
    case, m = applicable_case(n)
    members = tuple(double_partition(b, n) for b in enumerate_partitions(m))
    for p in members:
        if p.n != n or p.min_part < 2 or not weyl(p).nontrivial:
            raise RuntimeError(f"double partition {p} violates the construction")
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if equivalent(members[i], members[j]):
                raise RuntimeError(f"members {members[i]} and {members[j]} coincide")
    if len(members) != count_p(m):
        raise RuntimeError(f"family size {len(members)} != P({m})")
    return SpecialFamily(n=n, case=case, m=m, members=members)


def solutions_count(n: int) -> int:
    """Number of geometrically distinct solution series: P(M) for the case's M."""
    _case, m = applicable_case(n)
    return count_p(m)
