"""Structure of the group generated by two block subgroups.

Two canonical partitions of n are swept in parallel over their prefix
sums.  Where both next parts agree the group keeps that block factor
(agreement segment); elsewhere a minimal window opens and closes at the
first coinciding partial sum, and on the window the generated group is the
full orthogonal group of the window subspace.  The pair is jointly
transitive on the sphere exactly when the whole of [0, n) is one window,
i.e. when the partitions share no proper common prefix sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .partitions import Partition

__all__ = [
    "Agreement",
    "Window",
    "PairDecomposition",
    "GroupStructure",
    "WindowPlan",
    "has_common_subpartition",
    "decompose",
    "generated_group",
    "is_transitive_pair",
    "first_window_with_involution",
]


@dataclass(frozen=True)
class Agreement:
    """Both partitions carry the same part at this coordinate offset."""

    start: int
    part: int

    @property
    def size(self):
        return self.part


@dataclass(frozen=True)
class Window:
    """A maximal interval with no shared intermediate prefix sum.

    h_parts and k_parts are the two sides' parts inside the window;
    h_first/k_first are the 1-based positions of the first of those blocks
    in each canonical partition.
    """

    start: int
    size: int
    h_parts: tuple
    k_parts: tuple
    h_first: int
    k_first: int

    def __post_init__(self):
        if sum(self.h_parts) != self.size or sum(self.k_parts) != self.size:
            raise DomainError("window sides must both sum to the window size")
        if self.h_parts == self.k_parts:
            raise DomainError("a window needs differing parts on the two sides")


@dataclass(frozen=True)
class PairDecomposition:
    n: int
    segments: tuple

    @property
    def windows(self):
        return tuple(s for s in self.segments if isinstance(s, Window))


@dataclass(frozen=True)
class GroupStructure:
    """Factor sizes of the generated group, tagged by their origin."""

    n: int
    factors: tuple  # ((size, "agreement" | "window"), ...)
    kind: str  # "full" | "connected"
    lie_dimension: int

    @property
    def transitive_on_sphere(self):
        return len(self.factors) == 1 and self.factors[0][0] == self.n


@dataclass(frozen=True)
class WindowPlan:
    """A window together with an order-two block swap localized inside it.

    side is 1 or 2; block_a/block_b are 1-based positions in that side's
    canonical partition; the swapped blocks have size block_size and lie
    entirely inside the window, so the swap acts trivially outside it.
    """

    window: Window
    side: int
    block_a: int
    block_b: int
    block_size: int


def _check_pair(p1: Partition, p2: Partition, min_part=1):
    if p1.n != p2.n:
        raise DomainError(f"partitions of different numbers: {p1.n} vs {p2.n}")
    if min_part > 1 and (p1.min_part < min_part or p2.min_part < min_part):
        raise DomainError(f"every part must be >= {min_part} on both sides")


def has_common_subpartition(p1: Partition, p2: Partition):
    """Smallest proper prefix sum shared by both partitions, or None.

    Its absence is the joint-transitivity criterion.
    """
    _check_pair(p1, p2)
    common = set(p1.prefix_sums()[:-1]) & set(p2.prefix_sums()[:-1])
    return min(common) if common else None


def decompose(p1: Partition, p2: Partition) -> PairDecomposition:
    """Alternating agreement/window decomposition (minimal windows)."""
    _check_pair(p1, p2, min_part=2)
    a, b = p1.parts, p2.parts
    segments = []
    i = j = 0
    pos = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            segments.append(Agreement(start=pos, part=a[i]))
            pos += a[i]
            i += 1
            j += 1
            continue
        i0, j0 = i, j
        ta, tb = pos + a[i], pos + b[j]
        i += 1
        j += 1
        while ta != tb:  # re-coincides at n at the latest
            if ta < tb:
                ta += a[i]
                i += 1
            else:
                tb += b[j]
                j += 1
        segments.append(
            Window(
                start=pos,
                size=ta - pos,
                h_parts=a[i0:i],
                k_parts=b[j0:j],
                h_first=i0 + 1,
                k_first=j0 + 1,
            )
        )
        pos = ta
    return PairDecomposition(n=p1.n, segments=tuple(segments))


def generated_group(p1: Partition, p2: Partition, kind: str = "full") -> GroupStructure:
    """Factors of the generated group: shared blocks survive, windows fuse."""
    if kind not in ("full", "connected"):
        raise DomainError(f"kind must be 'full' or 'connected', got {kind!r}")
    dec = decompose(p1, p2)
    factors = tuple(
        (seg.part, "agreement") if isinstance(seg, Agreement) else (seg.size, "window")
        for seg in dec.segments
    )
    lie_dim = sum(s * (s - 1) // 2 for s, _ in factors)
    return GroupStructure(n=p1.n, factors=factors, kind=kind, lie_dimension=lie_dim)


def is_transitive_pair(p1: Partition, p2: Partition) -> bool:
    """Whether the two block groups jointly act transitively on the sphere.

    Three equivalent computations (different partitions with no common
    proper prefix sum; a single window factor of full size) are evaluated
    and must agree.
    """
    _check_pair(p1, p2, min_part=2)
    direct = p1 != p2 and has_common_subpartition(p1, p2) is None
    structural = generated_group(p1, p2).factors == ((p1.n, "window"),)
    if direct != structural:  # pragma: no cover - the two criteria coincide
        raise RuntimeError(f"transitivity criteria disagree on {p1}, {p2}")
    return direct


def _window_swap(window: Window, side: int):
    # Adjacent equal parts inside a window of a canonical partition are the
    # only equal parts there, so scanning neighbors finds every pair.
    parts, first = (
        (window.h_parts, window.h_first) if side == 1 else (window.k_parts, window.k_first)
    )
    for t in range(len(parts) - 1):
        if parts[t] == parts[t + 1]:
            return first + t, first + t + 1, parts[t]
    return None


def first_window_with_involution(p1: Partition, p2: Partition):
    """First window holding an equal-block pair on either side, with the swap.

    Side 1 is preferred when both qualify.  None when no window has a
    repeated part, in which case the pair supports no window-local
    involution.
    """
    if p1 == p2:
        raise DomainError("the two partitions must differ")
    dec = decompose(p1, p2)
    for window in dec.windows:
        for side in (1, 2):
            found = _window_swap(window, side)
            if found is not None:
                a, b, size = found
                return WindowPlan(
                    window=window, side=side, block_a=a, block_b=b, block_size=size
                )
    return None
