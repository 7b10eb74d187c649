"""Exact integer-partition counting and enumeration.

Counts are exact big integers: P(n) via the Euler pentagonal recurrence,
Q(n) (distinct parts) via dynamic programming, R(n) = P(n) - Q(n), and the
parts>=2 variants P(n;1), Q(n;1), R(n;1) via the subtraction and alternating
recurrences.  A naive recursive enumerator backs everything as an
independent oracle, and the Hardy-Littlewood leading terms give the
asymptotic cross-check.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Partition",
    "PartitionCounts",
    "count_p",
    "count_q",
    "count_r",
    "count_p_ge2",
    "count_q_ge2",
    "count_r_ge2",
    "partition_counts",
    "enumerate_partitions",
    "asymptotic_p",
    "asymptotic_q",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of n in canonical (non-decreasing) form.

    The constructor accepts parts in any order and sorts them; every other
    module assumes the canonical form.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted(self.parts))
        if not parts:
            raise DomainError("a partition needs at least one part")
        for v in parts:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise DomainError(f"parts must be positive integers, got {v!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        """The partitioned number (ambient dimension)."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def min_part(self) -> int:
        return self.parts[0]

    def prefix_sums(self) -> tuple:
        """Cumulative sums n_1, n_1+n_2, ..., n (the flag dimensions)."""
        out, acc = [], 0
        for v in self.parts:
            acc += v
            out.append(acc)
        return tuple(out)

    def __str__(self):
        return "{" + ",".join(str(v) for v in self.parts) + "}"


@dataclass(frozen=True)
class PartitionCounts:
    """The six census counts for one n, all exact."""

    n: int
    p: int
    q: int
    r: int
    p_ge2: int
    q_ge2: int
    r_ge2: int


# Memo tables are extended under a lock; reads of already-filled prefixes
# are safe without one.
_lock = threading.Lock()
_p_table = [1]  # P(k), k >= 0, P(0) = 1 seeds the recurrence
_q_state = {"limit": 0, "table": [1]}  # Q(k) for k <= limit


def _p_upto(n):
    with _lock:
        t = _p_table
        while len(t) <= n:
            m = len(t)
            acc = 0
            k = 1
            while True:
                g = k * (3 * k - 1) // 2
                if g > m:
                    break
                term = t[m - g]
                h = g + k  # second pentagonal number k(3k+1)/2
                if h <= m:
                    term += t[m - h]
                acc += term if k % 2 else -term
                k += 1
            t.append(acc)
        return t


def _q_upto(n):
    with _lock:
        if _q_state["limit"] >= n:
            return _q_state["table"]
        limit = max(n, 2 * _q_state["limit"], 64)
        dp = [0] * (limit + 1)
        dp[0] = 1
        for k in range(1, limit + 1):
            for m in range(limit, k - 1, -1):
                dp[m] += dp[m - k]
        _q_state["limit"] = limit
        _q_state["table"] = dp
        return dp


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def _check_ge2(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")


def count_p(n: int) -> int:
    """Number of unrestricted partitions of n (exact)."""
    _check_positive(n)
    return _p_upto(n)[n]


def count_q(n: int) -> int:
    """Number of partitions of n into pairwise distinct parts."""
    _check_positive(n)
    return _q_upto(n)[n]


def count_r(n: int) -> int:
    """Partitions of n with at least one repeated part: P(n) - Q(n).

    These are exactly the flag classes with a nontrivial Weyl group.
    """
    return count_p(n) - count_q(n)


def count_p_ge2(n: int) -> int:
    """Partitions of n with every part >= 2, via P(n) - P(n-1)."""
    _check_ge2(n)
    t = _p_upto(n)
    return t[n] - t[n - 1]


def count_q_ge2(n: int) -> int:
    """Distinct-part partitions of n with every part >= 2.

    Uses the alternating recurrence Q(m;1) = Q(m) - Q(m-1;1), unrolled from
    Q(1;1) = 0.  The test suite cross-checks against direct enumeration.
    """
    _check_ge2(n)
    q = _q_upto(n)
    val = 0
    for m in range(2, n + 1):
        val = q[m] - val
    return val


def count_r_ge2(n: int) -> int:
    """P(n;1) - Q(n;1)."""
    return count_p_ge2(n) - count_q_ge2(n)


def partition_counts(n: int) -> PartitionCounts:
    """All six counts at once; the parts>=2 triple is 0 for n = 1."""
    _check_positive(n)
    p, q = count_p(n), count_q(n)
    if n == 1:
        pg = qg = 0
    else:
        pg, qg = count_p_ge2(n), count_q_ge2(n)
    return PartitionCounts(n=n, p=p, q=q, r=p - q, p_ge2=pg, q_ge2=qg, r_ge2=pg - qg)


def _tuples(remaining, floor, distinct):
    # Non-decreasing tails with parts >= floor, lexicographic order.
    if remaining == 0:
        yield ()
        return
    for k in range(floor, remaining + 1):
        nxt = k + 1 if distinct else k
        for tail in _tuples(remaining - k, nxt, distinct):
            yield (k,) + tail


def enumerate_partitions(n: int, min_part: int = 1, distinct: bool = False) -> list:
    """All partitions of n with parts >= min_part, lexicographic.

    With distinct=True, parts are additionally pairwise distinct.  Empty
    list when nothing qualifies.  The length always equals the matching
    count_* value, which the tests exploit as an oracle.
    """
    _check_positive(n)
    _check_positive(min_part)
    return [Partition(t) for t in _tuples(n, min_part, distinct)]


def asymptotic_p(n: int) -> float:
    """Hardy-Littlewood leading term for P(n): exp(pi*sqrt(2n/3)) / (4n*sqrt(3))."""
    _check_positive(n)
    return math.exp(math.pi * math.sqrt(2.0 * n / 3.0)) / (4.0 * n * math.sqrt(3.0))


def asymptotic_q(n: int) -> float:
    """Hardy-Littlewood leading term for Q(n): exp(pi*sqrt(n/3)) / (4 n^(3/4) 3^(1/4))."""
    _check_positive(n)
    return math.exp(math.pi * math.sqrt(n / 3.0)) / (4.0 * n ** 0.75 * 3.0 ** 0.25)
