"""Pair decomposition, generated-group structure, transitivity predicates."""

from itertools import combinations

import pytest

from borelcensus import (
    Agreement,
    DomainError,
    Partition,
    Window,
    decompose,
    enumerate_partitions,
    family,
    first_window_with_involution,
    generated_group,
    has_common_subpartition,
    is_transitive_pair,
)

P = Partition


class TestCommonSubpartition:
    def test_examples(self):
        assert has_common_subpartition(P((2, 2, 4)), P((2, 6))) == 2
        assert has_common_subpartition(P((3, 3)), P((2, 4))) is None
        assert has_common_subpartition(P((2, 3)), P((2, 3))) == 2

    def test_single_block_self_pair(self):
        assert has_common_subpartition(P((6,)), P((6,))) is None

    def test_mismatched_n(self):
        with pytest.raises(DomainError):
            has_common_subpartition(P((2, 2)), P((2, 3)))


class TestDecompose:
    def test_agreement_then_window(self):
        dec = decompose(P((2, 2, 4)), P((2, 6)))
        a, w = dec.segments
        assert isinstance(a, Agreement) and (a.start, a.part) == (0, 2)
        assert isinstance(w, Window)
        assert (w.start, w.size, w.h_parts, w.k_parts) == (2, 6, (2, 4), (6,))

    def test_two_windows(self):
        dec = decompose(P((4, 4)), P((2, 2, 2, 2)))
        assert [(w.start, w.size) for w in dec.segments] == [(0, 4), (4, 4)]
        for w in dec.segments:
            assert w.h_parts == (4,) and w.k_parts == (2, 2)

    def test_identical_partitions_all_agreements(self):
        dec = decompose(P((2, 3, 5)), P((2, 3, 5)))
        assert all(isinstance(s, Agreement) for s in dec.segments)
        assert [s.part for s in dec.segments] == [2, 3, 5]

    def test_rejects_parts_below_two(self):
        with pytest.raises(DomainError):
            decompose(P((1, 3)), P((2, 2)))

    def test_rejects_mismatched_n(self):
        with pytest.raises(DomainError):
            decompose(P((2, 2)), P((2, 4)))

    def sweep_pairs(self, max_n):
        for n in range(4, max_n + 1):
            parts = enumerate_partitions(n, 2)
            for p1, p2 in combinations(parts, 2):
                yield n, p1, p2

    def test_tiling_sweep_to_14(self):
        for n, p1, p2 in self.sweep_pairs(14):
            dec = decompose(p1, p2)
            pos = 0
            for seg in dec.segments:
                assert seg.start == pos
                pos += seg.size
            assert pos == n

    def test_window_invariants_sweep_to_14(self):
        for n, p1, p2 in self.sweep_pairs(14):
            for w in decompose(p1, p2).windows:
                assert w.size >= 4
                assert w.h_parts != w.k_parts
                assert sum(w.h_parts) == sum(w.k_parts) == w.size
                # minimality: no shared proper prefix sum inside the window
                ha = {sum(w.h_parts[: t + 1]) for t in range(len(w.h_parts) - 1)}
                ka = {sum(w.k_parts[: t + 1]) for t in range(len(w.k_parts) - 1)}
                assert not (ha & ka)

    def test_agreements_match_positionally(self):
        for n, p1, p2 in self.sweep_pairs(12):
            for seg in decompose(p1, p2).segments:
                if isinstance(seg, Agreement):
                    i1 = p1.prefix_sums().index(seg.start + seg.part)
                    i2 = p2.prefix_sums().index(seg.start + seg.part)
                    assert p1.parts[i1] == p2.parts[i2] == seg.part


class TestGeneratedGroup:
    def test_examples(self):
        g = generated_group(P((2, 2, 4)), P((2, 6)))
        assert g.factors == ((2, "agreement"), (6, "window"))
        assert g.lie_dimension == 16
        g2 = generated_group(P((3, 3)), P((2, 4)))
        assert g2.factors == ((6, "window"),) and g2.transitive_on_sphere
        g3 = generated_group(P((2, 2)), P((2, 2)))
        assert g3.factors == ((2, "agreement"), (2, "agreement"))

    def test_kind_validation(self):
        assert generated_group(P((2, 2)), P((4,)), kind="connected").kind == "connected"
        with pytest.raises(DomainError):
            generated_group(P((2, 2)), P((4,)), kind="orthogonal")

    def test_factor_sizes_tile_n(self):
        for n in range(4, 13):
            parts = enumerate_partitions(n, 2)
            for p1, p2 in combinations(parts, 2):
                g = generated_group(p1, p2)
                assert sum(s for s, _ in g.factors) == n
                assert g.lie_dimension == sum(s * (s - 1) // 2 for s, _ in g.factors)


class TestTransitivity:
    def test_examples(self):
        assert is_transitive_pair(P((3, 3)), P((2, 4)))
        assert not is_transitive_pair(P((4, 4)), P((2, 2, 2, 2)))
        assert not is_transitive_pair(P((2, 2)), P((2, 2)))

    def test_three_criteria_agree(self):
        for n in range(4, 13):
            parts = enumerate_partitions(n, 2)
            for p1, p2 in combinations(parts, 2):
                direct = has_common_subpartition(p1, p2) is None
                structural = generated_group(p1, p2).factors == ((n, "window"),)
                assert is_transitive_pair(p1, p2) == direct == structural


class TestWindowPlan:
    def test_example_pair(self):
        plan = first_window_with_involution(P((4, 4)), P((2, 2, 2, 2)))
        assert plan.side == 2
        assert (plan.block_a, plan.block_b, plan.block_size) == (1, 2, 2)
        assert (plan.window.start, plan.window.size) == (0, 4)

    def test_absent_when_no_window_pair(self):
        assert first_window_with_involution(P((2, 2, 4)), P((2, 6))) is None

    def test_side_one_preferred(self):
        plan = first_window_with_involution(P((6, 6)), P((2, 2, 4, 4)))
        assert plan.side == 1 and (plan.block_a, plan.block_b) == (1, 2)

    def test_equal_partitions_rejected(self):
        with pytest.raises(DomainError):
            first_window_with_involution(P((2, 2)), P((2, 2)))

    def test_swap_lies_inside_window(self):
        for n in (8, 12, 16):
            members = family(n).members
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    plan = first_window_with_involution(members[i], members[j])
                    assert plan is not None
                    p = members[i] if plan.side == 1 else members[j]
                    sums = (0,) + p.prefix_sums()
                    lo, hi = plan.window.start, plan.window.start + plan.window.size
                    assert lo <= sums[plan.block_a - 1] and sums[plan.block_b] <= hi
                    assert p.parts[plan.block_a - 1] == p.parts[plan.block_b - 1]
