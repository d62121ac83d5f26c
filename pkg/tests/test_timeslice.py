from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import workloads
from rrsim import (
    ProcessSpec,
    compute_components,
    compute_csc,
    compute_ots,
    compute_pc,
    compute_range,
    compute_sc,
    workload,
)
from rrsim.timeslice import round_slice


def proc(burst, priority=1):
    return ProcessSpec(1, burst, priority)


class TestRange:
    def test_illustration_bursts(self, illustration_w):
        assert compute_range(illustration_w) == Fraction(65, 2)

    def test_increasing_bursts(self, increasing_w):
        assert compute_range(increasing_w) == 14

    def test_single_burst(self):
        assert compute_range(workload([7])) == 7


class TestRoundSlice:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (Fraction(61, 6), 10),   # 10.1667 -> fractional part below 1/4
            (Fraction(61, 10), 6),   # 6.1
            (Fraction(65, 4), 17),   # 16.25 -> at the quarter threshold
            (Fraction(61, 4), 16),   # 15.25
            (Fraction(65, 2), 33),   # 32.5
            (Fraction(7, 2), 4),     # 3.5
            (Fraction(14, 5), 3),    # 2.8
            (7, 7),
        ],
    )
    def test_threshold(self, value, expected):
        assert round_slice(value) == expected


class TestOts:
    @pytest.mark.parametrize(
        "priority,rng,n,expected",
        [
            (3, Fraction(65, 2), 5, 11),
            (2, Fraction(65, 2), 5, 17),
            (4, 14, 5, 4),
            (1, 7, 1, 7),
        ],
    )
    def test_examples(self, priority, rng, n, expected):
        assert compute_ots(proc(10, priority), rng, n) == expected

    def test_clamped_to_one(self):
        # tiny range with a large priority number would otherwise round to 0
        assert compute_ots(proc(1, 30), 1, 3) == 1

    @given(st.integers(1, 200), st.integers(1, 20), st.integers(1, 20))
    def test_anti_monotone_in_priority(self, rng2, a, b):
        rng = Fraction(rng2, 2)
        lo, hi = sorted((a, b))
        assert compute_ots(proc(5, lo), rng, 5) >= compute_ots(proc(5, hi), rng, 5)

    @given(st.integers(1, 100), st.integers(1, 10), st.integers(1, 8))
    def test_scaling_identity(self, rng2, priority, k):
        # scaling the range by k moves the OTS to the rounded scaled quotient
        rng = Fraction(rng2, 2)
        scaled = compute_ots(proc(5, priority), k * rng, 5)
        assert scaled == max(1, round_slice(k * rng / priority))


class TestPc:
    def test_illustration(self, illustration_w):
        flags = [compute_pc(p, illustration_w) for p in illustration_w]
        assert flags == [0, 1, 0, 1, 1]

    def test_increasing(self, increasing_w):
        flags = [compute_pc(p, increasing_w) for p in increasing_w]
        assert flags == [0, 0, 1, 0, 0]

    def test_single_process_any_priority(self):
        w = workload([9], [4])
        assert compute_pc(w.processes[0], w) == 1

    def test_keys_on_minimum_not_literal_one(self):
        w = workload([4, 9], [3, 5])
        assert [compute_pc(p, w) for p in w] == [1, 0]


class TestSc:
    def test_illustration(self, illustration_w):
        assert [compute_sc(i, illustration_w) for i in range(5)] == [0, 0, 1, 0, 1]

    def test_random(self, random_w):
        assert [compute_sc(i, random_w) for i in range(5)] == [0, 0, 1, 0, 1]

    def test_first_process_always_zero(self):
        assert compute_sc(0, workload([1])) == 0

    @given(workloads())
    def test_patterns(self, w):
        flags = [compute_sc(i, w) for i in range(len(w))]
        assert flags[0] == 0
        bursts = w.bursts
        for i in range(1, len(w)):
            assert flags[i] == (1 if bursts[i] < bursts[i - 1] else 0)

    def test_strictly_increasing_all_zero(self):
        w = workload([1, 2, 3, 4])
        assert [compute_sc(i, w) for i in range(4)] == [0, 0, 0, 0]

    def test_strictly_decreasing_zero_then_ones(self):
        w = workload([9, 7, 5, 2])
        assert [compute_sc(i, w) for i in range(4)] == [0, 1, 1, 1]


class TestCsc:
    @pytest.mark.parametrize(
        "burst,ots,pc,sc,expected",
        [
            (53, 31, 1, 0, 21),  # balance 21 < 31
            (8, 16, 0, 1, 8),    # balance -9 -> whole burst
            (41, 8, 0, 0, 0),    # balance 33 >= 8
            (10, 10, 0, 0, 0),   # exact fit, zero pad
        ],
    )
    def test_examples(self, burst, ots, pc, sc, expected):
        assert compute_csc(proc(burst), ots, pc, sc) == expected


class TestComponents:
    def test_illustration_vectors(self, illustration_w):
        comps = compute_components(illustration_w)
        assert [c.ots for c in comps] == [11, 33, 17, 33, 33]
        assert [c.pc for c in comps] == [0, 1, 0, 1, 1]
        assert [c.sc for c in comps] == [0, 0, 1, 0, 1]
        assert [c.csc for c in comps] == [0, 26, 12, 9, 5]
        assert [c.its for c in comps] == [11, 60, 30, 43, 40]

    def test_increasing_vectors(self, increasing_w):
        comps = compute_components(increasing_w)
        assert [c.ots for c in comps] == [7, 5, 14, 4, 3]
        assert [c.pc for c in comps] == [0, 0, 1, 0, 0]
        assert [c.sc for c in comps] == [0, 0, 0, 0, 0]
        assert [c.csc for c in comps] == [5, 0, 1, 0, 0]
        assert [c.its for c in comps] == [12, 5, 16, 4, 3]

    def test_random_vectors(self, random_w):
        comps = compute_components(random_w)
        assert [c.ots for c in comps] == [10, 31, 16, 8, 6]
        assert [c.pc for c in comps] == [0, 1, 0, 0, 0]
        assert [c.sc for c in comps] == [0, 0, 1, 0, 1]
        assert [c.csc for c in comps] == [1, 21, 8, 0, 0]
        assert [c.its for c in comps] == [11, 53, 25, 8, 7]

    def test_static_ots_increasing(self, increasing_w):
        comps = compute_components(increasing_w, static_ots=4)
        assert [c.ots for c in comps] == [4] * 5
        assert [c.its for c in comps] == [5, 4, 5, 4, 4]

    def test_static_ots_random(self, random_w):
        comps = compute_components(random_w, static_ots=4)
        assert [c.its for c in comps] == [4, 5, 8, 4, 5]
        assert [c.csc for c in comps] == [0, 0, 3, 0, 0]

    @given(st.integers(1, 100))
    def test_single_process(self, b):
        # range = burst, ots = burst, pc = 1, sc = 0, balance = -1 -> csc = burst
        comps = compute_components(workload([b]))
        c = comps[0]
        assert (c.slice_range, c.ots, c.pc, c.sc, c.csc) == (b, b, 1, 0, b)
        assert c.its == 2 * b + 1
        assert c.its >= b

    @given(workloads())
    def test_its_additivity(self, w):
        for c in compute_components(w):
            assert c.its == c.ots + c.pc + c.sc + c.csc

    @given(workloads())
    def test_csc_guarantees_one_dispatch_finish(self, w):
        for p, c in zip(w, compute_components(w)):
            if c.csc > 0:
                assert c.its >= p.burst

    @given(workloads())
    def test_bounds(self, w):
        for c in compute_components(w):
            assert c.ots >= 1
            assert c.pc in (0, 1)
            assert c.sc in (0, 1)
            assert c.csc >= 0
            assert c.its >= 1
