"""Coefficient search against the Euclidean oracle."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relgraph import (
    ConvergenceError,
    DomainError,
    bocps,
    bocps_batch,
    gcd_of,
    lcm_of,
    minimal_ratio,
)

positive = st.integers(1, 1000)


class TestKnownValues:
    def test_reduced_ratio(self):
        res = bocps(4, 6)
        assert (res.k1, res.k2) == (2, 3)

    def test_symmetric_unit(self):
        res = bocps(1, 1)
        assert (res.k1, res.k2, res.loops) == (1, 1, 2)

    def test_coprime_pair_runs_full_budget(self):
        res = bocps(7, 5)
        assert (res.k1, res.k2, res.loops) == (7, 5, 12)

    @pytest.mark.parametrize("pair, expect", [((4, 6), 2), ((9, 9), 9), ((1, 17), 1)])
    def test_gcd(self, pair, expect):
        assert gcd_of(*pair) == expect

    @pytest.mark.parametrize("pair, expect", [((4, 6), 12), ((9, 1), 9), ((3, 5), 15)])
    def test_lcm(self, pair, expect):
        assert lcm_of(*pair) == expect

    def test_domain(self):
        for bad in [(0, 3), (3, 0), (-1, 2)]:
            with pytest.raises(DomainError):
                bocps(*bad)


class TestOracle:
    @given(positive, positive)
    @settings(max_examples=300)
    def test_matches_euclid(self, m1, m2):
        res = bocps(m1, m2)
        g = math.gcd(m1, m2)
        assert res.k1 * m2 == res.k2 * m1
        assert math.gcd(res.k1, res.k2) == 1
        assert (res.k1, res.k2) == (m1 // g, m2 // g)
        assert gcd_of(m1, m2) == g
        assert lcm_of(m1, m2) == m1 * m2 // g
        assert minimal_ratio(m1, m2) == (m1 // g, m2 // g)
        assert res.loops == res.k1 + res.k2 <= m1 + m2

    @given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 12))
    @settings(max_examples=120)
    def test_scaling_keeps_loops(self, s, t, a):
        # common factors scale the inputs but not the walk
        if math.gcd(s, t) == 1:
            assert bocps(a * s, a * t).loops == bocps(s, t).loops


class TestBatch:
    def test_equals_scalar(self, rnd):
        m1 = np.array([rnd.randint(1, 1000) for _ in range(400)])
        m2 = np.array([rnd.randint(1, 1000) for _ in range(400)])
        k1, k2, loops = bocps_batch(m1, m2)
        for i in range(m1.size):
            res = bocps(int(m1[i]), int(m2[i]))
            assert (res.k1, res.k2, res.loops) == (int(k1[i]), int(k2[i]), int(loops[i]))

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            bocps_batch(np.array([1, 2]), np.array([1]))

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            bocps_batch(np.array([0]), np.array([1]))


class TestHalfCap:
    def test_starves_on_skewed_coprime_input(self):
        # the halved budget is 50 but (100, 3) needs 103 steps
        with pytest.raises(ConvergenceError):
            bocps(100, 3, half_cap=True)

    def test_agrees_when_budget_suffices(self):
        assert bocps(12, 4, half_cap=True) == bocps(12, 4)

    def test_inapplicable_condition_keeps_full_budget(self):
        # max/2 does not exceed min here, so the full budget stays in force
        assert bocps(7, 5, half_cap=True) == bocps(7, 5)
