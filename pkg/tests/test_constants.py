# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import math

import pytest
from sympy.functions.combinatorial.numbers import stirling

from balsys.contrib.catalog import make_system
from balsys.contrib.constants import (
    THRESHOLD_KINDS,
    beta,
    breaking_length,
    compute_J,
    gamma,
    pigeonhole,
    rank_threshold,
    shape_threshold,
    shape_zero_sum_threshold,
    stirling_partitions,
    temperate_threshold,
    thresholds,
    w_shape_threshold,
)
from balsys.core.field import fq_init


class TestJ:
    def test_J2(self):
        J = compute_J(2)
        assert J.value == pytest.approx(3 * 2 ** (-5 / 3), abs=1e-9)
        assert J.minimizer == pytest.approx(0.5, abs=1e-9)
        assert J.lo <= J.value <= J.hi
        assert J.hi - J.lo <= 1e-10

    def test_J3(self):
        J = compute_J(3)
        assert J.value == pytest.approx(0.918368, abs=1e-6)
        assert J.minimizer == pytest.approx((-1 + math.sqrt(33)) / 8, abs=1e-9)

    def test_decreasing(self):
        values = [compute_J(t).value for t in range(2, 12)]
        assert values == sorted(values, reverse=True)
        assert all(v < 1 for v in values)

    def test_certified_up_to_fifty(self):
        values = [compute_J(t) for t in range(2, 51)]
        assert all(a.value > b.value for a, b in zip(values, values[1:]))
        assert all(J.hi - J.lo <= 1e-10 for J in values)

    @pytest.mark.parametrize("t", [0, 1, 2.5])
    def test_invalid_argument(self, t):
        with pytest.raises(ValueError):
            compute_J(t)

    def test_invalid_tolerance(self):
        with pytest.raises(ValueError):
            compute_J(3, tol=0)


class TestGamma:
    def test_small_values(self):
        assert gamma(2).value == pytest.approx(1.88988, abs=1e-5)
        assert gamma(3).value == pytest.approx(2.75510, abs=1e-5)

    def test_tower_below_flat(self):
        tower = gamma(4, "tower")
        flat = gamma(4, "flat")
        assert tower.value == pytest.approx(3.57165, abs=1e-4)
        assert flat.value == pytest.approx(3.6107, abs=1e-3)
        assert tower.value < flat.value

    def test_tower_of_prime_is_flat(self):
        tower = gamma(5, "tower")
        assert tower.tower_equals_flat
        assert tower.value == gamma(5).value

    def test_field_context(self):
        assert gamma(fq_init(3)).value == gamma(3).value

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
    def test_bounds(self, q):
        G = gamma(q)
        assert G.lo <= G.value <= G.hi
        assert 0.8 * q < G.value < 0.945 * q

    def test_not_prime_power(self):
        with pytest.raises(ValueError):
            gamma(6)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            gamma(5, "spiral")

    def test_as_dict(self):
        data = gamma(3)._as_dict()
        assert data["q"] == 3
        assert data["mode"] == "flat"
        assert len(data["interval"]) == 2


class TestCombinatorics:
    @pytest.mark.parametrize("k", range(1, 9))
    def test_stirling_matches_sympy(self, k):
        for lam in range(1, k + 1):
            assert stirling_partitions(k, lam) == stirling(k, lam)

    def test_stirling_values(self):
        assert stirling_partitions(3, 2) == 3
        assert stirling_partitions(4, 2) == 7

    def test_stirling_range(self):
        with pytest.raises(ValueError):
            stirling_partitions(3, 0)
        with pytest.raises(ValueError):
            stirling_partitions(3, 4)

    def test_beta(self):
        assert beta(5, 1) == 1
        assert beta(5, 2) == 6
        assert beta(3, 3) == 13
        assert beta(3, 3, start=3) == 15


class TestThresholds:
    def test_pigeonhole(self):
        assert pigeonhole(3, 3, 6) == 243
        assert pigeonhole(3, 2, 1) == 6
        assert pigeonhole(3, 3, 3) == 27
        assert pigeonhole(5, 5, 1) == 19

    def test_real_thresholds_round_up(self):
        G5 = gamma(5).value
        assert shape_threshold(5, 3, 2) >= 13 * G5 ** 2
        assert w_shape_threshold(5, 2) >= 4 * G5 ** 2
        assert breaking_length(5, 3, 1) >= 4 * 125 * G5
        assert rank_threshold(5, 3, 1, 2) >= 2 * 4 * 3 * 125 * G5

    def test_zero_sum_threshold_uses_larger_base(self):
        q, k, n = 3, 3, 4
        base = max(gamma(q).value, q ** ((k - 1) / k))
        assert shape_zero_sum_threshold(q, k, n) >= beta(k, k, start=q) * base ** n

    def test_temperate_adds_pigeonhole(self):
        assert temperate_threshold(5, 5, 3, 1, 2) == pigeonhole(5, 3, 1) + rank_threshold(5, 5, 1, 2)

    def test_tower_mode_is_smaller(self):
        assert shape_threshold(4, 3, 6, "tower") < shape_threshold(4, 3, 6, "flat")

    def test_dispatch(self, F5):
        A = make_system("star", F5)
        assert thresholds(A, 1, "pigeonhole") == 19
        assert thresholds(A, 1, "beta") == beta(5, 5)
        assert thresholds(A, 1, "temperate") == temperate_threshold(5, 5, 3, 1, 2)
        assert thresholds(A, 1, "rank", t=1) == rank_threshold(5, 5, 1, 1)
        for kind in THRESHOLD_KINDS:
            assert thresholds(A, 2, kind) >= 1

    def test_unknown_kind(self, F5):
        with pytest.raises(ValueError):
            thresholds(make_system("star", F5), 1, "enormous")
