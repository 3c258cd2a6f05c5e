# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest

from balsys.contrib.errors import BelowThresholdError, NotApplicableError
from balsys.contrib.pointset import PointSet
from balsys.contrib.sumset import (
    AirSumsetSpec,
    TricolouredSeq,
    air_sumset,
    ap_in_difference,
    extended_system,
    generic_in_air_sumset,
    max_tricoloured,
    verify_tricoloured,
)
from balsys.contrib.system import SystemMatrix
from balsys.contrib.witness import is_linearly_generic
from balsys.core.field import fq_init


class TestAirSumset:
    def test_differences(self, F5):
        S = PointSet(F5, 1, [(0,), (1,), (2,)])
        sums, found = air_sumset(AirSumsetSpec((1, -1), (S, S)), witnesses=True)
        assert list(sums) == [(4,), (3,), (1,), (2,)]
        assert found[(4,)] == ((0,), (1,))

    def test_dependent_tuples_skipped(self, F3):
        S = PointSet(F3, 1, [(0,), (1,), (2,)])
        # three points of a line are never affinely independent
        assert len(air_sumset(AirSumsetSpec((1, 1, 1), (S, S, S)))) == 0

    def test_single_set(self, F5):
        S = PointSet(F5, 1, [(1,), (2,)])
        assert list(air_sumset(AirSumsetSpec((2,), (S,)))) == [(2,), (4,)]

    def test_checks(self, F5):
        S = PointSet(F5, 1, [(1,)])
        with pytest.raises(ValueError):
            air_sumset(AirSumsetSpec((1, 5), (S, S)))
        with pytest.raises(ValueError):
            air_sumset(AirSumsetSpec((1, -1), (S,)))
        with pytest.raises(ValueError):
            air_sumset(AirSumsetSpec((1, -1), (S, PointSet(F5, 2, [(0, 0)]))))


class TestGenericInAirSumset:
    def test_extended_system(self, F5):
        A = SystemMatrix.from_signed(F5, [[1, -1]])
        assert extended_system(A, (1, -1)).A.tolist() == [[1, 4, 4, 1]]

    def test_single_variable_pigeonhole(self, F5, full_space):
        A = SystemMatrix.from_signed(F5, [[1]])
        result = generic_in_air_sumset(A, (1, -1), full_space(F5, 1))
        assert result.route == "pigeonhole"
        assert result.solution.points == ((0,),)
        assert result.preimages == (None,)

    @pytest.mark.filterwarnings("ignore::balsys.warnings.BelowThresholdWarning")
    def test_single_variable_extended(self, F5, full_space):
        A = SystemMatrix.from_signed(F5, [[1]])
        result = generic_in_air_sumset(A, (1, 1, -2), full_space(F5, 1), override=True)
        assert result.route == "extended"
        assert result.solution.points == ((0,),)
        assert result.source == ((1,), (4,), (0,))

    def test_three_ap(self, three_ap_F3, F3, full_space):
        result = generic_in_air_sumset(three_ap_F3, (1, -1), full_space(F3, 3))
        assert result.solution.is_solution
        assert is_linearly_generic(three_ap_F3, result.solution)
        assert all(t is not None for t in result.preimages)
        assert result._as_dict()["linearly_generic"]

    def test_checks(self, three_ap_F3, F3, full_space):
        S = full_space(F3, 3)
        with pytest.raises(NotApplicableError):
            generic_in_air_sumset(three_ap_F3, (1, 1), S)
        with pytest.raises(ValueError):
            generic_in_air_sumset(three_ap_F3, (1, -1), S, route="direct")
        with pytest.raises(ValueError):
            generic_in_air_sumset(three_ap_F3, (1, 1, 1), S, route="pigeonhole")
        with pytest.raises(ValueError):
            generic_in_air_sumset(three_ap_F3, (1, 3, -1), S)


class TestProgressionInDifferences:
    def test_at_threshold(self, F3, full_space):
        witness = ap_in_difference(full_space(F3, 3), 3)
        d = witness.progression
        assert len(set(d)) == 3
        assert (0, 0, 0) not in d
        assert all((d[0][i] - 2 * d[1][i] + d[2][i]) % 3 == 0 for i in range(3))
        for x, y, diff in zip(witness.x, witness.y, d):
            assert tuple((a - b) % 3 for a, b in zip(x, y)) == diff

    def test_below_threshold(self, F3, full_space):
        with pytest.raises(BelowThresholdError):
            ap_in_difference(full_space(F3, 2), 3)

    def test_not_applicable(self, F3, F4, full_space):
        with pytest.raises(NotApplicableError):
            ap_in_difference(full_space(F3, 3), 4)
        with pytest.raises(NotApplicableError):
            ap_in_difference(full_space(F4, 1), 3)


class TestTricoloured:
    def test_verify(self, F3):
        assert verify_tricoloured([((0,), (0,), (0,)), ((1,), (1,), (1,))], F3)
        assert not verify_tricoloured(
            TricolouredSeq((((0,), (0,), (0,)), ((1,), (1,), (1,)), ((2,), (2,), (2,)))), F3
        )
        assert verify_tricoloured([], F3)

    def test_small_spaces(self):
        assert max_tricoloured(2, 1).length == 1
        result = max_tricoloured(fq_init(3), 1)
        assert result.length == 2
        assert result.exact
        assert verify_tricoloured(result.sequence, fq_init(3))

    def test_budget(self):
        result = max_tricoloured("3", 2, budget=5)
        assert not result.exact
        assert result.evaluations == 5
        assert result.length >= 1

    def test_too_large(self):
        with pytest.raises(ValueError):
            max_tricoloured(3, 4)
