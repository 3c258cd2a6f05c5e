# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balsys.core.errors import DimensionError, FieldError
from balsys.core.field import (
    FqVector,
    _primitive_modulus,
    _times_x,
    fq_init,
    parse_order,
    point_index,
    point_indices,
    vec_from_index,
    vec_index,
)

ORDERS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4)]


class TestFieldCtx:
    def test_prime_field_arithmetic(self, F5):
        assert F5.add(3, 4) == 2
        assert F5.sub(1, 3) == 3
        assert F5.mul(3, 4) == 2
        assert F5.neg(2) == 3
        assert F5.inv(2) == 3
        assert F5.div(1, 4) == 4

    def test_integer_in_integer_out(self, F4):
        assert isinstance(F4.mul(2, 3), int)
        assert isinstance(F4.add(2, 3), int)

    def test_f4_uses_fixed_modulus(self, F4):
        # x^2 = x + 1
        assert F4.mul(2, 2) == 3
        assert F4.mul(2, 3) == 1
        assert F4.add(2, 3) == 1
        assert F4.modulus_str() == "x^2 + x + 1"

    def test_f9_uses_fixed_modulus(self):
        F9 = fq_init(3, 2)
        # x^2 = -x - 2 = 2x + 1
        assert F9.mul(3, 3) == 7

    def test_cached_context(self):
        assert fq_init(3, 2) is fq_init(3, 2)
        assert fq_init(5) == parse_order("5")

    @pytest.mark.parametrize("p, s", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)])
    def test_modulus_is_primitive(self, p, s):
        low = _primitive_modulus(p, s)
        a, seen = 1, set()
        for _ in range(p ** s - 1):
            seen.add(a)
            a = _times_x(a, p, s, low)
        assert a == 1
        assert len(seen) == p ** s - 1

    def test_modulus_is_cached(self):
        low = _primitive_modulus(2, 16)
        assert len(low) == 16
        assert low[0] == 1
        assert _primitive_modulus(2, 16) is low
        assert _primitive_modulus.cache_info().hits >= 1

    def test_invalid_orders(self):
        with pytest.raises(FieldError):
            fq_init(4)
        with pytest.raises(FieldError):
            fq_init(2, 0)
        with pytest.raises(FieldError):
            fq_init(2, 17)

    def test_zero_has_no_inverse(self, F4):
        with pytest.raises(ZeroDivisionError):
            F4.inv(0)

    def test_check_rejects_bad_encodings(self, F3):
        with pytest.raises(FieldError):
            F3.check([0, 3])
        F3.check(np.array([0, 1, 2]))

    def test_from_int_reduces_into_prime_field(self, F4):
        assert F4.from_int(-1) == 1
        assert F4.from_int(3) == 1

    def test_combine(self, F5):
        out = F5.combine([1, 2], np.array([[1, 1], [3, 4]]))
        assert out.tolist() == [2, 4]
        with pytest.raises(DimensionError):
            F5.combine([1, 2, 3], np.array([[1, 1], [3, 4]]))

    def test_vectorised_arithmetic(self, F4):
        a = np.arange(4)
        assert F4.add(a, a).tolist() == [0, 0, 0, 0]
        assert F4.mul(a, np.ones(4, dtype=np.int64)).tolist() == [0, 1, 2, 3]


class TestParseOrder:
    def test_prime_and_power(self):
        assert parse_order("7").q == 7
        ctx = parse_order("2^3")
        assert (ctx.p, ctx.s, ctx.q, ctx.label) == (2, 3, 8, "2^3")
        assert parse_order(3).label == "3"

    @pytest.mark.parametrize("text", ["4", "x", "2^", "6^2", ""])
    def test_invalid(self, text):
        with pytest.raises(FieldError):
            parse_order(text)


class TestVectors:
    def test_index_roundtrip(self, F3):
        v = vec_from_index(F3, 3, 14)
        assert v.coords == (1, 1, 2)
        assert vec_index(v) == 14
        assert point_index((1, 1, 2), 3) == 14

    def test_indices_of_array(self, F3):
        arr = np.array([[0, 0], [2, 2], [1, 0]])
        assert point_indices(arr, 3).tolist() == [0, 8, 3]

    def test_index_out_of_range(self, F2):
        with pytest.raises(DimensionError):
            vec_from_index(F2, 2, 4)

    def test_vector_validates(self, F2):
        with pytest.raises(FieldError):
            FqVector(F2, (0, 2))
        assert len(FqVector(F2, (1, 0, 1))) == 3


@st.composite
def field_and_elements(draw):
    p, s = draw(st.sampled_from(ORDERS))
    ctx = fq_init(p, s)
    elements = st.integers(min_value=0, max_value=ctx.q - 1)
    return ctx, draw(elements), draw(elements), draw(elements)


class TestFieldAxioms:
    @settings(max_examples=200, deadline=None)
    @given(field_and_elements())
    def test_ring_axioms(self, data):
        ctx, a, b, c = data
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.add(a, ctx.neg(a)) == 0
        assert ctx.sub(ctx.add(a, b), b) == a

    @settings(max_examples=100, deadline=None)
    @given(field_and_elements())
    def test_inverses(self, data):
        ctx, a, _, _ = data
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
            c = 3 % ctx.p or 1
            assert ctx.div(ctx.mul(a, c), a) == c

    @settings(max_examples=50, deadline=None)
    @given(field_and_elements())
    def test_characteristic(self, data):
        ctx, a, _, _ = data
        total = 0
        for _ in range(ctx.p):
            total = ctx.add(total, a)
        assert total == 0
