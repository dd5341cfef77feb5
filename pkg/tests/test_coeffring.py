from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistchar.coeffring import (Laurent, SignedUnitValue, TruncatedSeries, coerce, is_unit,
                                 series_invert, series_mul, signed_unit_eval)
from twistchar.errors import InversionError, RingMismatchError


def S(*coeffs, order=None):
    return TruncatedSeries.from_coeffs(coeffs, order)


signed_units = st.builds(SignedUnitValue, st.integers(-50, 50), st.integers(-50, 50))


def test_series_mul_examples():
    assert series_mul(S(1, 1, order=2), S(1, -1, order=2)) == S(1, 0, -1)
    assert series_mul(S(1, 1, 1, 1), S(1, -1, order=3)) == S(1, order=3)
    assert series_mul(S(1, -2, 1, order=3), S(1, 2, 3, 4)) == S(1, order=3)


def test_series_invert_examples():
    assert series_invert(S(1)) == S(1)
    assert series_invert(S(1, -1, order=3)) == S(1, 1, 1, 1)
    assert series_invert(S(1, 2, 1)) == S(1, -2, 3)


def test_series_invert_over_rationals_and_signed_units():
    f = TruncatedSeries.from_coeffs([Fraction(2), 1], 3)
    g = series_invert(f)
    assert g.coeffs == (Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16))
    u = SignedUnitValue.unit()
    f = TruncatedSeries.from_coeffs([u, 1], 4, ring="Zu")
    assert series_mul(f, series_invert(f)).is_one()


def test_series_invert_non_unit():
    with pytest.raises(InversionError):
        series_invert(S(2, 1))
    with pytest.raises(InversionError):
        series_invert(TruncatedSeries.from_coeffs([SignedUnitValue(1, 1)], 2, ring="Zu"))


def test_series_ring_mismatch():
    f = TruncatedSeries.from_coeffs([Fraction(1, 2)], 2)
    g = TruncatedSeries.from_coeffs([SignedUnitValue(1, 1)], 2)
    with pytest.raises(RingMismatchError):
        series_mul(f, g)
    with pytest.raises(TypeError):
        series_mul(S(1, order=2), f)
    with pytest.raises(TypeError):
        series_mul(S(1, order=2), S(1, order=3))


def test_series_json_roundtrip():
    f = TruncatedSeries.from_coeffs([1, -2, 1], 3)
    assert f.to_json() == {"order": 3, "coeffs": [1, -2, 1, 0]}
    assert TruncatedSeries.from_json(f.to_json()) == f
    g = TruncatedSeries.from_coeffs([SignedUnitValue(2, -1), 1], 1)
    assert TruncatedSeries.from_json(g.to_json()) == g
    h = TruncatedSeries.from_coeffs([Fraction(1, 3), 2], 1)
    assert h.to_json() == {"order": 1, "coeffs": ["1/3", 2]}
    assert TruncatedSeries.from_json(h.to_json()) == h


def test_signed_unit_eval_examples():
    assert signed_unit_eval(SignedUnitValue(0, 1), -1) == -1
    assert signed_unit_eval(SignedUnitValue(1, 0), -1) == 1
    assert signed_unit_eval(SignedUnitValue(2, 1), 1) == 3


def test_signed_unit_json():
    x = SignedUnitValue(3, -2)
    assert x.to_json() == {"a": 3, "b": -2}
    assert SignedUnitValue.from_json(x.to_json()) == x


def test_u_squared_is_one():
    u = SignedUnitValue.unit()
    assert u * u == 1
    assert u ** 5 == u
    assert is_unit(u) and is_unit(-u) and not is_unit(SignedUnitValue(1, 1))


def test_no_mixing_q_and_zu():
    with pytest.raises(RingMismatchError):
        coerce(Fraction(1, 2), "Zu")
    with pytest.raises(TypeError):
        Fraction(1, 2) * SignedUnitValue(1, 1)


@given(signed_units, signed_units, signed_units)
def test_signed_unit_ring_axioms(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * 1 == x
    assert x + 0 == x


@given(signed_units, signed_units, st.sampled_from([1, -1]))
def test_evaluation_is_ring_homomorphism(x, y, sign):
    assert signed_unit_eval(x * y, sign) == signed_unit_eval(x, sign) * signed_unit_eval(y, sign)
    assert signed_unit_eval(x + y, sign) == signed_unit_eval(x, sign) + signed_unit_eval(y, sign)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 16).flatmap(
    lambda n: st.tuples(st.just(n), st.sampled_from([1, -1]),
                        st.lists(st.integers(-20, 20), min_size=n, max_size=n))))
def test_series_invert_is_two_sided_inverse(data):
    order, head, tail = data
    f = TruncatedSeries.from_coeffs([head, *tail], order)
    g = series_invert(f)
    assert series_mul(f, g).is_one()
    assert series_mul(g, f).is_one()


def test_laurent_monomial():
    mono = Laurent.monomial(-2, 3)
    assert mono.coefficient(3) == -2
    assert mono.coefficient(2) == 0
    assert mono.at_one() == -2
