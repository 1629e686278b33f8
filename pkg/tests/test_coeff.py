from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fgkit.coeff import FieldError, Scalar, field_from_spec, is_root_of_unity, unity_order

FIELDS = ["Q", "F2", "F7", "Q(t)", "F7(t)", "F3[t]/(t^2+1)", "Q[t]/(t^2+t+1)"]


def _element(K, seed):
    a, b, c = seed
    v = K.from_int(a)
    if K.has_t:
        v = K.add(v, K.mul(K.from_int(b), K.gen()))
        v = K.add(v, K.mul(K.from_int(c), K.mul(K.gen(), K.gen())))
    elif K.characteristic == 0:
        v = K.add(v, K.from_fraction(Fraction(b, abs(c) + 1)))
    return v


triples = st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))


@pytest.mark.parametrize("spec", FIELDS)
@settings(max_examples=40, deadline=None)
@given(x=triples, y=triples, z=triples)
def test_field_axioms(spec, x, y, z):
    K = field_from_spec(spec)
    a, b, c = _element(K, x), _element(K, y), _element(K, z)
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.add(a, b) == K.add(b, a)
    assert K.is_zero(K.add(a, K.neg(a)))
    if not K.is_zero(a):
        assert K.is_one(K.mul(a, K.inv(a)))


@pytest.mark.parametrize("spec", FIELDS)
def test_format_parse_roundtrip(spec):
    K = field_from_spec(spec)
    for seed in [(1, 2, 3), (-4, 0, 1), (0, 0, 0), (5, -1, 0)]:
        v = _element(K, seed)
        assert K.parse(K.format(v)) == v


def test_prime_field_reduces_and_prints_canonically():
    K = field_from_spec("F7")
    assert K.format(K.from_int(-1)) == "6"
    assert K.from_int(9) == K.from_int(2)


def test_bad_descriptors():
    for bad in ["F4", "R", "Q(t)(t)", "Q(t)[t]/(t^2+1)", ""]:
        with pytest.raises((FieldError, ValueError)):
            field_from_spec(bad)


def test_division_by_zero_raises():
    for spec in FIELDS:
        K = field_from_spec(spec)
        with pytest.raises((ZeroDivisionError, FieldError, ValueError)):
            K.inv(K.zero)


def test_unity_orders():
    F7 = field_from_spec("F7")
    assert unity_order(F7(2), 10) == 3
    assert unity_order(F7(3), 10) == 6
    Q = field_from_spec("Q")
    assert unity_order(Q(-1), 10) == 2
    assert unity_order(Q(2), 50) is None
    assert is_root_of_unity(Q(2)) == (False, None)
    Qt = field_from_spec("Q(t)")
    assert is_root_of_unity(Scalar(Qt, Qt.gen())) == (False, None)
    assert is_root_of_unity(Qt(-1)) == (True, 2)
    Z3 = field_from_spec("Q[t]/(t^2+t+1)")
    assert unity_order(Scalar(Z3, Z3.gen()), 10) == 3


def test_scalar_cross_field_arithmetic_rejected():
    with pytest.raises(FieldError):
        field_from_spec("F7")(1) + field_from_spec("F5")(1)
