import pickle

import pytest
from hypothesis import given, settings, strategies as st

from crossline.scalar import (
    FieldMismatchError,
    ParseError,
    ZeroInverseError,
    commutes,
    conjugate,
    format_scalar,
    int_mul,
    inv,
    is_central,
    one,
    parse_scalar,
    units,
    zero,
)
from conftest import Q, S, fields, nonzero, scalars

_, i, j, k = units("quat")


def test_rational_arithmetic():
    assert S("1/2") + S("1/3") == S("5/6")
    assert S("2/3") * S("3/2") == one("rat")
    assert -S("1/2") == S("-1/2")
    assert -zero("rat") == zero("rat")
    assert int_mul(3, S("1/2")) == S("3/2")


def test_quaternion_relations():
    assert i * j == k
    assert j * i == -k
    assert i + j == Q(0, 1, 1, 0)
    assert i - j == Q(0, 1, -1, 0)
    assert int_mul(-2, i) == Q(0, -2, 0, 0)
    assert int_mul(0, Q(1, 2, 3, 4)) == zero("quat")


def test_inverses():
    assert inv(i) == -i
    assert inv(Q(1, 1, 1, 1)) == Q("1/4", "-1/4", "-1/4", "-1/4")
    assert Q(1, 1, 1, 1) * inv(Q(1, 1, 1, 1)) == one("quat")
    assert inv(-one("rat")) == -one("rat")
    with pytest.raises(ZeroInverseError):
        inv(zero("gauss"))


def test_commutation_and_centre():
    assert not commutes(i, j)
    assert commutes(i, Q(1, 2, 0, 0))
    assert commutes(S(3), S("-7/2"))
    assert is_central(parse_scalar("3/4", "quat"))
    assert not is_central(i)
    assert is_central(S("5/9"))
    assert conjugate(i, j) == -i
    assert conjugate(Q(1, 2, 3, 4), one("quat")) == Q(1, 2, 3, 4)
    assert conjugate(parse_scalar("2", "quat"), Q(1, 2, 3, 4)) == parse_scalar("2", "quat")


def test_parse_and_format():
    assert parse_scalar("-3/4", "rat") == S("-3/4")
    assert parse_scalar("(1/2, -1)", "gauss") == parse_scalar("(1/2,-1)", "gauss")
    assert format_scalar(parse_scalar("(1/2, -1)", "gauss")) == "(1/2, -1)"
    assert parse_scalar("(0, 1, 0, 0)", "quat") == i
    assert format_scalar(S("6/4")) == "3/2"
    for bad, field in [("1/0", "rat"), ("(1, 2)", "quat"), ("x", "rat"), ("(1, 2", "gauss")]:
        with pytest.raises(ParseError):
            parse_scalar(bad, field)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        S(1) + parse_scalar("1", "gauss")
    with pytest.raises(TypeError):
        S(1) / S(2)


def test_pickle_round_trip():
    q = Q("1/3", -2, 0, 5)
    assert pickle.loads(pickle.dumps(q)) == q


@given(st.data())
@settings(max_examples=200)
def test_ring_axioms(data):
    f = data.draw(fields)
    a, b, c = (data.draw(scalars(f)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a - a == zero(f)


@given(st.data())
@settings(max_examples=200)
def test_inverse_both_sides(data):
    f = data.draw(fields)
    a = data.draw(nonzero(f))
    assert a * inv(a) == one(f) == inv(a) * a
    assert inv(inv(a)) == a


@given(st.data())
def test_format_round_trip(data):
    f = data.draw(fields)
    a = data.draw(scalars(f))
    assert parse_scalar(format_scalar(a), f) == a
