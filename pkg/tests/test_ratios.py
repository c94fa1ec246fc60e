import pytest
from hypothesis import given, settings, strategies as st

from crossline.extended import Infinity
from crossline.ratios import (
    AdmissibilityError,
    CATALOG,
    IDENTITY_IDS,
    NEGATION_RHS,
    check_identity,
    cross_ratio,
    ratio2,
    ratio3,
    resolve_negation_identity,
)
from crossline.scalar import one, parse_scalar, units
from conftest import S, fields, scalars

_, i, j, k = units("quat")
INF = Infinity("rat")


def test_ratio2():
    assert ratio2(S(6), S(3)) == S(2)
    assert ratio2(S("5/7"), S("5/7")) == S(1)
    assert ratio2(i, j) == k
    with pytest.raises(AdmissibilityError, match="B ≠ O"):
        ratio2(S(1), S(0))


def test_ratio3():
    assert ratio3(S(3), S(2), S(1)) == S(2)
    assert ratio3(S(4), S(4), S(1)) == S(1)
    assert ratio3(S(1), S(2), S(1)) == S(0)


def test_cross_ratio_values():
    assert cross_ratio(S(0), S(1), S(2), S(3)) == S("4/3")
    assert cross_ratio(S(5), S(5), S(2), S(3)) == S(1)
    assert cross_ratio(S(1), S(-1), S(0), INF) == S(-1)
    A, B, C = S(7), S(-2), S("1/2")
    assert cross_ratio(A, B, C, INF) == ratio3(A, B, C)


def test_admissibility_errors_name_the_constraint():
    with pytest.raises(AdmissibilityError, match="B ≠ C violated"):
        cross_ratio(S(0), S(1), S(1), S(3))
    with pytest.raises(AdmissibilityError, match="A ≠ D violated"):
        cross_ratio(S(3), S(1), S(2), S(3))
    with pytest.raises(AdmissibilityError):
        cross_ratio(INF, INF, S(1), S(2))


def test_example_identities():
    res = check_identity("C2", [S(0), S(1), S(2), S(3)])
    assert res.holds and res.lhs == S("-1/3") and res.rhs == cross_ratio(S(0), S(2), S(1), S(3))
    assert check_identity("C6", [i, j, k, one("quat")]).holds


def test_hypothesis_violations_are_skipped():
    res = check_identity("C7", [i] + [parse_scalar(v, "quat") for v in "123"])
    assert res.status == "skip" and not res.holds
    res = check_identity("R9", [i, j, k])
    assert res.status == "skip"


def test_negation_oracle():
    counts = resolve_negation_identity(samples=200)
    assert counts["resolution"] == "ABCD" == NEGATION_RHS
    assert counts["ABDC"] < counts["samples"]


def test_catalog_ids_are_stable():
    assert IDENTITY_IDS == tuple(f"R{n}" for n in range(1, 10)) + tuple(f"C{n}" for n in range(11))
    assert CATALOG["R9"].commutative_only


@given(st.data())
@settings(max_examples=150)
def test_cr_times_swapped_cr_is_one(data):
    f = data.draw(fields)
    a, b, c, d = (data.draw(scalars(f)) for _ in range(4))
    if a == d or b == c or a == c or b == d:
        return
    assert cross_ratio(a, b, c, d) * cross_ratio(a, b, d, c) == one(f)


@given(st.data())
@settings(max_examples=100)
def test_finite_cross_ratio_is_finite(data):
    f = data.draw(fields)
    a, b, c, d = (data.draw(scalars(f)) for _ in range(4))
    if a == d or b == c:
        return
    assert not isinstance(cross_ratio(a, b, c, d), Infinity)
