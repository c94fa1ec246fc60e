import pytest
from hypothesis import given, settings, strategies as st

from crossline.plane import (
    CoincidentLinesError,
    DesarguesConfig,
    Direction,
    InvalidConfigurationError,
    PlaneLine,
    PlanePoint,
    collinear,
    desargues_check,
    intersect,
    line_through,
    on_line,
    parallel_through,
    parse_point,
    random_desargues_config,
    validate_config,
)
from crossline.scalar import one, units, zero
from conftest import S, fields, scalars

_, i, j, k = units("quat")


def P(x, y, field="rat"):
    return parse_point(f"[{x} ; {y}]", field)


def test_line_through_rational():
    l = line_through(P(0, 0), P(1, 1))
    assert l.base == P(0, 0) and l.dir == Direction(one("rat"), one("rat"))
    assert line_through(P(0, 0), P(0, 5)).dir == Direction(zero("rat"), one("rat"))


def test_line_through_quaternion():
    O, X = PlanePoint(zero("quat"), zero("quat")), PlanePoint(i, j)
    l = line_through(O, X)
    assert l.dir == Direction(one("quat"), -k)
    assert l.contains(O) and l.contains(X)


def test_parallel_through():
    x_axis = line_through(P(0, 0), P(1, 0))
    assert parallel_through(x_axis, P(0, 1)) == line_through(P(0, 1), P(5, 1))
    assert parallel_through(x_axis, P(3, 0)) == x_axis
    q = PlaneLine.through(PlanePoint(zero("quat"), zero("quat")), Direction(one("quat"), -k))
    R = PlanePoint(one("quat"), one("quat"))
    par = parallel_through(q, R)
    assert par.dir == q.dir and par.contains(R)


def test_intersect():
    x_axis = line_through(P(0, 0), P(1, 0))
    y_axis = line_through(P(0, 0), P(0, 1))
    assert intersect(x_axis, y_axis) == P(0, 0)
    assert intersect(x_axis, line_through(P(0, 1), P(1, 1))) is None
    with pytest.raises(CoincidentLinesError):
        intersect(x_axis, line_through(P(2, 0), P(7, 0)))
    O = PlanePoint(zero("quat"), zero("quat"))
    l1 = PlaneLine.through(O, Direction(one("quat"), i))
    l2 = PlaneLine.through(PlanePoint(one("quat"), zero("quat")), Direction(zero("quat"), one("quat")))
    assert intersect(l1, l2) == PlanePoint(one("quat"), i)


def test_incidence_predicates():
    l = line_through(P(0, 0), P(1, 1))
    assert on_line(P(2, 2), l)
    assert not on_line(P(2, 3), l)
    assert collinear([P(0, 0), P(1, 1), P(2, 2), P(7, 7)])
    assert not collinear([P(0, 0), P(1, 0), P(0, 1)])


def test_desargues_fixed_configs():
    A, B, C = P(0, 0), P(3, 1), P(1, 4)
    v = P(2, -5)
    assert desargues_check(DesarguesConfig(A, B, C, A + v, B + v, C + v))
    two = S(2)
    A, B, C = P(1, 0), P(3, 1), P(1, 4)
    assert desargues_check(DesarguesConfig(A, B, C, A.scaled(two), B.scaled(two), C.scaled(two)))


def test_desargues_rejects_bad_hypothesis():
    A, B, C = P(0, 0), P(3, 1), P(1, 4)
    with pytest.raises(InvalidConfigurationError):
        desargues_check(DesarguesConfig(A, B, C, P(5, 5), P(9, 1), P(1, 7)))


@pytest.mark.parametrize("field", ["rat", "gauss", "quat"])
@pytest.mark.parametrize("case", ["parallel", "pencil"])
def test_random_configs_are_valid(field, case):
    for seed in range(1, 30):
        cfg = random_desargues_config(seed, field, case)
        assert validate_config(cfg) == case
        assert desargues_check(cfg)


@given(st.data())
@settings(max_examples=100)
def test_line_through_contains_both_points(data):
    f = data.draw(fields)
    p = PlanePoint(data.draw(scalars(f)), data.draw(scalars(f)))
    q = PlanePoint(data.draw(scalars(f)), data.draw(scalars(f)))
    if p == q:
        return
    l = line_through(p, q)
    assert l.contains(p) and l.contains(q)
    assert l == line_through(q, p)
