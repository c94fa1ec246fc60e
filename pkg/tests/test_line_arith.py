import json

import pytest

from crossline.line_arith import (
    AuxiliaryPointError,
    ConstructionTrace,
    LineFrame,
    geometric_add,
    geometric_mul,
    label,
    ordered_product,
    point_of,
    resolve_mul_order,
)
from crossline.plane import PlanePoint, parse_point
from crossline.scalar import one, units, zero
from conftest import S

_, i, j, k = units("quat")


def test_labels():
    f = LineFrame.standard("rat")
    assert label(f, f.O) == zero("rat") and label(f, f.I) == one("rat")
    g = LineFrame.from_points(parse_point("[0 ; 0]", "rat"), parse_point("[1 ; 1]", "rat"))
    assert label(g, parse_point("[3 ; 3]", "rat")) == S(3)
    assert point_of(g, zero("rat")) == g.O and point_of(g, one("rat")) == g.I
    h = LineFrame.standard("quat")
    assert point_of(h, i) == PlanePoint(i, zero("quat"))


def test_add_rational():
    f = LineFrame.standard("rat")
    C, trace = geometric_add(f, point_of(f, S(2)), point_of(f, S(3)), parse_point("[0 ; 1]", "rat"))
    assert label(f, C) == S(5)
    assert trace.algorithm_steps() == [1, 2, 3]
    C, trace = geometric_add(f, f.O, point_of(f, S(3)))
    assert C == point_of(f, S(3)) and trace["P1"] == trace["B1"]


def test_mul_rational():
    f = LineFrame.standard("rat")
    A, B = point_of(f, S(2)), point_of(f, S(3))
    assert label(f, geometric_mul(f, A, B)[0]) == S(6)
    assert geometric_mul(f, f.I, B)[0] == B
    assert geometric_mul(f, A, f.I)[0] == A


AUX = ["[0 ; 1]", "[2 ; 3]", "[-1 ; 1/2]", "[(0, 1, 0, 0) ; (1, 0, 0, 1)]", "[5 ; (1, 1, 1, 1)]"]


def test_quaternion_constructions_do_not_depend_on_aux():
    f = LineFrame.standard("quat")
    A, B = point_of(f, i), point_of(f, j)
    sums = {geometric_add(f, A, B, parse_point(a, "quat"))[0] for a in AUX}
    prods = {geometric_mul(f, A, B, parse_point(a, "quat"))[0] for a in AUX}
    assert sums == {point_of(f, i + j)}
    assert prods == {point_of(f, ordered_product(i, j))}


def test_mul_order_oracle():
    assert resolve_mul_order() == "AB"
    assert ordered_product(i, j) == k


def test_aux_on_line_rejected():
    f = LineFrame.standard("rat")
    with pytest.raises(AuxiliaryPointError):
        geometric_add(f, f.O, f.I, parse_point("[4 ; 0]", "rat"))


def test_trace_round_trip_and_replay():
    f = LineFrame.standard("quat")
    C, trace = geometric_mul(f, point_of(f, i), point_of(f, j), parse_point(AUX[3], "quat"))
    doc = json.loads(trace.to_json())
    assert doc["result"] == "C" and {s["kind"] for s in doc["steps"]} == {"point", "line"}
    again = ConstructionTrace.from_json(trace.to_json())
    assert again.replay() == C
    assert again.to_json() == trace.to_json()
