import re

import pytest

from crossline.line_arith import ConstructionTrace, LineFrame, geometric_add, geometric_mul, point_of
from crossline.scalar import units
from crossline.svg import UnsupportedFieldError, emit_svg, render_svg
from conftest import S


def _add_trace():
    f = LineFrame.standard("rat")
    return geometric_add(f, point_of(f, S(2)), point_of(f, S(3)))[1]


def test_addition_drawing_structure():
    svg = render_svg(_add_trace())
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert 'version="1.1"' in svg and "viewBox=" in svg
    assert len(re.findall(r'class="point"', svg)) == 5
    assert len(re.findall(r'class="(?:base|aux)"', svg)) == 4
    for name in ("O", "I", "A", "B", "B₁", "P₁", "C"):
        assert f">{name}</text>" in svg


def test_degenerate_multiplication_stacks_labels():
    f = LineFrame.standard("rat")
    trace = geometric_mul(f, f.I, point_of(f, S(9)))[1]
    svg = render_svg(trace)
    labels = re.findall(r'<text class="label" x="([^"]+)" y="([^"]+)"', svg)
    assert len(labels) == len(set(labels))


def test_byte_stable_after_replay(tmp_path):
    trace = _add_trace()
    again = ConstructionTrace.from_json(trace.to_json())
    again.replay()
    a, b = emit_svg(trace, tmp_path / "a.svg"), emit_svg(again, tmp_path / "b.svg")
    assert a.read_bytes() == b.read_bytes()


def test_non_rational_rejected():
    f = LineFrame.standard("quat")
    _, i, j, _ = units("quat")
    trace = geometric_add(f, point_of(f, i), point_of(f, j))[1]
    with pytest.raises(UnsupportedFieldError):
        render_svg(trace)
