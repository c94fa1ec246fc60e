"""Geometric addition and multiplication of points on a line.

A :class:`LineFrame` fixes a zero point O and a unit point I on a line; the
point ``O + x*(I - O)`` carries the label ``x``.  :func:`geometric_add` and
:func:`geometric_mul` run the two straightedge-and-parallels constructions
step by step and return the constructed point with a replayable trace.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import plane
from .plane import (
    CoincidentLinesError,
    IncidenceError,
    PlaneError,
    PlaneLine,
    PlanePoint,
    intersect,
    line_through,
    parallel_through,
    parse_point,
)
from .scalar import Scalar, one, units, zero


class ConstructionError(PlaneError):
    pass


class AuxiliaryPointError(ConstructionError):
    pass


@dataclass(frozen=True)
class LineFrame:
    line: PlaneLine
    O: PlanePoint
    I: PlanePoint
    d: PlanePoint = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.O == self.I:
            raise plane.DegeneratePairError("frame needs O != I")
        if not (self.line.contains(self.O) and self.line.contains(self.I)):
            raise IncidenceError("O and I must lie on the frame line")
        object.__setattr__(self, "d", self.I - self.O)

    @classmethod
    def from_points(cls, O: PlanePoint, I: PlanePoint) -> "LineFrame":
        return cls(line_through(O, I), O, I)

    @classmethod
    def standard(cls, field_tag: str) -> "LineFrame":
        """O = (0, 0), I = (1, 0): labels are x-coordinates."""
        O = plane.origin(field_tag)
        return cls.from_points(O, PlanePoint(one(field_tag), zero(field_tag)))

    @property
    def field(self) -> str:
        return self.O.field

    def label(self, X: PlanePoint) -> Scalar:
        return label(self, X)

    def point_of(self, x: Scalar) -> PlanePoint:
        return point_of(self, x)


def label(frame: LineFrame, X: PlanePoint) -> Scalar:
    """The unique ``x`` with ``X = O + x*(I - O)``."""
    v = X - frame.O
    d = frame.d
    if not d.x.is_zero():
        x = v.x * d.x.inv()
        ok = v.y == x * d.y
    else:
        x = v.y * d.y.inv()
        ok = v.x.is_zero()
    if not ok:
        raise IncidenceError(f"{X} is not on the frame line")
    return x


def point_of(frame: LineFrame, x: Scalar) -> PlanePoint:
    return frame.O + frame.d.scaled(x)


def default_aux(frame: LineFrame) -> PlanePoint:
    """O + (0, 1), or O + (1, 1) when that lands on the line."""
    f = frame.field
    cand = frame.O + PlanePoint(zero(f), one(f))
    if frame.line.contains(cand):
        cand = frame.O + PlanePoint(one(f), one(f))
    return cand


# -- traces ------------------------------------------------------------------

@dataclass(frozen=True)
class TraceStep:
    id: str
    obj: object  # PlanePoint | PlaneLine
    op: str  # given | line_through | parallel_through | intersect
    args: tuple = ()
    step: int = 0  # algorithm step number; 0 for the frame and inputs

    @property
    def kind(self) -> str:
        return "point" if isinstance(self.obj, PlanePoint) else "line"


@dataclass
class ConstructionTrace:
    op: str
    field: str
    steps: list = field(default_factory=list)
    result: Optional[str] = None

    def __getitem__(self, step_id: str):
        for s in self.steps:
            if s.id == step_id:
                return s.obj
        raise KeyError(step_id)

    def record(self, step_id, obj, op="given", args=(), step=0):
        known = {s.id for s in self.steps}
        missing = [a for a in args if a not in known]
        if missing:
            raise ValueError(f"step {step_id} references unknown objects {missing}")
        self.steps.append(TraceStep(step_id, obj, op, tuple(args), step))
        return obj

    @property
    def result_point(self) -> PlanePoint:
        return self[self.result]

    def algorithm_steps(self) -> list[int]:
        return sorted({s.step for s in self.steps if s.step > 0})

    def replay(self) -> PlanePoint:
        """Re-execute every rule and check it reproduces the recorded object."""
        env: dict = {}
        for s in self.steps:
            args = [env[a] for a in s.args]
            if s.op == "given":
                obj = s.obj
            elif s.op == "line_through":
                obj = line_through(*args)
            elif s.op == "parallel_through":
                obj = parallel_through(*args)
            elif s.op == "intersect":
                obj = intersect(*args)
            else:
                raise ValueError(f"unknown rule {s.op!r}")
            if obj != s.obj:
                raise ConstructionError(f"replay of step {s.id} diverged")
            env[s.id] = obj
        return env[self.result]

    def to_dict(self) -> dict:
        return {
            "op": self.op,
            "field": self.field,
            "steps": [
                {
                    "id": s.id,
                    "kind": s.kind,
                    "data": _obj_data(s.obj),
                    "rule": {"op": s.op, "args": list(s.args), "step": s.step},
                }
                for s in self.steps
            ],
            "result": self.result,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "ConstructionTrace":
        f = doc["field"]
        trace = cls(doc["op"], f)
        for s in doc["steps"]:
            data = s["data"]
            if s["kind"] == "point":
                obj = parse_point(data, f)
            else:
                base = parse_point(data["base"], f)
                d = parse_point(data["dir"], f)
                obj = PlaneLine(base, plane.Direction(d.x, d.y))
            rule = s["rule"]
            trace.record(s["id"], obj, rule["op"], rule["args"], rule.get("step", 0))
        trace.result = doc["result"]
        return trace

    @classmethod
    def from_json(cls, text: str) -> "ConstructionTrace":
        return cls.from_dict(json.loads(text))


def _obj_data(obj):
    if isinstance(obj, PlanePoint):
        return str(obj)
    return {"base": str(obj.base), "dir": str(obj.dir)}


# -- the two constructions ---------------------------------------------------

def _meet(l1: PlaneLine, l2: PlaneLine, step: str) -> PlanePoint:
    try:
        p = intersect(l1, l2)
    except CoincidentLinesError as exc:
        raise ConstructionError(f"{step}: lines coincide") from exc
    if p is None:
        raise ConstructionError(f"{step}: lines are parallel")
    return p


def _start(op: str, frame: LineFrame, A: PlanePoint, B: PlanePoint, B1) -> ConstructionTrace:
    for name, P in (("A", A), ("B", B)):
        if not frame.line.contains(P):
            raise IncidenceError(f"{name} = {P} is not on the frame line")
    if B1 is None:
        B1 = default_aux(frame)
    if frame.line.contains(B1):
        raise AuxiliaryPointError(f"auxiliary point B1 = {B1} lies on the line")
    t = ConstructionTrace(op, frame.field)
    t.record("O", frame.O)
    t.record("I", frame.I)
    t.record("l_OI", frame.line, "line_through", ("O", "I"))
    t.record("A", A)
    t.record("B", B)
    t.record("B1", B1, step=1)
    return t


def geometric_add(frame: LineFrame, A: PlanePoint, B: PlanePoint,
                  B1: Optional[PlanePoint] = None) -> tuple[PlanePoint, ConstructionTrace]:
    """Construct ``C = A + B`` on the frame line using the auxiliary point ``B1``."""
    t = _start("add", frame, A, B, B1)
    l_OI, B1 = t["l_OI"], t["B1"]
    # Step 2: P1 = (parallel to OI through B1) meet (parallel to OB1 through A)
    l_OB1 = t.record("l_OB1", line_through(frame.O, B1), "line_through", ("O", "B1"), 2)
    m1 = t.record("m1", parallel_through(l_OI, B1), "parallel_through", ("l_OI", "B1"), 2)
    m2 = t.record("m2", parallel_through(l_OB1, A), "parallel_through", ("l_OB1", "A"), 2)
    P1 = t.record("P1", _meet(m1, m2, "Step.2"), "intersect", ("m1", "m2"), 2)
    # Step 3: C = (parallel to BB1 through P1) meet OI
    l_BB1 = t.record("l_BB1", line_through(B, B1), "line_through", ("B", "B1"), 3)
    m3 = t.record("m3", parallel_through(l_BB1, P1), "parallel_through", ("l_BB1", "P1"), 3)
    C = t.record("C", _meet(m3, l_OI, "Step.3"), "intersect", ("m3", "l_OI"), 3)
    t.result = "C"
    return C, t


def geometric_mul(frame: LineFrame, A: PlanePoint, B: PlanePoint,
                  B1: Optional[PlanePoint] = None) -> tuple[PlanePoint, ConstructionTrace]:
    """Construct the product of ``A`` and ``B`` on the frame line.

    Its label is ``ordered_product(label(A), label(B))``; see :data:`MUL_ORDER`.
    """
    t = _start("mul", frame, A, B, B1)
    l_OI, B1 = t["l_OI"], t["B1"]
    # Step 2: P1 = (parallel to IB1 through A) meet OB1
    l_IB1 = t.record("l_IB1", line_through(frame.I, B1), "line_through", ("I", "B1"), 2)
    l_OB1 = t.record("l_OB1", line_through(frame.O, B1), "line_through", ("O", "B1"), 2)
    m1 = t.record("m1", parallel_through(l_IB1, A), "parallel_through", ("l_IB1", "A"), 2)
    P1 = t.record("P1", _meet(m1, l_OB1, "Step.2"), "intersect", ("m1", "l_OB1"), 2)
    # Step 3: C = (parallel to BB1 through P1) meet OI
    l_BB1 = t.record("l_BB1", line_through(B, B1), "line_through", ("B", "B1"), 3)
    m3 = t.record("m3", parallel_through(l_BB1, P1), "parallel_through", ("l_BB1", "P1"), 3)
    C = t.record("C", _meet(m3, l_OI, "Step.3"), "intersect", ("m3", "l_OI"), 3)
    t.result = "C"
    return C, t


# -- factor order of the multiplication construction ---------------------------

def resolve_mul_order() -> str:
    """Run the multiplication construction on quaternion labels i, j.

    Returns ``"AB"`` when the constructed label is ``i*j`` and ``"BA"`` when
    it is ``j*i``.
    """
    frame = LineFrame.standard("quat")
    _, i, j, _ = units("quat")
    C, _ = geometric_mul(frame, point_of(frame, i), point_of(frame, j))
    got = label(frame, C)
    if got == i * j:
        return "AB"
    if got == j * i:
        return "BA"
    raise ConstructionError(f"multiplication construction gave neither i*j nor j*i: {got}")


# Frozen from resolve_mul_order(): the construction yields label(A) * label(B).
MUL_ORDER = "AB"


def ordered_product(a: Scalar, b: Scalar) -> Scalar:
    """The label of ``geometric_mul`` for input labels ``a`` and ``b``."""
    return a * b if MUL_ORDER == "AB" else b * a
