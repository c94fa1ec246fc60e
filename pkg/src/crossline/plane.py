"""Incidence engine for the coordinate plane AG(2, K).

A line is stored as a base point plus a canonical direction.  Points of the
line are ``base + t*dir`` with the parameter ``t`` acting on the *left*, so
each direction class ``K*d`` is a left submodule and its canonical
representative is either ``(1, m)`` or ``(0, 1)``.  Bases are normalised too
(``x = 0`` for ``(1, m)`` lines, ``y = 0`` for vertical ones), which makes
line equality plain structural equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .rng import CounterRNG, gen_nonzero, gen_scalar
from .scalar import Scalar, one, parse_scalar, zero


class PlaneError(ValueError):
    pass


class DegeneratePairError(PlaneError):
    pass


class CoincidentLinesError(PlaneError):
    pass


class IncidenceError(PlaneError):
    pass


class InvalidConfigurationError(PlaneError):
    def __init__(self, clause: str):
        super().__init__(f"Desargues hypothesis violated: {clause}")
        self.clause = clause


class GenerationError(PlaneError):
    pass


@dataclass(frozen=True, slots=True)
class PlanePoint:
    x: Scalar
    y: Scalar

    @property
    def field(self) -> str:
        return self.x.field

    def __add__(self, other: "PlanePoint") -> "PlanePoint":
        return PlanePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlanePoint") -> "PlanePoint":
        return PlanePoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "PlanePoint":
        return PlanePoint(-self.x, -self.y)

    def scaled(self, t: Scalar) -> "PlanePoint":
        """Left scalar action ``t*(x, y) = (t*x, t*y)``."""
        return PlanePoint(t * self.x, t * self.y)

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def __str__(self):
        return f"[{self.x} ; {self.y}]"


@dataclass(frozen=True, slots=True)
class Direction:
    dx: Scalar
    dy: Scalar

    @classmethod
    def of(cls, v: PlanePoint) -> "Direction":
        """Canonical representative of the left class ``K*v``."""
        if not v.x.is_zero():
            return cls(one(v.field), v.x.inv() * v.y)
        if v.y.is_zero():
            raise DegeneratePairError("zero vector has no direction")
        return cls(zero(v.field), one(v.field))

    @property
    def vertical(self) -> bool:
        return self.dx.is_zero()

    def vector(self) -> PlanePoint:
        return PlanePoint(self.dx, self.dy)

    def __str__(self):
        return f"[{self.dx} ; {self.dy}]"


@dataclass(frozen=True, slots=True)
class PlaneLine:
    base: PlanePoint
    dir: Direction

    @classmethod
    def through(cls, point: PlanePoint, direction: Direction) -> "PlaneLine":
        if direction.vertical:
            base = PlanePoint(point.x, zero(point.field))
        else:
            # slide along the line to x = 0
            base = PlanePoint(zero(point.field), point.y - point.x * direction.dy)
        return cls(base, direction)

    @property
    def field(self) -> str:
        return self.base.field

    def contains(self, p: PlanePoint) -> bool:
        if self.dir.vertical:
            return p.x == self.base.x
        return p.y == self.base.y + p.x * self.dir.dy

    def param(self, p: PlanePoint) -> Scalar:
        """The ``t`` with ``p = base + t*dir``; raises if ``p`` is off the line."""
        if not self.contains(p):
            raise IncidenceError(f"{p} is not on the line")
        return p.y - self.base.y if self.dir.vertical else p.x

    def point_at(self, t: Scalar) -> PlanePoint:
        return self.base + self.dir.vector().scaled(t)

    def __str__(self):
        return f"{self.base} + t{self.dir}"


def point(x: Scalar, y: Scalar) -> PlanePoint:
    return PlanePoint(x, y)


def origin(field: str) -> PlanePoint:
    return PlanePoint(zero(field), zero(field))


def line_through(p: PlanePoint, q: PlanePoint) -> PlaneLine:
    if p == q:
        raise DegeneratePairError(f"a line needs two distinct points, got {p} twice")
    return PlaneLine.through(p, Direction.of(q - p))


def parallel_through(line: PlaneLine, p: PlanePoint) -> PlaneLine:
    """The unique line through ``p`` parallel to ``line`` (``line`` itself when p is on it)."""
    return PlaneLine.through(p, line.dir)


def is_parallel(l1: PlaneLine, l2: PlaneLine) -> bool:
    """Same parallel class; a line counts as parallel to itself."""
    return l1.dir == l2.dir


def intersect(l1: PlaneLine, l2: PlaneLine) -> Optional[PlanePoint]:
    """Common point of two distinct lines, or ``None`` when they are parallel."""
    if l1.dir == l2.dir:
        if l1 == l2:
            raise CoincidentLinesError(f"lines coincide: {l1}")
        return None
    if l1.dir.vertical:
        l1, l2 = l2, l1
    b1, m1 = l1.base, l1.dir.dy
    if l2.dir.vertical:
        t = l2.base.x
    else:
        # b1.y + t*m1 = b2.y + t*m2  =>  t = (b2.y - b1.y) (m1 - m2)^-1
        t = (l2.base.y - b1.y) * (m1 - l2.dir.dy).inv()
    p = PlanePoint(t, b1.y + t * m1)
    assert l1.contains(p) and l2.contains(p)
    return p


def on_line(p: PlanePoint, line: PlaneLine) -> bool:
    return line.contains(p)


def collinear(points: Sequence[PlanePoint]) -> bool:
    pts = list(points)
    if len(pts) < 3:
        return True
    first = pts[0]
    other = next((p for p in pts[1:] if p != first), None)
    if other is None:
        return True
    line = line_through(first, other)
    return all(line.contains(p) for p in pts)


def parse_point(text: str, field: str) -> PlanePoint:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")) or s.count(";") != 1:
        raise PlaneError(f"malformed point literal {text!r}; expected '[x ; y]'")
    xs, ys = s[1:-1].split(";")
    return PlanePoint(parse_scalar(xs, field), parse_scalar(ys, field))


# -- Desargues configurations ------------------------------------------------

@dataclass(frozen=True)
class DesarguesConfig:
    A: PlanePoint
    B: PlanePoint
    C: PlanePoint
    A1: PlanePoint
    B1: PlanePoint
    C1: PlanePoint

    def points(self):
        return (self.A, self.B, self.C, self.A1, self.B1, self.C1)


def _line(p: PlanePoint, q: PlanePoint, clause: str) -> PlaneLine:
    if p == q:
        raise InvalidConfigurationError(clause)
    return line_through(p, q)


@lru_cache(maxsize=16)
def validate_config(cfg: DesarguesConfig) -> str:
    """Check the hypothesis side of Desargues' axiom; returns ``"parallel"`` or ``"pencil"``."""
    A, B, C, A1, B1, C1 = cfg.points()
    aa = _line(A, A1, "A != A1")
    bb = _line(B, B1, "B != B1")
    cc = _line(C, C1, "C != C1")
    ab = _line(A, B, "A != B")
    bc = _line(B, C, "B != C")
    ac = _line(A, C, "A != C")
    ab1 = _line(A1, B1, "A1 != B1")
    bc1 = _line(B1, C1, "B1 != C1")
    ac1 = _line(A1, C1, "A1 != C1")

    named = [("l(AA1)", aa), ("l(BB1)", bb), ("l(CC1)", cc), ("l(AC)", ac), ("l(A1C1)", ac1)]
    for i, (n1, l1) in enumerate(named):
        for n2, l2 in named[i + 1:]:
            if l1 == l2:
                raise InvalidConfigurationError(f"{n1} != {n2}")

    if not is_parallel(ab, ab1):
        raise InvalidConfigurationError("l(AB) || l(A1B1)")
    if ab == ab1:
        raise InvalidConfigurationError("l(AB) != l(A1B1)")
    if not is_parallel(bc, bc1):
        raise InvalidConfigurationError("l(BC) || l(B1C1)")
    if bc == bc1:
        raise InvalidConfigurationError("l(BC) != l(B1C1)")

    if is_parallel(aa, bb) and is_parallel(bb, cc):
        return "parallel"
    p = intersect(aa, bb)
    if p is None or not cc.contains(p):
        raise InvalidConfigurationError("l(AA1), l(BB1), l(CC1) parallel or concurrent")
    return "pencil"


def desargues_check(cfg: DesarguesConfig) -> bool:
    """Whether ``l(AC) || l(A1C1)`` for a configuration meeting the hypotheses."""
    validate_config(cfg)
    return is_parallel(line_through(cfg.A, cfg.C), line_through(cfg.A1, cfg.C1))


MAX_RETRIES = 1000


def _random_point(rng: CounterRNG, field: str, bound: int) -> PlanePoint:
    return PlanePoint(gen_scalar(rng, field, bound), gen_scalar(rng, field, bound))


def _draw_config(rng: CounterRNG, field: str, case: str, bound: int) -> DesarguesConfig:
    A, B, C = (_random_point(rng, field, bound) for _ in range(3))
    if collinear([A, B, C]):
        raise DegeneratePairError("collinear triangle")
    ab, bc = line_through(A, B), line_through(B, C)
    if case == "parallel":
        v = _random_point(rng, field, bound)
        A1 = A + v.scaled(gen_nonzero(rng, field, bound))
        through_b = parallel_through(line_through(A, A1), B)
        through_c = parallel_through(through_b, C)
    elif case == "pencil":
        P = _random_point(rng, field, bound)
        A1 = P + (A - P).scaled(gen_nonzero(rng, field, bound))
        through_b = line_through(P, B)
        through_c = line_through(P, C)
    else:
        raise ValueError(f"unknown Desargues case {case!r}")
    B1 = intersect(through_b, parallel_through(ab, A1))
    if B1 is None:
        raise DegeneratePairError("B1 undefined")
    C1 = intersect(through_c, parallel_through(bc, B1))
    if C1 is None:
        raise DegeneratePairError("C1 undefined")
    cfg = DesarguesConfig(A, B, C, A1, B1, C1)
    if validate_config(cfg) != case:
        raise DegeneratePairError("drew the other case")
    return cfg


def random_desargues_config(seed, field: str, case: str, bound: int = 10) -> DesarguesConfig:
    """A configuration of the requested shape satisfying every hypothesis clause.

    ``seed`` is an int or a :class:`CounterRNG`.  Degenerate draws are rejected
    and redrawn, at most :data:`MAX_RETRIES` times.
    """
    if case not in ("parallel", "pencil"):
        raise ValueError(f"unknown Desargues case {case!r}")
    rng = seed if isinstance(seed, CounterRNG) else CounterRNG(seed, "desargues", field, case)
    for _ in range(MAX_RETRIES):
        try:
            return _draw_config(rng, field, case, bound)
        except PlaneError:
            continue
    raise GenerationError(f"no valid {case} configuration after {MAX_RETRIES} draws")
