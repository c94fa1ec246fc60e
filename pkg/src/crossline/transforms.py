"""Maps of the line and of the plane, and their effect on the cross-ratio.

Line transforms act on labels of a single frame (inversion, reflection,
natural translation, natural dilation, Moebius).  Plane maps (translations,
dilations, parallel projections) move a whole frame; :func:`transport_frame`
computes the induced label map ``kappa`` between the source and image frames.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .extended import ExtendedScalar, Infinity, absorb_mul, ext_inv
from .line_arith import LineFrame, label, point_of
from .plane import (
    Direction,
    IncidenceError,
    PlaneError,
    PlaneLine,
    PlanePoint,
    intersect,
    line_through,
    parse_point,
)
from .ratios import cross_ratio
from .scalar import Scalar, ScalarError, int_mul, one, parse_scalar


class TransformError(ValueError):
    pass


# -- line transforms ------------------------------------------------------------

LINE_KINDS = ("inversion", "reflection", "natural_translation", "natural_dilation", "mobius")


@dataclass(frozen=True)
class LineTransform:
    kind: str
    P: Optional[Scalar] = None
    n: Optional[int] = None
    B: Optional[Scalar] = None
    C: Optional[Scalar] = None
    D: Optional[Scalar] = None

    def __post_init__(self):
        k = self.kind
        if k not in LINE_KINDS:
            raise TransformError(f"unknown line transform {k!r}")
        if k == "inversion" and (self.P is None or self.P.is_zero()):
            raise TransformError("inversion needs a point P ≠ O")
        if k == "natural_translation" and self.P is None:
            raise TransformError("natural translation needs a point P")
        if k == "natural_dilation" and (not isinstance(self.n, int) or self.n == 0):
            raise TransformError("natural dilation needs a nonzero integer n")
        if k == "mobius":
            pts = (self.B, self.C, self.D)
            if any(p is None for p in pts) or len(set(pts)) != 3:
                raise TransformError("Moebius transform needs pairwise distinct B, C, D")

    @classmethod
    def inversion(cls, P: Scalar) -> "LineTransform":
        return cls("inversion", P=P)

    @classmethod
    def reflection(cls) -> "LineTransform":
        return cls("reflection")

    @classmethod
    def natural_translation(cls, P: Scalar) -> "LineTransform":
        return cls("natural_translation", P=P)

    @classmethod
    def natural_dilation(cls, n: int) -> "LineTransform":
        return cls("natural_dilation", n=n)

    @classmethod
    def mobius(cls, B: Scalar, C: Scalar, D: Scalar) -> "LineTransform":
        return cls("mobius", B=B, C=C, D=D)

    def apply(self, x: ExtendedScalar) -> ExtendedScalar:
        k = self.kind
        if k == "mobius":
            return _mobius(self.B, self.C, self.D, x)
        if isinstance(x, Infinity):
            raise TransformError(f"{k} is defined on finite points only")
        if k == "inversion":
            return self.P * x
        if k == "reflection":
            return -x
        if k == "natural_translation":
            return self.P + x
        return int_mul(self.n, x)


def _mobius(B: Scalar, C: Scalar, D: Scalar, x: ExtendedScalar) -> ExtendedScalar:
    """``mu(X) = cr(X, B; C, D)``, with ``mu(D) = inf`` from ``O^-1 = inf``."""
    if isinstance(x, Infinity):
        return cross_ratio(x, B, C, D)
    if x == D:
        first = absorb_mul(ext_inv(x - D), B - D)
        return absorb_mul(first, (B - C).inv() * (x - C))
    return cross_ratio(x, B, C, D)


def apply_line_transform(t: LineTransform, x: ExtendedScalar) -> ExtendedScalar:
    return t.apply(x)


def cr_after(t: LineTransform, points: Sequence[ExtendedScalar],
             cr: Callable = cross_ratio) -> ExtendedScalar:
    """Cross-ratio of the image tuple ``(t(A), t(B); t(C), t(D))``."""
    return cr(*(t.apply(x) for x in points))


# -- plane maps -----------------------------------------------------------------

@dataclass(frozen=True)
class Translation:
    t: PlanePoint
    kind = "translation"

    def apply(self, X: PlanePoint) -> PlanePoint:
        return X + self.t


@dataclass(frozen=True)
class Dilation:
    """``X -> lam*X + c`` with ``lam`` acting on the left of both coordinates."""

    lam: Scalar
    c: PlanePoint
    kind = "dilation"

    def __post_init__(self):
        if self.lam.is_zero():
            raise TransformError("dilation factor must be nonzero")

    @property
    def is_translation(self) -> bool:
        return self.lam == one(self.lam.field)

    def apply(self, X: PlanePoint) -> PlanePoint:
        return X.scaled(self.lam) + self.c


PlaneCollineation = Union[Translation, Dilation]


def apply_collineation(phi, P: PlanePoint) -> PlanePoint:
    return phi.apply(P)


def compose(outer, inner):
    """``outer o inner`` as a single translation or dilation."""
    if isinstance(outer, Translation) and isinstance(inner, Translation):
        return Translation(inner.t + outer.t)
    if isinstance(outer, Translation):
        return Dilation(inner.lam, inner.c + outer.t)
    if isinstance(inner, Translation):
        return Dilation(outer.lam, inner.t.scaled(outer.lam) + outer.c)
    return Dilation(outer.lam * inner.lam, inner.c.scaled(outer.lam) + outer.c)


def image_line(phi, line: PlaneLine, check: bool = True) -> PlaneLine:
    """Image of ``line`` under a plane map.

    With ``check`` set, raises unless the image keeps the canonical direction,
    which every dilatation must do.
    """
    p = line.base
    q = line.point_at(one(line.field))
    img = line_through(phi.apply(p), phi.apply(q))
    if check and img.dir != line.dir:
        raise TransformError(f"image of {line} changed direction to {img.dir}")
    return img


@dataclass(frozen=True)
class ParallelProjection:
    source: PlaneLine
    target: PlaneLine
    dir: Direction
    kind = "parallel_projection"

    def __post_init__(self):
        if self.dir == self.source.dir or self.dir == self.target.dir:
            raise TransformError("projection direction must differ from both lines")

    def apply(self, A: PlanePoint) -> PlanePoint:
        return project(self, A)


def project(p: ParallelProjection, A: PlanePoint) -> PlanePoint:
    if not p.source.contains(A):
        raise IncidenceError(f"{A} is not on the source line")
    img = intersect(PlaneLine.through(A, p.dir), p.target)
    assert img is not None and p.target.contains(img)
    return img


@dataclass(frozen=True)
class TransportedFrame:
    source: LineFrame
    frame: LineFrame
    phi: object

    def kappa(self, x: Scalar) -> Scalar:
        """Induced label map: ``label'(phi(point_of(x)))``."""
        return label(self.frame, self.phi.apply(point_of(self.source, x)))


def transport_frame(phi, f: LineFrame) -> TransportedFrame:
    if isinstance(phi, ParallelProjection) and phi.source != f.line:
        raise TransformError("frame line must be the projection's source line")
    O2, I2 = phi.apply(f.O), phi.apply(f.I)
    if O2 == I2:
        raise TransformError("map collapses O and I")
    return TransportedFrame(f, LineFrame.from_points(O2, I2), phi)


def cr_preservation_sides(phi, f: LineFrame, points: Sequence[PlanePoint],
                          cr: Callable = cross_ratio) -> tuple[Scalar, Scalar]:
    """``(kappa(cr(labels)), cr(labels of the image points))``."""
    tf = transport_frame(phi, f)
    labels = [label(f, P) for P in points]
    images = [label(tf.frame, phi.apply(P)) for P in points]
    return tf.kappa(cr(*labels)), cr(*images)


def cr_preserved(phi, f: LineFrame, points: Sequence[PlanePoint],
                 cr: Callable = cross_ratio) -> bool:
    lhs, rhs = cr_preservation_sides(phi, f, points, cr)
    return lhs == rhs


# -- JSON descriptors -------------------------------------------------------------

def _line_from(pair, field: str) -> PlaneLine:
    p, q = (parse_point(s, field) for s in pair)
    return line_through(p, q)


def from_descriptor(desc: dict, field: str):
    """Build a transform from its JSON descriptor, e.g. ``{"kind": "inversion", "P": "2"}``."""
    try:
        kind = desc["kind"]
        if kind == "inversion":
            return LineTransform.inversion(parse_scalar(desc["P"], field))
        if kind == "reflection":
            return LineTransform.reflection()
        if kind == "natural_translation":
            return LineTransform.natural_translation(parse_scalar(desc["P"], field))
        if kind == "natural_dilation":
            return LineTransform.natural_dilation(int(desc["n"]))
        if kind == "mobius":
            return LineTransform.mobius(*(parse_scalar(desc[k], field) for k in "BCD"))
        if kind == "translation":
            return Translation(parse_point(desc["t"], field))
        if kind == "dilation":
            return Dilation(parse_scalar(desc["lambda"], field), parse_point(desc.get("c", "[0 ; 0]"), field))
        if kind == "parallel_projection":
            d = parse_point(desc["dir"], field)
            return ParallelProjection(_line_from(desc["source"], field), _line_from(desc["target"], field),
                                      Direction.of(d))
    except KeyError as exc:
        raise TransformError(f"descriptor is missing {exc.args[0]!r}") from exc
    except (ScalarError, PlaneError, ValueError) as exc:
        raise TransformError(str(exc)) from exc
    raise TransformError(f"unknown transform kind {desc.get('kind')!r}")


def to_descriptor(t) -> dict:
    if isinstance(t, LineTransform):
        d: dict = {"kind": t.kind}
        if t.P is not None:
            d["P"] = str(t.P)
        if t.n is not None:
            d["n"] = t.n
        if t.kind == "mobius":
            d.update(B=str(t.B), C=str(t.C), D=str(t.D))
        return d
    if isinstance(t, Translation):
        return {"kind": "translation", "t": str(t.t)}
    if isinstance(t, Dilation):
        return {"kind": "dilation", "lambda": str(t.lam), "c": str(t.c)}
    if isinstance(t, ParallelProjection):
        return {
            "kind": "parallel_projection",
            "dir": str(t.dir),
            "source": [str(t.source.base), str(t.source.point_at(one(t.source.field)))],
            "target": [str(t.target.base), str(t.target.point_at(one(t.target.field)))],
        }
    raise TypeError(f"no descriptor for {type(t).__name__}")
