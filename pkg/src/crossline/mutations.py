"""Deliberately wrong variants used to show the verification suites can fail."""
from __future__ import annotations

from dataclasses import dataclass

from .extended import Infinity
from .plane import PlanePoint
from .ratios import cross_ratio
from .transforms import LineTransform, TransformError


def reordered_cross_ratio(a, b, c, d):
    """Cross-ratio with its two bracketed factors swapped."""
    if any(isinstance(x, Infinity) for x in (a, b, c, d)):
        return cross_ratio(a, b, c, d)
    cross_ratio(a, b, c, d)  # same admissibility errors as the real one
    return ((b - c).inv() * (a - c)) * ((a - d).inv() * (b - d))


@dataclass(frozen=True)
class RightDilation:
    """``X -> X*lam + c``: multiplies each coordinate on the right."""

    lam: object
    c: PlanePoint
    kind = "dilation"

    def __post_init__(self):
        if self.lam.is_zero():
            raise TransformError("dilation factor must be nonzero")

    def apply(self, X: PlanePoint) -> PlanePoint:
        return PlanePoint(X.x * self.lam, X.y * self.lam) + self.c


class BothSidedInversion(LineTransform):
    """``x -> P*x*P`` instead of ``P*x``."""

    def apply(self, x):
        return self.P * x * self.P


MUTATIONS = ("reordered-cr", "right-dilation", "both-sided-inversion")
