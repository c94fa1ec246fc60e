"""Exact cross-ratio calculus on lines of Desargues affine planes.

Scalars live in one of three skew fields (``rat``, ``gauss``, ``quat``); the
plane is K^2 with left-module lines.  Modules: :mod:`~crossline.scalar`,
:mod:`~crossline.extended`, :mod:`~crossline.plane`,
:mod:`~crossline.line_arith`, :mod:`~crossline.ratios`,
:mod:`~crossline.transforms`, :mod:`~crossline.harness` and the
``crossline`` command (:mod:`~crossline.cli`).
"""
from .extended import Infinity, format_extended, parse_extended
from .line_arith import LineFrame, geometric_add, geometric_mul, label, point_of
from .plane import PlaneLine, PlanePoint, intersect, line_through, parallel_through
from .ratios import check_identity, cross_ratio, ratio2, ratio3
from .scalar import FIELDS, Scalar, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "FIELDS", "Infinity", "LineFrame", "PlaneLine", "PlanePoint", "Scalar",
    "check_identity", "cross_ratio", "format_extended", "format_scalar",
    "geometric_add", "geometric_mul", "intersect", "label", "line_through",
    "parallel_through", "parse_extended", "parse_scalar", "point_of",
    "ratio2", "ratio3",
]
