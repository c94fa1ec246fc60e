"""The extended line K u {inf}.

Only the partial arithmetic needed by the cross-ratio slot formulas and the
Moebius map is provided.  A finite value is a plain :class:`Scalar`; the point
at infinity is an :class:`Infinity` carrying its field tag.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .scalar import Scalar, ScalarError, check_field, parse_scalar, zero


class UndefinedFormError(ScalarError):
    """An arithmetic form on the extended line that is left undefined (e.g. inf * 0)."""


@dataclass(frozen=True)
class Infinity:
    field: str

    def __post_init__(self):
        check_field(self.field)

    def __str__(self):
        return "inf"


ExtendedScalar = Union[Scalar, Infinity]


def is_infinite(x) -> bool:
    return isinstance(x, Infinity)


def ext_inv(x: ExtendedScalar) -> ExtendedScalar:
    if isinstance(x, Infinity):
        return zero(x.field)
    if x.is_zero():
        return Infinity(x.field)
    return x.inv()


def absorb_mul(x: ExtendedScalar, f: Scalar) -> ExtendedScalar:
    """``x * f`` where ``x`` may be infinite; inf absorbs any nonzero finite factor."""
    if isinstance(x, Infinity):
        if f.field != x.field:
            raise ScalarError(f"cannot combine {x.field} infinity with {f.field} scalar")
        if f.is_zero():
            raise UndefinedFormError("inf * 0 is undefined")
        return x
    return x * f


def format_extended(x: ExtendedScalar) -> str:
    return "inf" if isinstance(x, Infinity) else str(x)


def parse_extended(text: str, field: str) -> ExtendedScalar:
    if text.strip() == "inf":
        return Infinity(check_field(field))
    return parse_scalar(text, field)
