"""Exact skew-field scalars.

Three concrete fields share one value type, :class:`Scalar`, distinguished
by a runtime field tag:

* ``rat``   -- the rationals Q
* ``gauss`` -- the Gaussian rationals Q(i) (commutative)
* ``quat``  -- the rational quaternions (a noncommutative division ring)

Coefficients are ``gmpy2.mpq`` values, so every operation is exact and the
structural equality of two scalars is value equality.
"""
from __future__ import annotations

import re
from functools import lru_cache
from operator import add as _add, sub as _sub

from gmpy2 import mpq

FIELDS = ("rat", "gauss", "quat")
DIMENSION = {"rat": 1, "gauss": 2, "quat": 4}


class ScalarError(ValueError):
    """Base class for scalar arithmetic errors."""


class FieldMismatchError(ScalarError):
    pass


class ZeroInverseError(ScalarError, ZeroDivisionError):
    pass


class ParseError(ScalarError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_new = object.__new__


def check_field(field: str) -> str:
    if field not in DIMENSION:
        raise ScalarError(f"unknown field {field!r}; expected one of {', '.join(FIELDS)}")
    return field


class Scalar:
    """An element of one of the three supported skew fields.

    Values are treated as immutable; nothing in the package mutates one.
    """

    __slots__ = ("field", "c")

    def __init__(self, field: str, coeffs):
        n = DIMENSION.get(field)
        if n is None:
            check_field(field)
        coeffs = tuple(mpq(v) for v in coeffs)
        if len(coeffs) != n:
            raise ScalarError(f"{field} scalar needs {n} coefficients, got {len(coeffs)}")
        self.field = field
        self.c = coeffs

    @classmethod
    def _raw(cls, field: str, coeffs: tuple) -> "Scalar":
        # trusted constructor: coeffs already a tuple of mpq of the right length
        s = _new(cls)
        s.field = field
        s.c = coeffs
        return s

    def __reduce__(self):
        return (Scalar, (self.field, tuple(str(v) for v in self.c)))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def _mismatch(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        raise FieldMismatchError(f"cannot combine {self.field} and {other.field} scalars")

    def __add__(self, other):
        if other.__class__ is not Scalar or other.field != self.field:
            return self._mismatch(other)
        return Scalar._raw(self.field, tuple(map(_add, self.c, other.c)))

    def __sub__(self, other):
        if other.__class__ is not Scalar or other.field != self.field:
            return self._mismatch(other)
        return Scalar._raw(self.field, tuple(map(_sub, self.c, other.c)))

    def __neg__(self):
        return Scalar._raw(self.field, tuple(-a for a in self.c))

    def __mul__(self, other):
        if other.__class__ is not Scalar or other.field != self.field:
            return self._mismatch(other)
        f = self.field
        if f == "rat":
            return Scalar._raw(f, (self.c[0] * other.c[0],))
        if f == "gauss":
            a, b = self.c
            c, d = other.c
            return Scalar._raw(f, (a * c - b * d, a * d + b * c))
        a1, b1, c1, d1 = self.c
        a2, b2, c2, d2 = other.c
        return Scalar._raw(f, (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ))

    def norm(self) -> mpq:
        """Sum of squared coefficients (the reduced norm for quaternions)."""
        return sum((v * v for v in self.c), mpq(0))

    def inv(self) -> "Scalar":
        n = self.norm()
        if not n:
            raise ZeroInverseError("zero has no inverse")
        f = self.field
        if f == "rat":
            return Scalar._raw(f, (1 / self.c[0],))
        # conjugate / norm works for both Q(i) and the quaternions
        head, *tail = self.c
        return Scalar._raw(f, (head / n,) + tuple(-v / n for v in tail))

    def __truediv__(self, other):
        raise TypeError("'/' is ambiguous over a skew field; use a.inv() * b or b * a.inv()")

    def __repr__(self):
        return f"Scalar({self.field!r}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


@lru_cache(maxsize=None)
def zero(field: str) -> Scalar:
    check_field(field)
    return Scalar._raw(field, (mpq(0),) * DIMENSION[field])


@lru_cache(maxsize=None)
def one(field: str) -> Scalar:
    check_field(field)
    return Scalar._raw(field, (mpq(1),) + (mpq(0),) * (DIMENSION[field] - 1))


def from_rational(field: str, value) -> Scalar:
    """Embed a rational number (int, str, Fraction or mpq) into ``field``."""
    check_field(field)
    return Scalar._raw(field, (mpq(value),) + (mpq(0),) * (DIMENSION[field] - 1))


@lru_cache(maxsize=None)
def units(field: str) -> tuple[Scalar, ...]:
    """The basis units of ``field``: (1,), (1, i) or (1, i, j, k)."""
    n = DIMENSION[check_field(field)]
    return tuple(
        Scalar._raw(field, tuple(mpq(1 if k == m else 0) for k in range(n))) for m in range(n)
    )


# -- module-level operations --------------------------------------------------

def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def neg(a: Scalar) -> Scalar:
    return -a


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def inv(a: Scalar) -> Scalar:
    return a.inv()


def int_mul(n: int, a: Scalar) -> Scalar:
    """``nA``: the n-fold sum of ``a``, or the (-n)-fold sum of ``-a`` for n < 0."""
    if n < 0:
        return int_mul(-n, -a)
    return Scalar._raw(a.field, tuple(n * v for v in a.c))


def commutes(a: Scalar, b: Scalar) -> bool:
    return a * b == b * a


def is_central(a: Scalar) -> bool:
    if a.field != "quat":
        return True
    # commuting with i and j is enough: k = ij, and the rest is linearity
    _, i, j, _ = units("quat")
    return commutes(a, i) and commutes(a, j)


def conjugate(p: Scalar, q: Scalar) -> Scalar:
    """``q^-1 p q``."""
    if q.is_zero():
        raise ZeroInverseError("conjugating by zero")
    return q.inv() * p * q


# -- text form ---------------------------------------------------------------

_RATIONAL = re.compile(r"\s*(-?)(\d+)(?:/(\d+))?\s*")


def _format_rational(v: mpq) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def format_scalar(a: Scalar) -> str:
    if a.field == "rat":
        return _format_rational(a.c[0])
    return "(" + ", ".join(_format_rational(v) for v in a.c) + ")"


def _parse_rational(text: str, pos: int, end: int) -> mpq:
    m = _RATIONAL.fullmatch(text, pos, end)
    if m is None:
        raise ParseError("malformed rational literal", text, pos)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", text, m.start(3))
    value = mpq(int(num), int(den) if den else 1)
    return -value if sign else value


def parse_scalar(text: str, field: str) -> Scalar:
    """Parse a scalar literal of ``field``; the inverse of :func:`format_scalar`.

    Rational literals are accepted by every field and embedded as the real part.
    """
    check_field(field)
    n = DIMENSION[field]
    s = text.strip()
    offset = text.index(s) if s else 0
    if not s.startswith("("):
        return from_rational(field, _parse_rational(text, offset, offset + len(s)))
    if not s.endswith(")"):
        raise ParseError("missing ')'", text, offset + len(s))
    parts = []
    start = offset + 1
    body_end = offset + len(s) - 1
    while True:
        comma = text.find(",", start, body_end)
        stop = body_end if comma < 0 else comma
        parts.append(_parse_rational(text, start, stop))
        if comma < 0:
            break
        start = comma + 1
    if len(parts) != n or n == 1:
        raise ParseError(f"{field} literal needs {n} components, got {len(parts)}", text, offset)
    return Scalar._raw(field, tuple(parts))


parse = parse_scalar
format = format_scalar  # noqa: A001
