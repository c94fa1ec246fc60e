from fractions import Fraction

from hypothesis import strategies as st

from crossline.scalar import DIMENSION, Scalar, parse_scalar


def S(text, field="rat"):
    return parse_scalar(str(text), field)


def Q(*coeffs):
    """Quaternion from four rationals."""
    return Scalar("quat", [Fraction(c) for c in coeffs])


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def scalars(field):
    n = DIMENSION[field]
    return st.tuples(*[rationals] * n).map(lambda cs: Scalar(field, cs))


def nonzero(field):
    return scalars(field).filter(lambda s: not s.is_zero())


fields = st.sampled_from(["rat", "gauss", "quat"])
