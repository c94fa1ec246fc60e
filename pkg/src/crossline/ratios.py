"""Ratios of two and three points, the cross-ratio, and an identity catalog.

Every formula keeps its factors in the written order; nothing is reordered,
since over a skew field that would change the value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .extended import ExtendedScalar, Infinity, format_extended
from .rng import CounterRNG, gen_central, gen_nonzero, gen_scalar
from .scalar import Scalar, ScalarError, ZeroInverseError, commutes, is_central, one, zero


class AdmissibilityError(ScalarError):
    """A cross-ratio or ratio argument tuple violates a distinctness requirement."""


def ratio2(a: Scalar, b: Scalar) -> Scalar:
    """``r(A:B) = B^-1 A``."""
    if b.is_zero():
        raise AdmissibilityError("B ≠ O violated")
    return b.inv() * a


def ratio3(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    """``r(A,B;C) = (B-C)^-1 (A-C)``."""
    if b == c:
        raise AdmissibilityError("B ≠ C violated")
    return (b - c).inv() * (a - c)


def _fields(points) -> str:
    tags = {p.field for p in points}
    if len(tags) != 1:
        raise ScalarError(f"cross-ratio arguments mix fields {sorted(tags)}")
    return tags.pop()


def cross_ratio(a: ExtendedScalar, b: ExtendedScalar, c: ExtendedScalar,
                d: ExtendedScalar) -> Scalar:
    """``cr(A,B;C,D) = [(A-D)^-1 (B-D)] [(B-C)^-1 (A-C)]``.

    At most one argument may be infinite; that case uses the dedicated
    closed formula for its slot.
    """
    _fields((a, b, c, d))
    slots = [isinstance(x, Infinity) for x in (a, b, c, d)]
    n_inf = sum(slots)
    if n_inf > 1:
        raise AdmissibilityError("at most one argument may be inf")
    if n_inf == 0:
        if a == d:
            raise AdmissibilityError("A ≠ D violated")
        if b == c:
            raise AdmissibilityError("B ≠ C violated")
        return ((a - d).inv() * (b - d)) * ((b - c).inv() * (a - c))
    if slots[0]:
        if b == c:
            raise AdmissibilityError("B ≠ C violated")
        return (b - d) * (b - c).inv()
    if slots[1]:
        if a == d:
            raise AdmissibilityError("A ≠ D violated")
        return (a - d).inv() * (a - c)
    if slots[2]:
        if a == d:
            raise AdmissibilityError("A ≠ D violated")
        return (a - d).inv() * (b - d)
    if b == c:
        raise AdmissibilityError("B ≠ C violated")
    return (b - c).inv() * (a - c)


# -- identity catalog ----------------------------------------------------------

CrossRatioFn = Callable[[ExtendedScalar, ExtendedScalar, ExtendedScalar, ExtendedScalar], Scalar]


@dataclass(frozen=True)
class IdentityCheckResult:
    identity: str
    inputs: tuple
    lhs: Optional[ExtendedScalar]
    rhs: Optional[ExtendedScalar]
    holds: bool
    skipped: Optional[str] = None
    condition: Optional[str] = None

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return "skip"
        return "pass" if self.holds else "fail"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "inputs": [format_extended(x) for x in self.inputs],
            "lhs": None if self.lhs is None else format_extended(self.lhs),
            "rhs": None if self.rhs is None else format_extended(self.rhs),
            "holds": self.holds,
            "skipped": self.skipped,
            "condition": self.condition,
        }


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    arity: int
    hypotheses: Callable  # sample -> reason string or None
    evaluate: Callable  # (sample, cr) -> (lhs, rhs)
    sampler: Callable  # (rng, field, bound) -> sample
    commutative_only: bool = False


def _distinct(*xs) -> bool:
    return len(set(xs)) == len(xs)


def _need(*checks):
    """First failing (condition, reason) pair's reason, or None."""
    for ok, reason in checks:
        if not ok:
            return reason
    return None


def _indicator(flag: bool, field: str) -> Scalar:
    return one(field) if flag else zero(field)


# sample generators ---------------------------------------------------------

def _distinct_sample(rng, field, bound, n, nonzero=False):
    out = []
    while len(out) < n:
        x = gen_nonzero(rng, field, bound) if nonzero else gen_scalar(rng, field, bound)
        if x not in out:
            out.append(x)
    return tuple(out)


def _generic(n, nonzero=False):
    return lambda rng, field, bound: _distinct_sample(rng, field, bound, n, nonzero)


def _sample_r5(rng, field, bound):
    A = gen_nonzero(rng, field, bound)
    B = A if rng.below(4) == 0 else gen_nonzero(rng, field, bound)
    return (A, B)


def _sample_c7(rng, field, bound):
    A = gen_central(rng, field, bound)
    while A.is_zero():
        A = gen_central(rng, field, bound)
    return (A,) + _distinct_sample(rng, field, bound, 3, nonzero=True)


def _sample_c8(rng, field, bound):
    cond = "abcd"[rng.below(4)]
    if cond == "a":
        return tuple(gen_central(rng, field, bound) for _ in range(4))
    if cond == "b":
        # r(A,B;C) = rho central  <=>  A = C + (B - C) rho
        B, C, D = (gen_scalar(rng, field, bound) for _ in range(3))
        rho = gen_central(rng, field, bound)
        return (C + (B - C) * rho, B, C, D)
    if cond == "c":
        # r(B,A;D) = rho central  <=>  B = D + (A - D) rho
        A, C, D = (gen_scalar(rng, field, bound) for _ in range(3))
        rho = gen_central(rng, field, bound)
        return (A, D + (A - D) * rho, C, D)
    # r(A,B;D) = rho2 commuting with rho1 = r(A,B;C)
    B, C = (gen_scalar(rng, field, bound) for _ in range(2))
    rho1 = gen_scalar(rng, field, bound)
    rho2 = gen_central(rng, field, bound) + gen_central(rng, field, bound) * rho1
    A = C + (B - C) * rho1
    if rho2 == one(field):
        return (A, B, C, A)  # rejected by the hypotheses
    D = (A - B * rho2) * (one(field) - rho2).inv()
    return (A, B, C, D)


def _sample_c10(rng, field, bound):
    A, B, C, D = _distinct_sample(rng, field, bound, 4)
    inf = Infinity(field)
    return (inf, B, C, D) if rng.below(2) == 0 else (A, inf, C, D)


# hypotheses ---------------------------------------------------------------

def _hyp_distinct_nonzero(sample):
    return _need((_distinct(*sample), "points not distinct"),
                 (all(not x.is_zero() for x in sample), "a point equals O"))


def _hyp_distinct(sample):
    return _need((_distinct(*sample), "points not distinct"))


def c8_condition(sample) -> Optional[str]:
    """The first of the sufficient conditions (a)-(d) met by ``(A, B, C, D)``."""
    A, B, C, D = sample
    if all(is_central(x) for x in sample):
        return "a"
    rABC = ratio3(A, B, C)
    if is_central(rABC):
        return "b"
    if is_central(ratio3(B, A, D)):
        return "c"
    if commutes(ratio3(A, B, D), rABC):
        return "d"
    return None


def _hyp_c8(sample):
    reason = _hyp_distinct(sample)
    if reason:
        return reason
    if c8_condition(sample) is None:
        return "none of the sufficient conditions (a)-(d) holds"
    return None


def _hyp_c10(sample):
    finite = [x for x in sample if not isinstance(x, Infinity)]
    if len(finite) != 3:
        return "exactly one slot must be inf"
    if not isinstance(sample[0], Infinity) and not isinstance(sample[1], Infinity):
        return "inf must sit in slot A or B"
    return _need((_distinct(*finite), "finite points not distinct"))


# evaluations --------------------------------------------------------------

def _ev_r5(s, cr):
    A, B = s
    return (_indicator(ratio2(A, B) == ratio2(B, A), A.field), _indicator(A == B, A.field))


def _ev_c10(s, cr):
    A, B, C, D = s
    if isinstance(A, Infinity):
        return cr(A, B, C, D), ratio3(C, D, B).inv()
    return cr(A, B, C, D), ratio3(C, D, A)


def _ev_c3(s, cr):
    A, B, C, D = s
    return cr(A, D, B, C), one(A.field) - cr(A, B, C, D).inv()


def _ev_c5(s, cr):
    A, B, C, D = s
    x = cr(A, B, C, D)
    return cr(A, D, C, B), (x - one(A.field)).inv() * x


# The right-hand side of the negation identity C0, frozen from
# resolve_negation_identity(): "ABCD" means cr(-A,-B;-C,-D) = cr(A,B;C,D).
NEGATION_RHS = "ABCD"


def _ev_c0(s, cr):
    A, B, C, D = s
    lhs = cr(-A, -B, -C, -D)
    rhs = cr(A, B, C, D) if NEGATION_RHS == "ABCD" else cr(A, B, D, C)
    return lhs, rhs


def _inv_all(s):
    return tuple(x.inv() for x in s)


CATALOG: dict[str, Identity] = {}


def _register(ident: Identity) -> None:
    CATALOG[ident.id] = ident


_register(Identity(
    "R1", "r(B:A) = r(A:B)^-1", 2,
    lambda s: _need((s[0] != s[1], "A = B"), (not s[0].is_zero(), "A = O"), (not s[1].is_zero(), "B = O")),
    lambda s, cr: (ratio2(s[1], s[0]), ratio2(s[0], s[1]).inv()),
    _generic(2, nonzero=True)))
_register(Identity(
    "R2", "r(A+B:C) = r(A:C) + r(B:C)", 3,
    lambda s: _need((not s[2].is_zero(), "C = O")),
    lambda s, cr: (ratio2(s[0] + s[1], s[2]), ratio2(s[0], s[2]) + ratio2(s[1], s[2])),
    _generic(3, nonzero=True)))
_register(Identity(
    "R3", "r(A*B:C) = r(A:C)*B", 3,
    lambda s: _need((not s[2].is_zero(), "C = O")),
    lambda s, cr: (ratio2(s[0] * s[1], s[2]), ratio2(s[0], s[2]) * s[1]),
    _generic(3, nonzero=True)))
_register(Identity(
    "R4", "r(A:B*C) = C^-1 r(A:C)", 3,
    lambda s: _need((not s[1].is_zero(), "B = O"), (not s[2].is_zero(), "C = O")),
    lambda s, cr: (ratio2(s[0], s[1] * s[2]), s[2].inv() * ratio2(s[0], s[2])),
    _generic(3, nonzero=True)))
_register(Identity(
    "R5", "r(A:B) = r(B:A) <=> A = B", 2,
    lambda s: _need((not s[0].is_zero(), "A = O"), (not s[1].is_zero(), "B = O")),
    _ev_r5, _sample_r5))
_register(Identity(
    "R6", "r(-A,-B;-C) = r(A,B;C)", 3,
    lambda s: _need((s[1] != s[2], "B = C")),
    lambda s, cr: (ratio3(-s[0], -s[1], -s[2]), ratio3(*s)),
    _generic(3)))
_register(Identity(
    "R7", "r(A,B;C)^-1 = r(B,A;C)", 3,
    _hyp_distinct,
    lambda s, cr: (ratio3(*s).inv(), ratio3(s[1], s[0], s[2])),
    _generic(3)))
_register(Identity(
    "R8", "r(A^-1,B^-1;C^-1) = B r(A,B;C) A^-1", 3,
    _hyp_distinct_nonzero,
    lambda s, cr: (ratio3(*_inv_all(s)), s[1] * ratio3(*s) * s[0].inv()),
    _generic(3, nonzero=True)))
_register(Identity(
    "R9", "r(A^-1,B^-1;C^-1) = r(A,B;C) r(B,A;O)", 3,
    _hyp_distinct_nonzero,
    lambda s, cr: (ratio3(*_inv_all(s)), ratio3(*s) * ratio3(s[1], s[0], zero(s[0].field))),
    _generic(3, nonzero=True), commutative_only=True))
_register(Identity(
    "C0", "cr(-A,-B;-C,-D) = cr(A,B;C,D)", 4,
    _hyp_distinct, _ev_c0, _generic(4)))
_register(Identity(
    "C1", "cr(A,B;C,D)^-1 = cr(A,B;D,C)", 4,
    _hyp_distinct,
    lambda s, cr: (cr(*s).inv(), cr(s[0], s[1], s[3], s[2])),
    _generic(4)))
_register(Identity(
    "C2", "I - cr(A,B;C,D) = cr(A,C;B,D)", 4,
    _hyp_distinct,
    lambda s, cr: (one(s[0].field) - cr(*s), cr(s[0], s[2], s[1], s[3])),
    _generic(4)))
_register(Identity(
    "C3", "cr(A,D;B,C) = I - cr(A,B;C,D)^-1", 4,
    _hyp_distinct, _ev_c3, _generic(4)))
_register(Identity(
    "C4", "cr(A,C;D,B) = [I - cr(A,B;C,D)]^-1", 4,
    _hyp_distinct,
    lambda s, cr: (cr(s[0], s[2], s[3], s[1]), (one(s[0].field) - cr(*s)).inv()),
    _generic(4)))
_register(Identity(
    "C5", "cr(A,D;C,B) = [cr(A,B;C,D) - I]^-1 cr(A,B;C,D)", 4,
    _hyp_distinct, _ev_c5, _generic(4)))
_register(Identity(
    "C6", "cr(A^-1,B^-1;C^-1,D^-1) = A cr(A,B;C,D) A^-1", 4,
    _hyp_distinct_nonzero,
    lambda s, cr: (cr(*_inv_all(s)), s[0] * cr(*s) * s[0].inv()),
    _generic(4, nonzero=True)))
_register(Identity(
    "C7", "A central => cr(A,C;B,D) = cr(A^-1,B^-1;C^-1,D^-1)", 4,
    lambda s: _hyp_distinct_nonzero(s) or _need((is_central(s[0]), "A is not central")),
    lambda s, cr: (cr(s[0], s[2], s[1], s[3]), cr(*_inv_all(s))),
    _sample_c7))
_register(Identity(
    "C8", "any of (a)-(d) => cr(A,B;C,D) = cr(B,A;D,C)", 4,
    _hyp_c8,
    lambda s, cr: (cr(*s), cr(s[1], s[0], s[3], s[2])),
    _sample_c8))
_register(Identity(
    "C9", "cr(A,B;C,D) = r(B,A;D) r(A,B;C)", 4,
    lambda s: _need((s[0] != s[3], "A = D"), (s[1] != s[2], "B = C")),
    lambda s, cr: (cr(*s), ratio3(s[1], s[0], s[3]) * ratio3(s[0], s[1], s[2])),
    _generic(4)))
_register(Identity(
    "C10", "cr(inf,B;C,D) = r(C,D;B)^-1 and cr(A,inf;C,D) = r(C,D;A)", 4,
    _hyp_c10, _ev_c10, _sample_c10))

IDENTITY_IDS = tuple(CATALOG)


def hypothesis_failure(identity_id: str, sample: Sequence, field: Optional[str] = None) -> Optional[str]:
    ident = CATALOG[identity_id]
    if len(sample) != ident.arity:
        return f"{identity_id} takes {ident.arity} points, got {len(sample)}"
    field = field or sample[0].field
    if ident.commutative_only and field == "quat":
        return "commutative fields only"
    return ident.hypotheses(tuple(sample))


def check_identity(identity_id: str, sample: Sequence,
                   cr: CrossRatioFn = cross_ratio) -> IdentityCheckResult:
    """Evaluate both sides of a catalog identity exactly on ``sample``.

    Samples that violate the identity's hypotheses come back skipped, with the
    reason, and never count as passing.
    """
    if identity_id not in CATALOG:
        raise KeyError(f"unknown identity {identity_id!r}")
    sample = tuple(sample)
    reason = hypothesis_failure(identity_id, sample)
    if reason is not None:
        return IdentityCheckResult(identity_id, sample, None, None, False, skipped=reason)
    try:
        lhs, rhs = CATALOG[identity_id].evaluate(sample, cr)
    except (AdmissibilityError, ZeroInverseError) as exc:
        return IdentityCheckResult(identity_id, sample, None, None, False, skipped=str(exc))
    condition = c8_condition(sample) if identity_id == "C8" else None
    return IdentityCheckResult(identity_id, sample, lhs, rhs, lhs == rhs, condition=condition)


def sample_identity(identity_id: str, rng: CounterRNG, field: str, bound: int = 10) -> tuple:
    return CATALOG[identity_id].sampler(rng, field, bound)


def resolve_negation_identity(samples: int = 1000, seed: int = 0,
                              fields: Sequence[str] = ("rat", "quat")) -> dict:
    """Decide which right-hand side the negation identity has.

    Evaluates ``cr(-A,-B;-C,-D)`` against both ``cr(A,B;C,D)`` and
    ``cr(A,B;D,C)`` on random tuples of distinct points and counts agreements.
    """
    counts = {"ABCD": 0, "ABDC": 0, "samples": 0}
    for field in fields:
        for i in range(samples):
            rng = CounterRNG(seed, "negation-oracle", field, i)
            A, B, C, D = _distinct_sample(rng, field, 10, 4)
            lhs = cross_ratio(-A, -B, -C, -D)
            counts["ABCD"] += lhs == cross_ratio(A, B, C, D)
            counts["ABDC"] += lhs == cross_ratio(A, B, D, C)
            counts["samples"] += 1
    n = counts["samples"]
    universal = [k for k in ("ABCD", "ABDC") if counts[k] == n]
    counts["resolution"] = "+".join(universal) if universal else "neither"
    return counts
