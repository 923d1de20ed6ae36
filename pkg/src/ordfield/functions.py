"""The constructed counterexample functions as exactly evaluable symbolic
descriptors.

Functions form a closed enumeration rather than opaque callables so that
certificates and probe generators can introspect their structure and
transcripts can serialize them.  The step functions return the canonical
representative of the band/class of their argument (2**-n for the dyadic
band I_n in Q, x**v for valuation v in Q(x)); both are locally constant
off 0 and squeezed between linear envelopes, which is exactly what makes
their difference quotients vanish while f(t)/t stays bounded away from 0.

OuterSquareStep is the Peano counterexample: it jumps at the irrational
in-band cut 3/2 * c_m and takes the value 4**-m (the square of the band
scale) on the outer part.  It is therefore o(t) but not o(t**2), while
still being locally constant off 0; every derivative at 0 exists and is 0,
so its degree-n Taylor polynomial vanishes for every n although the Peano
remainder claim fails from n = 2 on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .certs import ConstRule, DeltaRule, LinearCapRule
from .dyadic import (
    class_index,
    constancy_radius_q,
    is_outer,
    outer_constancy_radius_q,
    sqrt2_gap_radius,
)
from .errors import DomainError, IrrationalityError, ParseError, UnsupportedDerivativeError
from .fields import Field, field_zero, from_rat, render_elem
from .laurent import RF_ZERO, valuation, x_pow
from .rationals import pow2


@dataclass(frozen=True)
class Identity:
    field: Field = Field.Q


@dataclass(frozen=True)
class Constant:
    field: Field
    value: object


@dataclass(frozen=True)
class Power:
    """t**n for n >= 1."""

    field: Field
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("power exponent must be at least 1")


@dataclass(frozen=True)
class StepQ:
    """Band representative 2**-n on I_n; 0 at 0."""


@dataclass(frozen=True)
class StepQX:
    """Class representative x**v(t); 0 at 0."""


@dataclass(frozen=True)
class IndicatorCut:
    """Indicator of the cut set {q : q < 0 or q**2 < 2} = (-inf, sqrt 2)."""


@dataclass(frozen=True)
class MonomialStep:
    """t**n * StepQ(t) for n >= 2."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("monomial step order must be at least 2")


@dataclass(frozen=True)
class MonomialStepDeriv:
    """k-th symbolic derivative of MonomialStep(n) away from 0:
    (n!/(n-k)!) * t**(n-k) * StepQ(t); defined as 0 at 0 (for k <= n this is
    the true k-th derivative there)."""

    n: int
    k: int = 1

    def __post_init__(self):
        if self.n < 2 or not 1 <= self.k <= self.n:
            raise DomainError("derivative order must satisfy 1 <= k <= n, n >= 2")


@dataclass(frozen=True)
class OuterSquareStep:
    """4**-m on the outer part (3/2 c_m, c_{m-1}) of each band, else 0."""


@dataclass(frozen=True)
class Quotient:
    f: "FieldFn"
    g: "FieldFn"


@dataclass(frozen=True)
class DiffQuotient:
    """h |-> (f(a+h) - f(a)) / h."""

    f: "FieldFn"
    a: object


FieldFn = (
    Identity
    | Constant
    | Power
    | StepQ
    | StepQX
    | IndicatorCut
    | MonomialStep
    | MonomialStepDeriv
    | OuterSquareStep
    | Quotient
    | DiffQuotient
)


def fn_field(fn: FieldFn) -> Field:
    if isinstance(fn, (Identity, Constant, Power)):
        return fn.field
    if isinstance(fn, StepQX):
        return Field.QX
    if isinstance(fn, (StepQ, IndicatorCut, MonomialStep, MonomialStepDeriv, OuterSquareStep)):
        return Field.Q
    if isinstance(fn, Quotient):
        return fn_field(fn.f)
    if isinstance(fn, DiffQuotient):
        return fn_field(fn.f)
    raise DomainError(f"not a FieldFn: {fn!r}")


def _step_q(t: Fraction) -> Fraction:
    return pow2(-class_index(t))


def _deriv_coeff(n: int, k: int) -> int:
    return math.factorial(n) // math.factorial(n - k)


def evaluate(fn: FieldFn, t):
    """Exact value of fn at t; raises DomainError off the domain."""
    if isinstance(fn, Identity):
        return t
    if isinstance(fn, Constant):
        return fn.value
    if isinstance(fn, Power):
        return t ** fn.n
    if isinstance(fn, StepQ):
        if t == 0:
            return Fraction(0)
        return _step_q(t)
    if isinstance(fn, StepQX):
        if not t:
            return RF_ZERO
        return x_pow(valuation(t))
    if isinstance(fn, IndicatorCut):
        if t < 0:
            return Fraction(1)
        sq = t * t
        if sq == 2:
            raise IrrationalityError("rational square equal to 2")
        return Fraction(1) if sq < 2 else Fraction(0)
    if isinstance(fn, MonomialStep):
        if t == 0:
            return Fraction(0)
        return t ** fn.n * _step_q(t)
    if isinstance(fn, MonomialStepDeriv):
        if t == 0:
            return Fraction(0)
        return _deriv_coeff(fn.n, fn.k) * t ** (fn.n - fn.k) * _step_q(t)
    if isinstance(fn, OuterSquareStep):
        if t == 0:
            return Fraction(0)
        m = class_index(t)
        return pow2(-2 * m) if is_outer(t, m) else Fraction(0)
    if isinstance(fn, Quotient):
        g = evaluate(fn.g, t)
        if not g:
            raise DomainError(f"quotient denominator vanishes at {render_elem(t)}")
        return evaluate(fn.f, t) / g
    if isinstance(fn, DiffQuotient):
        if not t:
            raise DomainError("difference quotient needs h != 0")
        return (evaluate(fn.f, fn.a + t) - evaluate(fn.f, fn.a)) / t
    raise DomainError(f"not a FieldFn: {fn!r}")


@dataclass(frozen=True)
class RatioCheck:
    """Transcript of the two strict envelope comparisons for |f(t)/t|."""

    ratio: object
    lower: object
    upper: object
    passed: bool


def ratio_bounds_check(fn: FieldFn, t) -> RatioCheck:
    """Check lower < |f(t)/t| < upper exactly, with the envelopes 1/2, 2 in
    Q and x, 1/x in Q(x)."""
    if not t:
        raise DomainError("envelope ratio needs t != 0")
    if isinstance(fn, StepQ):
        lower, upper = Fraction(1, 2), Fraction(2)
    elif isinstance(fn, StepQX):
        lower, upper = x_pow(1), x_pow(-1)
    else:
        raise DomainError("envelope bounds are defined for the step functions")
    ratio = abs(evaluate(fn, t) / t)
    return RatioCheck(ratio, lower, upper, lower < ratio and ratio < upper)


def local_constancy(fn: FieldFn, t):
    """A (value, radius) pair with fn constant (= value) on the open ball of
    that radius around t != 0."""
    if not t:
        raise DomainError("no constancy ball around 0")
    value = evaluate(fn, t)
    if isinstance(fn, StepQ):
        return value, constancy_radius_q(t)
    if isinstance(fn, StepQX):
        return value, abs(t) / 2
    if isinstance(fn, OuterSquareStep):
        return value, outer_constancy_radius_q(t)
    if isinstance(fn, IndicatorCut):
        return value, sqrt2_gap_radius(t)
    raise DomainError(f"no constancy rule for {fn_name(fn)}")


@dataclass(frozen=True)
class DerivativeCert:
    """Closed-form derivative value plus the delta-rule certifying the
    difference-quotient limit claim."""

    value: object
    rule: DeltaRule
    note: str


def derivative_certificate(fn: FieldFn, t) -> DerivativeCert:
    """Exact derivative of fn at t with a delta-rule for the claim
    lim_{h->0} (f(t+h)-f(t))/h = value.  Raises UnsupportedDerivativeError
    outside the closed-form table (in particular for the step functions at
    0, where the limit does not exist)."""
    field = fn_field(fn)
    one = from_rat(field, Fraction(1))
    if isinstance(fn, Identity):
        return DerivativeCert(one, ConstRule(one), "difference quotient is identically 1")
    if isinstance(fn, Constant):
        return DerivativeCert(
            field_zero(field), ConstRule(one), "difference quotient is identically 0"
        )
    if isinstance(fn, Power):
        return _power_cert(field, one, fn.n, t)
    if isinstance(fn, StepQ):
        if t == 0:
            raise UnsupportedDerivativeError("StepQ(h)/h has no limit at 0")
        _, radius = local_constancy(fn, t)
        return DerivativeCert(
            Fraction(0), ConstRule(radius), "constant on the band of t"
        )
    if isinstance(fn, StepQX):
        if not t:
            raise UnsupportedDerivativeError("StepQX(h)/h has no limit at 0")
        _, radius = local_constancy(fn, t)
        return DerivativeCert(RF_ZERO, ConstRule(radius), "constant on the class of t")
    if isinstance(fn, IndicatorCut):
        return DerivativeCert(
            Fraction(0),
            ConstRule(sqrt2_gap_radius(t)),
            "constant on t's side of sqrt(2)",
        )
    if isinstance(fn, OuterSquareStep):
        if t == 0:
            return DerivativeCert(
                Fraction(0),
                LinearCapRule(Fraction(1), Fraction(1)),
                "|f(h)/h| <= (8/9)|h| for every h",
            )
        _, radius = local_constancy(fn, t)
        return DerivativeCert(
            Fraction(0), ConstRule(radius), "constant on t's piece of its band"
        )
    if isinstance(fn, MonomialStep):
        return _monomial_step_cert(1, fn.n, t)
    if isinstance(fn, MonomialStepDeriv):
        if fn.k == fn.n:
            if t == 0:
                raise UnsupportedDerivativeError(
                    "the (n+1)-th derivative of t^n*StepQ(t) does not exist at 0"
                )
            _, radius = local_constancy(StepQ(), t)
            return DerivativeCert(
                Fraction(0), ConstRule(radius), "constant multiple of StepQ off 0"
            )
        return _monomial_step_cert(_deriv_coeff(fn.n, fn.k), fn.n - fn.k, t)
    raise UnsupportedDerivativeError(
        f"no closed-form derivative for {fn_name(fn)} at {render_elem(t)}"
    )


def _power_cert(field: Field, one, n: int, a) -> DerivativeCert:
    value = n * a ** (n - 1) if n > 1 else one
    if n == 1:
        return DerivativeCert(value, ConstRule(one), "difference quotient is identically 1")
    bound = sum(
        (math.comb(n, k) * abs(a) ** (n - k) for k in range(2, n + 1)),
        field_zero(field),
    )
    return DerivativeCert(
        value,
        LinearCapRule(one, one / bound),
        "binomial tail bound for |h| <= 1",
    )


def _monomial_step_cert(coeff: int, m: int, t) -> DerivativeCert:
    """Certificate for c * t^m * StepQ(t) (m >= 1)."""
    if t == 0:
        # quotient is c*h^(m-1)*StepQ(h); |StepQ(h)| < 2|h| and |h| <= 1
        return DerivativeCert(
            Fraction(0),
            LinearCapRule(Fraction(1), Fraction(1, 2 * coeff)),
            "step envelope |StepQ(h)| < 2|h| for |h| <= 1",
        )
    s = _step_q(t)
    radius = constancy_radius_q(t)
    value = coeff * m * t ** (m - 1) * s
    if m == 1:
        return DerivativeCert(
            value, ConstRule(radius), "quotient is exactly c*s inside the band"
        )
    bound = coeff * s * sum(math.comb(m, k) * abs(t) ** (m - k) for k in range(2, m + 1))
    cap = min(radius, Fraction(1))
    return DerivativeCert(
        value,
        LinearCapRule(cap, 1 / bound),
        "binomial tail bound inside the band, |h| <= 1",
    )


def fn_name(fn: FieldFn) -> str:
    """Canonical compact name used by the CLI and transcripts."""
    if isinstance(fn, Identity):
        return "identity"
    if isinstance(fn, Constant):
        return f"constant:{render_elem(fn.value)}"
    if isinstance(fn, Power):
        return f"pow:{fn.n}"
    if isinstance(fn, StepQ):
        return "step_q"
    if isinstance(fn, StepQX):
        return "step_qx"
    if isinstance(fn, IndicatorCut):
        return "indicator_cut"
    if isinstance(fn, MonomialStep):
        return f"monomial_step:{fn.n}"
    if isinstance(fn, MonomialStepDeriv):
        return f"monomial_step_deriv:{fn.n}:{fn.k}"
    if isinstance(fn, OuterSquareStep):
        return "outer_square_step"
    if isinstance(fn, Quotient):
        return f"quotient({fn_name(fn.f)},{fn_name(fn.g)})"
    if isinstance(fn, DiffQuotient):
        return f"diffq({fn_name(fn.f)},{render_elem(fn.a)})"
    raise DomainError(f"not a FieldFn: {fn!r}")


def parse_fn(field: Field, s: str) -> FieldFn:
    """Inverse of fn_name for the given field."""
    from .literals import parse_elem

    s = s.strip()
    if s == "identity":
        return Identity(field)
    if s == "step_q":
        _expect_field(field, Field.Q, s)
        return StepQ()
    if s == "step_qx":
        _expect_field(field, Field.QX, s)
        return StepQX()
    if s == "indicator_cut":
        _expect_field(field, Field.Q, s)
        return IndicatorCut()
    if s == "outer_square_step":
        _expect_field(field, Field.Q, s)
        return OuterSquareStep()
    if s.startswith("constant:"):
        return Constant(field, parse_elem(field, s.partition(":")[2]))
    if s.startswith("pow:"):
        return Power(field, _parse_int(s.partition(":")[2]))
    if s.startswith("monomial_step_deriv:"):
        _expect_field(field, Field.Q, s)
        parts = s.split(":")
        if len(parts) != 3:
            raise ParseError(f"expected monomial_step_deriv:n:k, got {s!r}")
        return MonomialStepDeriv(_parse_int(parts[1]), _parse_int(parts[2]))
    if s.startswith("monomial_step:"):
        _expect_field(field, Field.Q, s)
        return MonomialStep(_parse_int(s.partition(":")[2]))
    if s.startswith("quotient(") and s.endswith(")"):
        left, right = _split_two(s[len("quotient(") : -1])
        return Quotient(parse_fn(field, left), parse_fn(field, right))
    if s.startswith("diffq(") and s.endswith(")"):
        left, right = _split_two(s[len("diffq(") : -1])
        return DiffQuotient(parse_fn(field, left), parse_elem(field, right))
    raise ParseError(f"unknown function name {s!r}")


def _expect_field(field: Field, wanted: Field, name: str) -> None:
    if field is not wanted:
        raise ParseError(f"function {name!r} lives in field {wanted.value}")


def _parse_int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}") from None


def _split_two(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise ParseError(f"expected two comma-separated arguments in {body!r}")
