"""Integer polynomials and exact isolation of the largest real root."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

DEFAULT_PRECISION = 12


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficients in ascending degree order."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in _trim(self.coefficients)))

    @classmethod
    def x_minus(cls, a: int) -> "IntPolynomial":
        return cls((-a, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def sign_normalized(self) -> "IntPolynomial":
        if self.coefficients and self.leading < 0:
            return IntPolynomial(tuple(-c for c in self.coefficients))
        return self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        m = max(len(a), len(b))
        return IntPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def strip_x_power(self) -> Tuple["IntPolynomial", int]:
        """Divide out the largest power of x; returns (quotient, power)."""
        c = self.coefficients
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        return IntPolynomial(c[k:]), k

    def divides(self, other: "IntPolynomial") -> bool:
        """True when self divides other over the rationals."""
        _, rem = _divmod([Fraction(c) for c in other.coefficients], [Fraction(c) for c in self.coefficients])
        return not rem

    def text(self, var: str = "b") -> str:
        """Human form, e.g. ``b^4 - 4*b^3 + 3*b^2 - 2*b + 3``."""
        if not self.coefficients:
            return "0"
        parts = []
        for deg in range(self.degree, -1, -1):
            c = self.coefficients[deg]
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                mono = var if deg == 1 else f"{var}^{deg}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def coefficient_list(self) -> str:
        return ";".join(str(c) for c in self.coefficients)

    def __str__(self):
        return self.text()


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse the ``text`` form (any single-letter variable, ``*`` optional)."""
    s = text.replace(" ", "").replace("−", "-")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = re.fullmatch(r"(\d+)?\*?([^\W\d_])?(?:\^(\d+))?", body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {body!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            deg = 0
        else:
            deg = int(m.group(3)) if m.group(3) else 1
        coeffs[deg] = coeffs.get(deg, 0) + (c if sign == "+" else -c)
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def _divmod(num: List[Fraction], den: List[Fraction]):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    rem = list(num)
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        factor = rem[-1] / den[-1]
        quot[shift] = factor
        for i, d in enumerate(den):
            rem[shift + i] -= factor * d
        rem = _trim(rem)
    return _trim(quot), rem


def _derivative(c: Sequence) -> list:
    return [i * c[i] for i in range(1, len(c))]


def _monic(c):
    lead = c[-1]
    return [Fraction(a) / lead for a in c]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a) if a else a


def square_free_part(p: IntPolynomial) -> List[Fraction]:
    c = [Fraction(v) for v in p.coefficients]
    if len(c) <= 2:
        return c
    g = _gcd(c, _derivative(c))
    q, rem = _divmod(c, g)
    assert not rem
    return q


def _primitive(c) -> List[int]:
    """Positive rational multiple of c with coprime integer coefficients."""
    den = 1
    for v in c:
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in c]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


def sturm_sequence(c) -> List[List[int]]:
    """Sturm chain of c, each member scaled to a primitive integer polynomial."""
    seq = [_primitive(_trim(c)), _primitive(_trim(_derivative(c)))]
    while seq[-1] and len(seq[-1]) > 1:
        _, r = _divmod([Fraction(v) for v in seq[-2]], [Fraction(v) for v in seq[-1]])
        if not r:
            break
        seq.append(_primitive([-v for v in r]))
    return [q for q in seq if q]


def _sign_at(c: Sequence[int], x: Fraction) -> int:
    """Sign of c(x), using integer arithmetic only."""
    num, den = x.numerator, x.denominator
    d = len(c) - 1
    acc = 0
    for i, v in enumerate(c):
        acc += v * num ** i * den ** (d - i)
    return (acc > 0) - (acc < 0)


def _eval(c, x):
    acc = 0
    for v in reversed(c):
        acc = acc * x + v
    return acc


def _sign_changes(seq, x) -> int:
    signs = [v for v in (_sign_at(q, x) for q in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    c = p.coefficients
    return 1 + Fraction(max(abs(v) for v in c[:-1]), abs(c[-1])) if len(c) > 1 else Fraction(1)


@dataclass(frozen=True)
class AlgebraicValue:
    """A real algebraic number pinned down by an isolating interval.

    ``exact`` is set when the root is rational.
    """

    polynomial: IntPolynomial
    lo: Fraction
    hi: Fraction
    precision: int = DEFAULT_PRECISION
    is_one_fallback: bool = False
    exact: Optional[Fraction] = None

    @classmethod
    def integer(cls, value: int, polynomial: Optional[IntPolynomial] = None, precision: int = DEFAULT_PRECISION, is_one_fallback: bool = False):
        v = Fraction(value)
        poly = polynomial if polynomial is not None else IntPolynomial.x_minus(value)
        return cls(poly, v, v, precision, is_one_fallback, v)

    @property
    def midpoint(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    @property
    def value(self) -> float:
        return float(self)

    def refine(self, width: Fraction) -> "AlgebraicValue":
        """The same root with its isolating interval narrowed to ``width``."""
        if self.exact is not None or self.hi - self.lo <= width:
            return self
        base = _primitive(square_free_part(self.polynomial))
        lo, hi = self.lo, self.hi
        s_hi = _sign_at(base, hi)
        while hi - lo > width:
            m = (lo + hi) / 2
            sm = _sign_at(base, m)
            if sm == 0:
                return replace(self, lo=m, hi=m, exact=m)
            if sm == s_hi:
                hi = m
            else:
                lo = m
        return replace(self, lo=lo, hi=hi)

    def decimal(self, digits: Optional[int] = None) -> str:
        """The root correctly rounded to ``digits`` places after the point."""
        digits = self.precision if digits is None else digits
        if self.exact is not None:
            return _fraction_to_decimal(self.exact, digits, ROUND_HALF_EVEN)
        value = self
        for extra in range(2, 64, 4):
            value = value.refine(Fraction(1, 10 ** (digits + extra)))
            if value.exact is not None:
                return _fraction_to_decimal(value.exact, digits, ROUND_HALF_EVEN)
            lo = _fraction_to_decimal(value.lo, digits, ROUND_HALF_EVEN)
            if lo == _fraction_to_decimal(value.hi, digits, ROUND_HALF_EVEN):
                return lo
        # a rational root sitting on a rounding tie; the midpoint is within one unit
        return _fraction_to_decimal(value.midpoint, digits, ROUND_HALF_EVEN)

    def interval_text(self, digits: Optional[int] = None) -> Tuple[str, str]:
        """Outward-rounded decimal endpoints of the isolating interval."""
        digits = (self.precision if digits is None else digits) + 2
        return (
            _fraction_to_decimal(self.lo, digits, ROUND_FLOOR),
            _fraction_to_decimal(self.hi, digits, ROUND_CEILING),
        )

    def significant(self, sig: int = 6) -> str:
        """Rounded to ``sig`` significant digits, trailing zeros removed."""
        return format(float(self.decimal(max(self.precision, sig + 3))), f".{sig}g")

    def __str__(self):
        return self.decimal()


def _fraction_to_decimal(x: Fraction, digits: int, rounding) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 40
        d = Decimal(x.numerator) / Decimal(x.denominator)
        q = d.quantize(Decimal(1).scaleb(-digits), rounding=rounding)
    return format(q, "f")


def largest_root_geq(p: IntPolynomial, lower=1, precision: int = DEFAULT_PRECISION) -> Optional[AlgebraicValue]:
    """Greatest real root of ``p`` that is ``>= lower``, or ``None``.

    Sturm counting on the square-free part, bisection to width
    ``10**-precision``; integer roots are detected and returned exactly.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    lower = Fraction(lower)
    sqf = square_free_part(p)
    if len(sqf) <= 1:
        return None
    if len(sqf) == 2:
        root = -sqf[0] / sqf[1]
        if root < lower:
            return None
        return AlgebraicValue(p, root, root, precision, exact=root)
    bound = cauchy_bound(p)
    if lower > bound:
        return None
    seq = sturm_sequence(sqf)

    def count(a, b):  # roots in (a, b]
        return _sign_changes(seq, a) - _sign_changes(seq, b)

    a, b = lower, bound
    if count(a, b) == 0:
        if _eval(sqf, lower) == 0:
            return AlgebraicValue(p, lower, lower, precision, exact=lower)
        return None
    # isolate the largest root in (a, b]
    while count(a, b) > 1:
        m = (a + b) / 2
        if count(m, b) > 0:
            a = m
        else:
            b = m
    base = seq[0]
    for cand in range(math.floor(a) + 1, math.floor(b) + 1):
        if _sign_at(base, Fraction(cand)) == 0:
            c = Fraction(cand)
            return AlgebraicValue(p, c, c, precision, exact=c)
    if _sign_at(base, b) == 0:
        return AlgebraicValue(p, b, b, precision, exact=b)
    # the root is simple and interior, so the sign flips across it
    width = Fraction(1, 10 ** precision)
    sb = _sign_at(base, b)
    while b - a > width:
        m = (a + b) / 2
        sm = _sign_at(base, m)
        if sm == 0:
            return AlgebraicValue(p, m, m, precision, exact=m)
        if sm == sb:
            b = m
        else:
            a = m
    return AlgebraicValue(p, a, b, precision)
