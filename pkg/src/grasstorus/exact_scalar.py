"""Exact scalars: Gaussian rationals, points of the projective line, Laurent polynomials.

Everything here is immutable and exact.  A Gaussian rational is stored as a
reduced integer triple ``(a, b, d)`` meaning ``(a + b*i) / d`` with ``d > 0``;
``re`` and ``im`` are exposed as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class GaussianRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._a = re.numerator * (d // re.denominator)
        self._b = im.numerator * (d // im.denominator)
        self._d = d

    @classmethod
    def _raw(cls, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm_sq(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def inverse(self) -> GaussianRational:
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._d, o._d
        return GaussianRational._raw(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._d, o._d
        return GaussianRational._raw(self._a * d2 - o._a * d1, self._b * d2 - o._b * d1, d1 * d2)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"

    def __str__(self):
        return format_gaussian(self)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


def gq(x=0, y=0) -> GaussianRational:
    """Shorthand constructor; strings are parsed, numbers taken as ``x + y*i``."""
    if isinstance(x, GaussianRational):
        return x if y == 0 else x + GaussianRational(0, y)
    if isinstance(x, str):
        return parse_gaussian(x)
    return GaussianRational(x, y)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def field_ops():
    """The field operations as a name -> callable table (handy for property tests)."""
    return {
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "div": lambda a, b: a / b,
        "conjugate": lambda a: a.conjugate(),
        "normSq": lambda a: a.norm_sq(),
    }


# --------------------------------------------------------------------------
# projective line


class ProjectivePoint:
    """A point ``[first : second]`` of the projective line over Q(i).

    Stored canonically: ``second == 1`` when it is nonzero, else ``(1, 0)``.
    The value of ``[c : c']`` as a number is ``c / c'``.
    """

    __slots__ = ("first", "second")

    def __init__(self, first, second=ONE):
        first = gq(first)
        second = gq(second)
        if second:
            first = first / second
            second = ONE
        elif first:
            first = ONE
        else:
            raise ValueError("[0 : 0] is not a point of the projective line")
        self.first = first
        self.second = second

    @classmethod
    def infinity(cls) -> ProjectivePoint:
        return cls(ONE, ZERO)

    def is_infinity(self) -> bool:
        return not self.second

    def is_zero(self) -> bool:
        return not self.first

    def is_one(self) -> bool:
        return bool(self.second) and self.first == ONE

    def is_special(self) -> bool:
        """True at 0, 1 and infinity."""
        return self.is_infinity() or self.is_zero() or self.first == ONE

    @property
    def value(self) -> GaussianRational | None:
        """Affine value, or ``None`` at infinity."""
        return self.first if self.second else None

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self):
        return hash((self.first, self.second))

    def __repr__(self):
        return f"ProjectivePoint({self})"

    def __str__(self):
        return "inf" if self.is_infinity() else str(self.first)


def proj_canonicalize(a, b) -> ProjectivePoint:
    return ProjectivePoint(a, b)


# --------------------------------------------------------------------------
# Laurent polynomials in one variable t


class LaurentScalar:
    """Finite Laurent polynomial ``sum c_k t^k`` with Gaussian rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            c = gq(c)
            if c:
                clean[int(k)] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def constant(cls, c) -> LaurentScalar:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k: int) -> LaurentScalar:
        return cls({k: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("the zero series has no valuation")
        return next(iter(self.terms))

    def lead_coeff(self) -> GaussianRational:
        if not self.terms:
            raise ValueError("the zero series has no leading coefficient")
        return next(iter(self.terms.values()))

    def constant_term(self) -> GaussianRational:
        return self.terms.get(0, ZERO)

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, ZERO) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def scale_variable(self, c) -> LaurentScalar:
        """Substitute ``t -> c*t``."""
        c = gq(c)
        return LaurentScalar({k: a * c ** k for k, a in self.terms.items()})

    def __eq__(self, other):
        try:
            other = _as_laurent(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"LaurentScalar({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def _as_laurent(x) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return LaurentScalar.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent scalar")


T = LaurentScalar({1: 1})


def laurent_limit_ratio(f: LaurentScalar, g: LaurentScalar) -> ProjectivePoint:
    """Limit as t -> 0 of ``[f(t) : g(t)]``; ``g`` must be a nonzero series."""
    if g.is_zero():
        raise ZeroDivisionError("denominator series is identically zero")
    if f.is_zero():
        return ProjectivePoint(ZERO, ONE)
    vf, vg = f.valuation(), g.valuation()
    if vf > vg:
        return ProjectivePoint(ZERO, ONE)
    if vf < vg:
        return ProjectivePoint.infinity()
    return ProjectivePoint(f.lead_coeff(), g.lead_coeff())


def limit_of_pair(f: LaurentScalar, g: LaurentScalar) -> ProjectivePoint | None:
    """Limit of ``[f : g]`` in the projective line; ``None`` when both are zero series."""
    if f.is_zero() and g.is_zero():
        return None
    if g.is_zero():
        return ProjectivePoint.infinity()
    return laurent_limit_ratio(f, g)


# --------------------------------------------------------------------------
# text encoding


def format_gaussian(x: GaussianRational) -> str:
    re_part, im_part = x.re, x.im
    if im_part == 0:
        return str(re_part)
    im_str = f"{im_part}*i"
    if re_part == 0:
        return im_str
    if im_part < 0:
        return f"{re_part}{im_str}"
    return f"{re_part}+{im_str}"


def format_laurent(f: LaurentScalar) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for k, c in f.terms.items():
        cs = format_gaussian(c)
        if not c.is_real() and c.re != 0:
            cs = f"({cs})"
        parts.append(cs if k == 0 else f"{cs}*t^{k}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


_NUMBER = re.compile(r"^\d+(/\d+)?$")
_TPOW = re.compile(r"^t(\^(-?\d+))?$")


def _split_terms(s: str) -> list[str]:
    terms, depth, start = [], 0, 0
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        elif ch in "+-" and depth == 0 and pos > start:
            if s[pos - 1] not in "^*/(":
                terms.append(s[start:pos])
                start = pos
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    terms.append(s[start:])
    return terms


def _split_factors(s: str) -> list[str]:
    factors, depth, start = [], 0, 0
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            factors.append(s[start:pos])
            start = pos + 1
    factors.append(s[start:])
    return factors


def parse_laurent(text: str) -> LaurentScalar:
    """Parse sums of terms like ``2``, ``-3/2*i``, ``1*t^1``, ``(1+i)*t^-2``."""
    s = "".join(str(text).split())
    if not s:
        raise ValueError("empty scalar")
    total = LaurentScalar()
    for term in _split_terms(s):
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise ValueError(f"dangling sign in {text!r}")
        value = LaurentScalar.constant(sign)
        for factor in _split_factors(term):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if _NUMBER.match(factor):
                value = value * Fraction(factor)
            elif factor == "i":
                value = value * I
            elif factor.startswith("(") and factor.endswith(")"):
                value = value * parse_laurent(factor[1:-1])
            else:
                m = _TPOW.match(factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                value = value * LaurentScalar({int(m.group(2) or 1): 1})
        total = total + value
    return total


def parse_gaussian(text: str) -> GaussianRational:
    f = parse_laurent(text)
    if any(k != 0 for k in f.terms):
        raise ValueError(f"{text!r} depends on t; expected a constant")
    return f.constant_term()


def format_point(p: ProjectivePoint | None) -> str:
    """Cross-tuple value encoding: a number, ``inf`` or ``undef``."""
    return "undef" if p is None else str(p)


def parse_point(text: str) -> ProjectivePoint | None:
    text = text.strip()
    if text == "undef":
        return None
    if text == "inf":
        return ProjectivePoint.infinity()
    return ProjectivePoint(parse_gaussian(text))
