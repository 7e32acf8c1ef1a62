"""Exact coefficient arithmetic: rationals, polynomials in hbar, and their fraction field.

Rationals are `fractions.Fraction` (arbitrary precision, always reduced).
`HPoly` is a univariate polynomial in hbar over the rationals, stored as a
coefficient tuple lowest power first with trailing zeros stripped.  `HRat`
is the fraction field of `HPoly`, kept in canonical form: numerator and
denominator coprime, denominator monic and nonzero.

Everything here is immutable and hashable, so values can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class HPoly:
    """Polynomial in hbar with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HPoly is immutable")

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls) -> "HPoly":
        return cls(())

    @classmethod
    def one(cls) -> "HPoly":
        return cls((Fraction(1),))

    @classmethod
    def const(cls, value) -> "HPoly":
        return cls((_as_fraction(value),))

    @classmethod
    def h(cls, power: int = 1) -> "HPoly":
        """The monomial hbar**power."""
        if power < 0:
            raise ValueError("negative hbar power")
        return cls((0,) * power + (1,))

    # -- structure ------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree in hbar; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def divisible_by_h(self) -> bool:
        """True when the constant term vanishes (zero polynomial included)."""
        return not self.coeffs or self.coeffs[0] == 0

    # -- ring operations ------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, HPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return HPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return HPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return HPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return HPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return HPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = HPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(o.coeffs) + 1, 0)
        d = o.degree
        lc = o.lead
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lc
            quo[shift] = factor
            for i, c in enumerate(o.coeffs):
                rem[shift + i] -= factor * c
        return HPoly(quo), HPoly(rem)

    def exact_div(self, other) -> "HPoly":
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "HPoly":
        if not self:
            return self
        lc = self.lead
        if lc == 1:
            return self
        return HPoly(tuple(c / lc for c in self.coeffs))

    def eval(self, a) -> Fraction:
        """Evaluate at hbar = a by Horner's rule."""
        a = _as_fraction(a)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == HPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("HPoly", self.coeffs))

    def __repr__(self):
        return f"HPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_hpoly(self)


def _primitive_int_coeffs(p: HPoly) -> list:
    """Integer coefficient list of p divided by its rational content."""
    if not p:
        return []
    den_lcm = 1
    for c in p.coeffs:
        g = _gcd_int(den_lcm, c.denominator)
        den_lcm = den_lcm // g * c.denominator
    ints = [int(c * den_lcm) for c in p.coeffs]
    content = 0
    for c in ints:
        content = _gcd_int(content, abs(c))
    return [c // content for c in ints]


def _primitive_pseudo_rem(a: list, b: list) -> list:
    """Primitive part of the pseudo-remainder of integer polynomials a by b.

    Plain remainder sequences over Q blow up coefficient sizes; scaling by the
    leading coefficient keeps everything in integers, and stripping the content
    each round keeps them small.
    """
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        while a and a[-1] == 0:
            a.pop()
    content = 0
    for c in a:
        content = _gcd_int(content, abs(c))
    return [c // content for c in a] if content else []


def hpoly_gcd(a: HPoly, b: HPoly) -> HPoly:
    """Monic greatest common divisor via a primitive remainder sequence; gcd(0, 0) = 0."""
    ca, cb = _primitive_int_coeffs(a), _primitive_int_coeffs(b)
    while cb:
        ca, cb = cb, _primitive_pseudo_rem(ca, cb)
    if not ca:
        return HPoly.zero()
    lead = ca[-1]
    return HPoly([Fraction(c, lead) for c in ca])


def hpoly_eval(p: HPoly, a) -> Fraction:
    return p.eval(a)


def rational_roots(p: HPoly) -> list:
    """All rational roots of p, via the rational root test. Empty for constants."""
    if not p or p.is_constant():
        return []
    # clear denominators to get integer coefficients
    mult = 1
    for c in p.coeffs:
        mult = mult * c.denominator // _gcd_int(mult, c.denominator)
    ints = [int(c * mult) for c in p.coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)  # factor out hbar; 0 handled separately
    roots = set()
    if len(ints) < len(p.coeffs):
        roots.add(Fraction(0))
    if not ints:
        return sorted(roots)
    lead, const = ints[-1], ints[0]
    for pp in _divisors(abs(const)):
        for qq in _divisors(abs(lead)):
            for cand in (Fraction(pp, qq), Fraction(-pp, qq)):
                if p.eval(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(m: int) -> list:
    if m == 0:
        return [1]
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


class HRat:
    """Rational function in hbar, in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, HRat):
            base_num, base_den = num.num, num.den
        else:
            base_num = num if isinstance(num, HPoly) else HPoly.const(num)
            base_den = HPoly.one()
        if den is not None:
            if isinstance(den, HRat):
                base_num = base_num * den.den
                base_den = base_den * den.num
            else:
                d = den if isinstance(den, HPoly) else HPoly.const(den)
                base_den = base_den * d
        if not base_den:
            raise ZeroDivisionError("zero denominator")
        if not base_num:
            base_num, base_den = HPoly.zero(), HPoly.one()
        else:
            g = hpoly_gcd(base_num, base_den)
            if g.degree > 0 or g.lead != 1:
                base_num = base_num.exact_div(g)
                base_den = base_den.exact_div(g)
            lc = base_den.lead
            if lc != 1:
                base_num = base_num * (1 / lc)
                base_den = base_den * (1 / lc)
        object.__setattr__(self, "num", base_num)
        object.__setattr__(self, "den", base_den)

    def __setattr__(self, name, value):
        raise AttributeError("HRat is immutable")

    @classmethod
    def zero(cls) -> "HRat":
        return cls(HPoly.zero())

    @classmethod
    def one(cls) -> "HRat":
        return cls(HPoly.one())

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == HPoly.one()

    @staticmethod
    def _coerce(other):
        if isinstance(other, HRat):
            return other
        if isinstance(other, (HPoly, int, Fraction)):
            return HRat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return HRat(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "HRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return HRat(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def eval(self, a) -> Fraction:
        d = self.den.eval(a)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at h={a}")
        return self.num.eval(a) / d

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("HRat", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"HRat({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return format_hpoly(self.num)
        return f"({format_hpoly(self.num)})/({format_hpoly(self.den)})"


def format_rational(q) -> str:
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_hpoly(p: HPoly) -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            term = format_rational(c)
        else:
            base = "h" if k == 1 else f"h^{k}"
            if c == 1:
                term = base
            elif c == -1:
                term = f"-{base}"
            else:
                term = f"{format_rational(c)}*{base}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
