"""Words and noncommutative polynomials in the free algebra on x_1..x_n over hbar scalars.

A word is a tuple of generator indices in 1..n; the empty tuple is the unit
monomial.  An `NCPoly` maps words to coefficients and never stores zeros.
Coefficients may be `Fraction`, `HPoly`, or `HRat`; a single polynomial keeps
one coefficient kind throughout.  Words are ordered degree first, then
lexicographically (deglex), which is also the deterministic iteration order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import AmbientMismatch, BadIndex, UndefinedDegree
from .scalars import HPoly, HRat, format_hpoly, format_rational

Word = Tuple[int, ...]


def deglex_key(word: Word):
    return (len(word), word)


def check_word(word: Word, n: int) -> None:
    for letter in word:
        if not 1 <= letter <= n:
            raise BadIndex(f"letter {letter} outside 1..{n}")


class NCPoly:
    """Finitely supported map from words to scalars."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Word, object] | None = None):
        self.n = n
        cleaned: Dict[Word, object] = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    check_word(word, n)
                    cleaned[tuple(word)] = coeff
        self.terms = cleaned

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "NCPoly":
        return cls(n, {})

    @classmethod
    def unit(cls, n: int, one=Fraction(1)) -> "NCPoly":
        return cls(n, {(): one})

    @classmethod
    def gen(cls, n: int, i: int, one=Fraction(1)) -> "NCPoly":
        if not 1 <= i <= n:
            raise BadIndex(f"generator {i} outside 1..{n}")
        return cls(n, {(i,): one})

    @classmethod
    def word(cls, n: int, letters: Iterable[int], coeff=Fraction(1)) -> "NCPoly":
        return cls(n, {tuple(letters): coeff})

    # -- inspection -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]))

    def coeff(self, word: Word):
        return self.terms.get(tuple(word), Fraction(0))

    def deg_x(self) -> int:
        """Maximum word length over the support; undefined for zero."""
        if not self.terms:
            raise UndefinedDegree("x-degree of the zero polynomial")
        return max(len(w) for w in self.terms)

    def _check_ambient(self, other: "NCPoly"):
        if self.n != other.n:
            raise AmbientMismatch(f"generator counts differ: {self.n} vs {other.n}")

    # -- linear structure -----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check_ambient(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = out.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[word] = acc
            elif word in out:
                del out[word]
        result = NCPoly.zero(self.n)
        result.terms = out
        return result

    def __neg__(self):
        result = NCPoly.zero(self.n)
        result.terms = {w: -c for w, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar):
        if not scalar:
            return NCPoly.zero(self.n)
        result = NCPoly.zero(self.n)
        terms = {}
        for w, c in self.terms.items():
            prod = scalar * c
            if prod:
                terms[w] = prod
        result.terms = terms
        return result

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return nc_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, NCPoly):
            return NotImplemented
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset((w, _hashable(c)) for w, c in self.terms.items())))

    # -- coefficient-kind conversions -------------------------------------
    def map_coeffs(self, fn) -> "NCPoly":
        result = NCPoly.zero(self.n)
        terms = {}
        for w, c in self.terms.items():
            v = fn(c)
            if v:
                terms[w] = v
        result.terms = terms
        return result

    def with_hpoly_coeffs(self) -> "NCPoly":
        return self.map_coeffs(lambda c: c if isinstance(c, HPoly) else HPoly.const(c))

    def with_hrat_coeffs(self) -> "NCPoly":
        return self.map_coeffs(lambda c: c if isinstance(c, HRat) else HRat(c))

    def __repr__(self):
        return f"NCPoly(n={self.n}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        return format_ncpoly(self)


def _hashable(coeff):
    return coeff if not isinstance(coeff, HPoly) else coeff.coeffs


def nc_mul(p: NCPoly, q: NCPoly) -> NCPoly:
    """Bilinear extension of word concatenation."""
    if p.n != q.n:
        raise AmbientMismatch(f"generator counts differ: {p.n} vs {q.n}")
    out: Dict[Word, object] = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            word = wp + wq
            coeff = cp * cq
            acc = out.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[word] = acc
            elif word in out:
                del out[word]
    result = NCPoly.zero(p.n)
    result.terms = out
    return result


def commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    return nc_mul(p, q) - nc_mul(q, p)


def hbar_coefficient(p: NCPoly, k: int) -> NCPoly:
    """Coefficient of hbar**k, as a polynomial with plain rational coefficients.

    Requires `HPoly` (or rational, read as constant) coefficients.
    """
    if k < 0:
        raise ValueError("negative hbar power")
    out: Dict[Word, Fraction] = {}
    for w, c in p.terms.items():
        if not isinstance(c, HPoly):
            c = HPoly.const(c)
        v = c.coeff(k)
        if v:
            out[w] = v
    result = NCPoly.zero(p.n)
    result.terms = out
    return result


def hbar_degree(p: NCPoly) -> int:
    """Largest hbar power with a nonzero coefficient; -1 for zero."""
    deg = -1
    for c in p.terms.values():
        if isinstance(c, HPoly):
            deg = max(deg, c.degree)
        elif c:
            deg = max(deg, 0)
    return deg


def specialize(p: NCPoly, a) -> NCPoly:
    """Evaluate every coefficient at hbar = a; the support may shrink."""
    def ev(c):
        if isinstance(c, (HPoly, HRat)):
            return c.eval(a)
        return Fraction(c)

    return p.map_coeffs(ev)


def format_ncpoly(p: NCPoly, gen_prefix: str = "x") -> str:
    if not p.terms:
        return "0"
    parts = []
    for word, coeff in p.sorted_terms():
        mono = "*".join(f"{gen_prefix}{i}" for i in word) if word else "1"
        parts.append(_scaled_monomial(coeff, mono))
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _scaled_monomial(coeff, mono: str) -> str:
    if isinstance(coeff, HPoly):
        if len([c for c in coeff.coeffs if c]) > 1:
            text = f"({format_hpoly(coeff)})"
        else:
            text = format_hpoly(coeff)
    elif isinstance(coeff, HRat):
        text = str(coeff) if coeff.is_polynomial() and len([c for c in coeff.num.coeffs if c]) <= 1 else f"({coeff})"
    else:
        text = format_rational(coeff)
    if mono == "1":
        return text
    if text == "1":
        return mono
    if text == "-1":
        return f"-{mono}"
    return f"{text}*{mono}"
