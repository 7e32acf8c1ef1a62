"""Deformed presentations T(V)[h]/(x_i x_j - x_j x_i - phi_ij) and their constructors.

`phi_ij` is stored only for i < j; reads go through a signed accessor that
implements phi_ji = -phi_ij and phi_ii = 0, so the sign convention cannot be
violated by construction.  Constructors cover linear tails given by structure
constants and quadratic tails given by a coefficient tensor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import BadIndex
from .freealg import NCPoly, hbar_degree
from .scalars import HPoly

Pair = Tuple[int, int]


class Presentation:
    """Generator count n plus the family of relation tails phi_ij (i < j)."""

    __slots__ = ("n", "phi", "filtration_ok")

    def __init__(self, n: int, phi: Dict[Pair, NCPoly] | None = None):
        if n < 1:
            raise BadIndex("need at least one generator")
        self.n = n
        cleaned: Dict[Pair, NCPoly] = {}
        if phi:
            for (i, j), poly in phi.items():
                if not (1 <= i < j <= n):
                    raise BadIndex(f"phi index pair {(i, j)} must satisfy 1 <= i < j <= n")
                if poly.n != n:
                    raise BadIndex(f"phi_{i}{j} lives over n={poly.n}, presentation has n={n}")
                poly = poly.with_hpoly_coeffs()
                if poly:
                    cleaned[(i, j)] = poly
        self.phi = cleaned
        self.filtration_ok = all(p.deg_x() <= 2 for p in cleaned.values())

    def phi_at(self, i: int, j: int) -> NCPoly:
        """Signed accessor: phi_ji = -phi_ij, phi_ii = 0."""
        for idx in (i, j):
            if not 1 <= idx <= self.n:
                raise BadIndex(f"index {idx} outside 1..{self.n}")
        if i == j:
            return NCPoly.zero(self.n)
        if i < j:
            return self.phi.get((i, j), NCPoly.zero(self.n))
        stored = self.phi.get((j, i))
        return -stored if stored is not None else NCPoly.zero(self.n)

    def pairs(self):
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def relation(self, i: int, j: int) -> NCPoly:
        """x_i x_j - x_j x_i - phi_ij, the ideal generator for the pair."""
        rel = NCPoly(self.n, {(i, j): HPoly.one(), (j, i): -HPoly.one()})
        return rel - self.phi_at(i, j)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.n == other.n and self.phi == other.phi

    def __repr__(self):
        return f"Presentation(n={self.n}, phi={self.phi!r})"


@dataclass(frozen=True)
class LieData:
    """Structure constants c_ijk for i < j; antisymmetry in (i, j) is implied."""

    n: int
    c: Dict[Tuple[int, int, int], Fraction] = field(default_factory=dict)

    def c_at(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.c.get((i, j, k), Fraction(0))
        return -self.c.get((j, i, k), Fraction(0))


@dataclass(frozen=True)
class QuadData:
    """Quadratic tensor alpha_ij^{ab} for i < j; no symmetry in (a, b) assumed."""

    n: int
    alpha: Dict[Tuple[int, int, int, int], Fraction] = field(default_factory=dict)

    def alpha_at(self, i: int, j: int, a: int, b: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.alpha.get((i, j, a, b), Fraction(0))
        return -self.alpha.get((j, i, a, b), Fraction(0))


def from_lie(data: LieData) -> Presentation:
    """phi_ij = h * sum_k c_ijk x_k.  The Jacobi identity is not required."""
    phi: Dict[Pair, NCPoly] = {}
    h = HPoly.h()
    for (i, j, k), value in data.c.items():
        if not (1 <= i < j <= data.n and 1 <= k <= data.n):
            raise BadIndex(f"bad structure constant index {(i, j, k)}")
        if not value:
            continue
        term = NCPoly(data.n, {(k,): h * value})
        phi[(i, j)] = phi.get((i, j), NCPoly.zero(data.n)) + term
    return Presentation(data.n, phi)


def from_quadratic(data: QuadData) -> Presentation:
    """phi_ij = h * sum_{a,b} alpha_ij^{ab} x_a x_b."""
    phi: Dict[Pair, NCPoly] = {}
    h = HPoly.h()
    for (i, j, a, b), value in data.alpha.items():
        ok = 1 <= i < j <= data.n and 1 <= a <= data.n and 1 <= b <= data.n
        if not ok:
            raise BadIndex(f"bad quadratic tensor index {(i, j, a, b)}")
        if not value:
            continue
        term = NCPoly(data.n, {(a, b): h * value})
        phi[(i, j)] = phi.get((i, j), NCPoly.zero(data.n)) + term
    return Presentation(data.n, phi)


def lie_data_of(p: Presentation) -> LieData | None:
    """Read structure constants back from p, or None if some phi is not h * linear."""
    c: Dict[Tuple[int, int, int], Fraction] = {}
    for (i, j), poly in p.phi.items():
        if poly.deg_x() > 1 or hbar_degree(poly) > 1:
            return None
        for word, coeff in poly.terms.items():
            if len(word) != 1 or not coeff.divisible_by_h():
                return None
            c[(i, j, word[0])] = coeff.coeff(1)
    return LieData(p.n, c)


def quad_data_of(p: Presentation) -> QuadData | None:
    """Read the quadratic tensor back from p, or None if some phi is not h * quadratic."""
    alpha: Dict[Tuple[int, int, int, int], Fraction] = {}
    for (i, j), poly in p.phi.items():
        if hbar_degree(poly) > 1:
            return None
        for word, coeff in poly.terms.items():
            if len(word) != 2 or not coeff.divisible_by_h():
                return None
            alpha[(i, j, word[0], word[1])] = coeff.coeff(1)
    return QuadData(p.n, alpha)


@dataclass
class PairCheck:
    pair: Pair
    hbar_divisible: bool
    deg_x: int  # -1 for the zero tail


@dataclass
class ValidationReport:
    n: int
    valid: bool
    filtration_ok: bool
    pair_checks: List[PairCheck]
    paths: List[str]
    problems: List[str]


def validate(p: Presentation) -> ValidationReport:
    """Check hbar-divisibility and degree bounds; name the applicable certificate paths."""
    checks: List[PairCheck] = []
    problems: List[str] = []
    for pair in p.pairs():
        poly = p.phi_at(*pair)
        divisible = all(c.divisible_by_h() for c in poly.terms.values())
        deg = poly.deg_x() if poly else -1
        checks.append(PairCheck(pair, divisible, deg))
        if not divisible:
            problems.append(f"NotDeformation: phi_{pair[0]}{pair[1]} is not divisible by h")
    valid = not problems
    if not p.filtration_ok:
        problems.append("FiltrationUnbounded: some phi has x-degree > 2; Hilbert comparison disabled")

    paths: List[str] = []
    if valid:
        if lie_data_of(p) is not None:
            paths.append("lie")
        if quad_data_of(p) is not None:
            paths.append("quadratic")
        from .cyclic import potential_of

        if p.n == 3 and potential_of(p) is not None:
            paths.append("potential")
    if not paths:
        paths.append("generic")
    return ValidationReport(p.n, valid, p.filtration_ok, checks, paths, problems)
