"""Certificates and obstructions for the PBW property of a deformed presentation.

The central check composes the perturbed differentials: for every triple
i < j < k the element d1(d2(xi_ijk)) is computed exactly over Q[h], and the
certificate passes iff all of these vanish.  A pass establishes the
descending-filtration PBW-like property, hence PBW at all but countably many
parameter values; with linear relation tails, at every value.  On failure the
lowest hbar-order coefficients of the residues generate the obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, List, Optional, Tuple

from .errors import BadTriple, NoObstruction, NotDeformation, PathMismatch
from .freealg import NCPoly, hbar_coefficient
from .koszul import (Differential, KoszulPoly, Triple, apply_d, d1_from_presentation,
                     d2_default, d2_lie, d2_quadratic, triples)
from .presentations import (LieData, Presentation, QuadData, lie_data_of,
                            quad_data_of, validate)
from .scalars import HPoly

D2_CHOICES = ("default", "lie", "quadratic", "custom")


@dataclass
class CertificateReport:
    verdict: str  # "pass" | "fail"
    path: str
    n: int
    residues: Dict[Triple, NCPoly]
    claims: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def build_differential(p: Presentation, d2_choice: str,
                       custom_d2: Optional[Dict[Triple, KoszulPoly]] = None) -> Differential:
    report = validate(p)
    if not report.valid:
        raise NotDeformation("; ".join(report.problems))
    d1 = d1_from_presentation(p)
    if d2_choice == "default":
        d2 = d2_default(p.n)
    elif d2_choice == "lie":
        data = lie_data_of(p)
        if data is None:
            raise PathMismatch("relation tails are not h * linear; the lie differential does not apply")
        d2 = d2_lie(data)
    elif d2_choice == "quadratic":
        data = quad_data_of(p)
        if data is None:
            raise PathMismatch("relation tails are not h * quadratic; the quadratic differential does not apply")
        d2 = d2_quadratic(data)
    elif d2_choice == "custom":
        if custom_d2 is None:
            raise PathMismatch("custom differential requested but none supplied")
        missing = [tri for tri in triples(p.n) if tri not in custom_d2]
        if missing:
            raise PathMismatch(f"custom differential misses triples {missing}")
        for tri, value in custom_d2.items():
            if value and value.degree() != -1:
                raise PathMismatch(f"custom value for {tri} is not of degree -1")
            for word in value.terms:
                if sum(1 for sym in word if sym[0] == "xi2") != 1 or any(sym[0] == "xi3" for sym in word):
                    raise PathMismatch(f"custom value for {tri} must carry exactly one xi symbol per word")
        d2 = custom_d2
    else:
        raise PathMismatch(f"unknown d2 choice {d2_choice!r}")
    return Differential(p.n, d1, d2)


def certify(p: Presentation, d2_choice: str = "default",
            custom_d2: Optional[Dict[Triple, KoszulPoly]] = None) -> CertificateReport:
    """Check d1 . d2 = 0 on every xi_ijk; exact over Q[h]."""
    diff = build_differential(p, d2_choice, custom_d2)
    residues = {tri: apply_d(diff, diff.d2[tri]) for tri in triples(p.n)}
    passed = all(not r for r in residues.values())
    claims: List[str] = []
    if passed:
        claims.append("descending-filtration PBW-like property established")
        if lie_data_of(p) is not None:
            claims.append("PBW holds at every specialization h=a (linear relation tails)")
        else:
            claims.append("PBW holds for all but at most countably many specializations h=a; "
                          "the excluded set is not computed")
        if p.n < 3:
            claims.append("vacuous: no index triples for n < 3")
    else:
        claims.append("certificate failed for this d2 choice; the check is sufficient only, "
                      "so the descending-filtration PBW-like property remains inconclusive")
    return CertificateReport("pass" if passed else "fail", d2_choice, p.n, residues, claims)


def jacobiator(data: LieData, i: int, j: int, k: int) -> NCPoly:
    """h^2 sum over a, b of (c_ij^a c_ak^b + c_jk^a c_ai^b + c_ki^a c_aj^b) x_b."""
    if len({i, j, k}) < 3:
        raise BadTriple(f"indices {(i, j, k)} must be distinct")
    n = data.n
    h2 = HPoly.h(2)
    out = NCPoly.zero(n)
    for b in range(1, n + 1):
        total = Fraction(0)
        for a in range(1, n + 1):
            total += (data.c_at(i, j, a) * data.c_at(a, k, b)
                      + data.c_at(j, k, a) * data.c_at(a, i, b)
                      + data.c_at(k, i, a) * data.c_at(a, j, b))
        if total:
            out = out + NCPoly(n, {(b,): h2 * total})
    return out


@dataclass
class ConditionReport:
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    value: Optional[Fraction] = None


def _cyclic_slots(i, j, k):
    return ((i, j, k), (j, k, i), (k, i, j))


def check_quadratic_condition(data: QuadData) -> ConditionReport:
    """Cyclic sum over s of alpha_jk^{sb} alpha_is^{cd} + alpha_jk^{cs} alpha_is^{db},
    required to vanish for every tuple (i, j, k, b, c, d)."""
    n = data.n
    rng = range(1, n + 1)
    for i, j, k, b, c, d in product(rng, repeat=6):
        total = Fraction(0)
        for ii, jj, kk in _cyclic_slots(i, j, k):
            for s in rng:
                total += (data.alpha_at(jj, kk, s, b) * data.alpha_at(ii, s, c, d)
                          + data.alpha_at(jj, kk, c, s) * data.alpha_at(ii, s, d, b))
        if total:
            return ConditionReport(False, (i, j, k, b, c, d), total)
    return ConditionReport(True)


def check_poisson(data: QuadData) -> ConditionReport:
    """Jacobi condition for the symmetrized bivector beta_ij^{ab} = alpha_ij^{ab} + alpha_ij^{ba},
    checked after symmetrization over the upper indices.

    The unsymmetrized cyclic sums are tabulated once; each of the n^6 tuples
    is then a six-fold lookup sum.
    """
    n = data.n
    rng = range(1, n + 1)
    beta = {(i, j, a, b): data.alpha_at(i, j, a, b) + data.alpha_at(i, j, b, a)
            for i, j, a, b in product(rng, repeat=4)}
    cyclic_sum = {}
    for i, j, k, a, b, c in product(rng, repeat=6):
        total = Fraction(0)
        for s in rng:
            total += (beta[(i, s, a, b)] * beta[(j, k, s, c)]
                      + beta[(j, s, a, b)] * beta[(k, i, s, c)]
                      + beta[(k, s, a, b)] * beta[(i, j, s, c)])
        cyclic_sum[(i, j, k, a, b, c)] = total
    for i, j, k, a, b, c in product(rng, repeat=6):
        total = Fraction(0)
        for aa, bb, cc in permutations((a, b, c)):
            total += cyclic_sum[(i, j, k, aa, bb, cc)]
        if total:
            return ConditionReport(False, (i, j, k, a, b, c), total)
    return ConditionReport(True)


@dataclass
class ObstructionReport:
    hbar_order: int
    generators: List[Tuple[Triple, NCPoly]]


def _hbar_order(p: NCPoly) -> Optional[int]:
    order = None
    for coeff in p.terms.values():
        if not isinstance(coeff, HPoly):
            coeff = HPoly.const(coeff)
        for k, c in enumerate(coeff.coeffs):
            if c:
                order = k if order is None else min(order, k)
                break
    return order


def obstruction(p: Presentation, d2_choice: str = "default",
                custom_d2: Optional[Dict[Triple, KoszulPoly]] = None) -> ObstructionReport:
    """Lowest-order hbar coefficients of the nonzero certificate residues."""
    report = certify(p, d2_choice, custom_d2)
    if report.passed:
        raise NoObstruction("certificate passed; there is nothing to extract")
    orders = [o for o in (_hbar_order(r) for r in report.residues.values()) if o is not None]
    level = min(orders)
    generators: List[Tuple[Triple, NCPoly]] = []
    for tri in sorted(report.residues):
        gen = hbar_coefficient(report.residues[tri], level)
        if gen:
            generators.append((tri, gen))
    return ObstructionReport(level, generators)
