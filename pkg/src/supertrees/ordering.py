"""Exact matching-polynomial ordering of superforests, plus enumeration.

Two superforests of equal order and rank are compared through the sign of
the difference of their matching polynomials on the ray [rho(smaller), inf).
All sign decisions are made with exact rational arithmetic on the reduced
(y = x^r) polynomials; the anchor rho is handled through an isolating
rational interval, never through floats.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import exactpoly as xp
from .errors import (
    BudgetExceededError,
    NotAcyclicError,
    OrderMismatchError,
    RankMismatchError,
)
from .hypergraph import (
    Hypergraph,
    canonical_code,
    diameter,
    is_acyclic,
    is_connected,
)
from .matching import MatchingPolynomial, format_x_poly, matching_polynomial
from .spectral import reduced_root_bracket, rho_from_matching_poly

DEFAULT_BUDGET = 7
BUDGET_ENV_VAR = "SUPERTREE_BUDGET"
MAX_ENUMERATION_RANK = 5


class Relation(Enum):
    STRICTLY_LESS = "StrictlyLess"
    LESS_OR_EQUAL = "LessOrEqual"
    STRICTLY_GREATER = "StrictlyGreater"
    GREATER_OR_EQUAL = "GreaterOrEqual"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class DifferencePolynomial:
    """Signed count differences delta_k = m_k(T1) - m_k(T2)."""

    n: int
    r: int
    deltas: tuple[int, ...]

    def to_terms(self) -> dict[int, int]:
        return {
            self.n - k * self.r: (-1) ** k * d
            for k, d in enumerate(self.deltas)
            if d
        }

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.deltas)

    def pretty(self) -> str:
        return format_x_poly(self.to_terms())


@dataclass(frozen=True)
class OrderingVerdict:
    relation: Relation
    difference: DifferencePolynomial
    threshold: float

    def __str__(self) -> str:
        return self.relation.value


def _pad(counts: tuple[int, ...], length: int) -> list[int]:
    return list(counts) + [0] * (length - len(counts))


def _reduced_difference(phi1: MatchingPolynomial, phi2: MatchingPolynomial) -> tuple[list[Fraction], tuple[int, ...]]:
    """D(y) with sign(D(x^r)) = sign(phi1(x) - phi2(x)) for x > 0."""
    nu = max(phi1.nu, phi2.nu)
    c1 = _pad(phi1.counts, nu + 1)
    c2 = _pad(phi2.counts, nu + 1)
    deltas = tuple(a - b for a, b in zip(c1, c2))
    coeffs = [Fraction(0)] * (nu + 1)
    for k, d in enumerate(deltas):
        coeffs[nu - k] = Fraction((-1) ** k * d)
    return xp.trim(coeffs), deltas


def _value_at_zero(phi1: MatchingPolynomial, phi2: MatchingPolynomial) -> int:
    """phi1(0) - phi2(0), exactly."""

    def at_zero(phi: MatchingPolynomial) -> int:
        if phi.r and phi.n % phi.r == 0:
            k = phi.n // phi.r
            if k < len(phi.counts):
                return (-1) ** k * phi.counts[k]
        return 0

    return at_zero(phi1) - at_zero(phi2)


def _split_point(lo: Fraction, hi: Fraction, taboo) -> Fraction:
    """A point strictly inside (lo, hi) avoiding roots of the taboo polys."""
    k = 2
    while True:
        mid = lo + (hi - lo) / k
        if all(xp.evaluate(p, mid) != 0 for p in taboo):
            return mid
        k += 1


def _dominates_from_interval(
    d_poly: list[Fraction],
    p_anchor: list[Fraction],
    lo: Fraction,
    hi: Fraction,
) -> tuple[bool, bool]:
    """Is D >= 0 on [y*, inf) for the single root y* of p_anchor in (lo, hi]?

    Returns (holds, strict) where strict means D(y*) != 0.
    """
    g = xp.poly_gcd(p_anchor, d_poly)
    vanishes = False
    if xp.degree(g) >= 1:
        vanishes = xp.RootCounter(g).count_between(lo, hi) == 1
    counter_d = xp.RootCounter(d_poly)
    counter_p = xp.RootCounter(p_anchor)
    want = 1 if vanishes else 0
    # Shrink until the anchor root is the only possible root of D inside.
    while True:
        endpoints_clean = (
            xp.evaluate(d_poly, lo) != 0 and xp.evaluate(d_poly, hi) != 0
        )
        if endpoints_clean and counter_d.count_between(lo, hi) == want:
            break
        mid = _split_point(lo, hi, (d_poly, p_anchor))
        if counter_p.count_between(mid, hi) == 1:
            lo = mid
        else:
            hi = mid
    sign_right = xp.evaluate(d_poly, hi)
    holds = sign_right > 0 and xp.nonneg_on_open_ray(d_poly, hi)
    return holds, not vanishes


def _dominates(
    d_poly: list[Fraction],
    phi_anchor: MatchingPolynomial,
    value_at_zero: int,
) -> tuple[bool, bool]:
    """Does phi_anchor's graph dominate, i.e. difference >= 0 on [rho, inf)?"""
    if xp.is_zero(d_poly):
        return True, False
    if phi_anchor.nu == 0:
        # anchor radius is exactly zero
        holds = value_at_zero >= 0 and xp.nonneg_on_open_ray(d_poly, Fraction(0))
        return holds, value_at_zero != 0
    bracket = reduced_root_bracket(phi_anchor)
    if bracket.exact:
        y = bracket.lo
        value = xp.evaluate(d_poly, y)
        holds = value >= 0 and xp.nonneg_on_open_ray(d_poly, y)
        return holds, value != 0
    p_anchor = xp.make(phi_anchor.reduced_coefficients())
    return _dominates_from_interval(d_poly, p_anchor, bracket.lo, bracket.hi)


def _threshold(phi: MatchingPolynomial) -> float:
    if phi.nu == 0:
        return 0.0
    return rho_from_matching_poly(phi).rho


def compare(t1: Hypergraph, t2: Hypergraph) -> OrderingVerdict:
    """Classify the matching-polynomial order between two superforests."""
    if t1.rank != t2.rank:
        raise RankMismatchError(f"rank {t1.rank} vs {t2.rank}")
    if t1.n != t2.n:
        raise OrderMismatchError(f"order {t1.n} vs {t2.n}")
    if not is_acyclic(t1) or not is_acyclic(t2):
        raise NotAcyclicError("ordering is defined for superforests only")
    phi1 = matching_polynomial(t1)
    phi2 = matching_polynomial(t2)
    d_poly, deltas = _reduced_difference(phi1, phi2)
    difference = DifferencePolynomial(t1.n, t1.rank, deltas)
    if difference.is_zero():
        return OrderingVerdict(Relation.EQUAL, difference, _threshold(phi1))
    at_zero = _value_at_zero(phi1, phi2)
    holds, strict = _dominates(d_poly, phi1, at_zero)
    if holds:
        relation = Relation.STRICTLY_LESS if strict else Relation.LESS_OR_EQUAL
        return OrderingVerdict(relation, difference, _threshold(phi1))
    holds, strict = _dominates(xp.negate(d_poly), phi2, -at_zero)
    if holds:
        relation = Relation.STRICTLY_GREATER if strict else Relation.GREATER_OR_EQUAL
        return OrderingVerdict(relation, difference, _threshold(phi2))
    return OrderingVerdict(Relation.INCOMPARABLE, difference, _threshold(phi1))


# ---------------------------------------------------------------------------
# Isomorph-free enumeration
# ---------------------------------------------------------------------------

def enumeration_budget() -> int:
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


def _attach_edge(h: Hypergraph, at: int) -> Hypergraph:
    fresh = tuple(range(h.n, h.n + h.rank - 1))
    return Hypergraph(h.rank, h.n + h.rank - 1, h.edges + (tuple(sorted((at,) + fresh)),))


def enumerate_supertrees(m: int, r: int, max_edges: int | None = None) -> list[Hypergraph]:
    """All r-uniform supertrees with m edges, one per isomorphism class.

    Grown by attaching a fresh pendent edge at every vertex of every smaller
    supertree, deduplicated by canonical code; output is sorted by code.
    """
    budget = max_edges if max_edges is not None else enumeration_budget()
    if m > budget:
        raise BudgetExceededError(f"m={m} exceeds the enumeration budget {budget}")
    if r > MAX_ENUMERATION_RANK:
        raise BudgetExceededError(f"rank {r} exceeds the enumeration cap {MAX_ENUMERATION_RANK}")
    if m < 0:
        raise BudgetExceededError("edge count must be nonnegative")
    if m == 0:
        return [Hypergraph(r, 1, ())]
    level = {canonical_code(h): h for h in [_attach_edge(Hypergraph(r, 1, ()), 0)]}
    for _ in range(m - 1):
        nxt: dict[bytes, Hypergraph] = {}
        for h in level.values():
            for v in range(h.n):
                child = _attach_edge(h, v)
                code = canonical_code(child)
                if code not in nxt:
                    nxt[code] = child
        level = nxt
    return [level[code] for code in sorted(level)]


def enumerate_with_diameter(m: int, d: int, r: int, max_edges: int | None = None) -> list[Hypergraph]:
    """Supertrees with m edges and diameter exactly d, up to isomorphism."""
    return [
        h for h in enumerate_supertrees(m, r, max_edges) if h.m > 0 and diameter(h) == d
    ]
