"""Exact matching polynomials of uniform linear hypergraphs.

The polynomial of a hypergraph of order n and rank r is
``sum_k (-1)^k m_k x^(n - k r)`` where ``m_k`` counts k-matchings.  Only the
count vector is stored; it is computed by the edge deletion recurrence
``phi(G) = phi(G \\ e) - phi(G - V(e))`` with multiplicative splitting over
connected components and memoization.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import RankMismatchError, RankTooSmallError, RankNotTwoError, TooLargeError
from .hypergraph import Edge, Hypergraph, component_code_for_edges

XPoly = dict[int, int]  # sparse signed polynomial: exponent -> coefficient


@dataclass(frozen=True)
class MatchingPolynomial:
    """Exact matching polynomial in compressed form.

    ``counts[k]`` is the number of k-matchings; the matching number is
    ``len(counts) - 1``.
    """

    n: int
    r: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("counts must start with m_0 = 1")
        if len(self.counts) > 1 and self.counts[-1] < 1:
            raise ValueError("trailing zero matching counts must be trimmed")
        if any(c < 0 for c in self.counts):
            raise ValueError("matching counts are nonnegative")
        if self.n < self.nu * self.r:
            raise ValueError("order too small for the matching number")

    @property
    def nu(self) -> int:
        """Matching number."""
        return len(self.counts) - 1

    def term_exponent(self, k: int) -> int:
        return self.n - k * self.r

    def to_terms(self) -> XPoly:
        """Signed sparse polynomial in x."""
        return {self.n - k * self.r: (-1) ** k * c for k, c in enumerate(self.counts) if c}

    def reduced_coefficients(self) -> list[int]:
        """Ascending coefficients of p(y) = sum_k (-1)^k m_k y^(nu - k)."""
        nu = self.nu
        out = [0] * (nu + 1)
        for k, c in enumerate(self.counts):
            out[nu - k] = (-1) ** k * c
        return out

    def pretty(self) -> str:
        return format_x_poly(self.to_terms())

    def to_json_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "counts": list(self.counts)}

    def __str__(self) -> str:
        return self.pretty()


def format_x_poly(terms: XPoly) -> str:
    if not terms:
        return "0"
    parts = []
    for exp in sorted(terms, reverse=True):
        coeff = terms[exp]
        if coeff == 0:
            continue
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            var = "x" if exp == 1 else f"x^{exp}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def x_poly_sub(a: XPoly, b: XPoly) -> XPoly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) - c
    return {e: c for e, c in out.items() if c}


def x_poly_shift(a: XPoly, k: int) -> XPoly:
    """Multiply by x^k."""
    return {e + k: c for e, c in a.items()}


def x_poly_derivative(a: XPoly) -> XPoly:
    return {e - 1: c * e for e, c in a.items() if e != 0}


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def count_matchings_bruteforce(h: Hypergraph, k: int, budget: int = 16) -> int:
    """Count k-matchings by explicit enumeration of disjoint edge sets."""
    if h.m > budget:
        raise TooLargeError(f"{h.m} edges exceeds the brute-force budget {budget}")
    if k == 0:
        return 1
    edges = h.edges

    def walk(start: int, chosen: list[Edge], used: set[int]) -> int:
        if len(chosen) == k:
            return 1
        total = 0
        for i in range(start, len(edges)):
            e = edges[i]
            if used.isdisjoint(e):
                total += walk(i + 1, chosen + [e], used | set(e))
        return total

    return walk(0, [], set())


def matching_number_bruteforce(h: Hypergraph, budget: int = 16) -> int:
    """Largest size of a disjoint edge set, by branch and bound."""
    if h.m > budget:
        raise TooLargeError(f"{h.m} edges exceeds the brute-force budget {budget}")
    edges = h.edges
    best = 0

    def walk(start: int, size: int, used: set[int]) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - start) <= best:
            return
        for i in range(start, len(edges)):
            e = edges[i]
            if used.isdisjoint(e):
                walk(i + 1, size + 1, used | set(e))

    walk(0, 0, set())
    return best


# ---------------------------------------------------------------------------
# Recurrence with memoization
# ---------------------------------------------------------------------------

_cache_lock = threading.Lock()
_acyclic_cache: dict[str, tuple[int, ...]] = {}
_exact_cache: dict[tuple[Edge, ...], tuple[int, ...]] = {}


def clear_cache() -> None:
    with _cache_lock:
        _acyclic_cache.clear()
        _exact_cache.clear()


def _convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _edge_components(edges: Sequence[Edge]) -> list[tuple[Edge, ...]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for v in e:
            parent.setdefault(v, v)
        root = find(e[0])
        for v in e[1:]:
            parent[find(v)] = root
    groups: dict[int, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return [tuple(g) for g in groups.values()]


def _counts_for_edges(edges: tuple[Edge, ...], rank: int) -> tuple[int, ...]:
    if not edges:
        return (1,)
    result: tuple[int, ...] = (1,)
    for comp in _edge_components(edges):
        result = _convolve(result, _component_counts(comp, rank))
    return result


def _is_acyclic_component(edges: Sequence[Edge]) -> bool:
    verts = {v for e in edges for v in e}
    return sum(len(e) for e in edges) == len(verts) + len(edges) - 1


def _component_counts(edges: tuple[Edge, ...], rank: int) -> tuple[int, ...]:
    if len(edges) == 1:
        return (1, 1)
    acyclic = _is_acyclic_component(edges)
    if acyclic:
        key = component_code_for_edges(edges, rank)
        cached = _acyclic_cache.get(key)
    else:
        key = tuple(sorted(edges))
        cached = _exact_cache.get(key)
    if cached is not None:
        return cached

    degree: dict[int, int] = {}
    for e in edges:
        for v in e:
            degree[v] = degree.get(v, 0) + 1
    pivot_vertex = max(degree, key=lambda v: (degree[v], -v))
    pivot = next(e for e in edges if pivot_vertex in e)

    without = tuple(e for e in edges if e != pivot)
    disjoint = tuple(e for e in without if not (set(e) & set(pivot)))
    a = _counts_for_edges(without, rank)
    b = _counts_for_edges(disjoint, rank)
    out = [0] * max(len(a), len(b) + 1)
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k + 1] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    counts = tuple(out)

    with _cache_lock:
        if acyclic:
            _acyclic_cache[key] = counts
        else:
            _exact_cache[key] = counts
    return counts


def matching_polynomial(h: Hypergraph) -> MatchingPolynomial:
    """Exact matching polynomial via the deletion recurrence."""
    return MatchingPolynomial(h.n, h.rank, _counts_for_edges(h.edges, h.rank))


def matching_number(h: Hypergraph) -> int:
    """Matching number read off the computed polynomial."""
    return matching_polynomial(h).nu


def poly_union(a: MatchingPolynomial, b: MatchingPolynomial) -> MatchingPolynomial:
    """Polynomial of a disjoint union: convolution of the count vectors."""
    if a.r != b.r:
        raise RankMismatchError(f"rank {a.r} vs {b.r}")
    return MatchingPolynomial(a.n + b.n, a.r, _convolve(a.counts, b.counts))


def power_transform(phi: MatchingPolynomial, rank: int) -> MatchingPolynomial:
    """Polynomial of the rank-r inflation of a 2-uniform forest.

    Matching counts are preserved; the order grows by (r-2) per edge.
    """
    if phi.r != 2:
        raise RankNotTwoError("power transform needs a rank-2 polynomial")
    if rank < 3:
        raise RankTooSmallError("power transform requires rank at least 3")
    m = phi.counts[1] if phi.nu >= 1 else 0
    return MatchingPolynomial(phi.n + m * (rank - 2), rank, phi.counts)


# ---------------------------------------------------------------------------
# Identity checks (each side computed independently)
# ---------------------------------------------------------------------------

def vertex_deletion_residual(h: Hypergraph, u: int) -> XPoly:
    """Residual of phi(H) = x phi(H-u) - sum_{e at u} phi(H-V(e)).

    Empty dict means the identity holds exactly.
    """
    lhs = matching_polynomial(h).to_terms()
    rhs = x_poly_shift(matching_polynomial(h.delete_vertices([u])).to_terms(), 1)
    for e in h.incident_edges(u):
        rhs = x_poly_sub(rhs, matching_polynomial(h.delete_vertices(e)).to_terms())
    return x_poly_sub(lhs, rhs)


def derivative_identity_residual(h: Hypergraph) -> XPoly:
    """Residual of sum_u phi(H-u) = d/dx phi(H)."""
    rhs = x_poly_derivative(matching_polynomial(h).to_terms())
    lhs: XPoly = {}
    for u in range(h.n):
        term = matching_polynomial(h.delete_vertices([u])).to_terms()
        for e, c in term.items():
            lhs[e] = lhs.get(e, 0) + c
    lhs = {e: c for e, c in lhs.items() if c}
    return x_poly_sub(lhs, rhs)
