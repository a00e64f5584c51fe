"""Spectral radius of the adjacency tensor, computed two independent ways.

Route one isolates the largest root of the reduced matching polynomial with
exact rational bisection; route two runs a shifted tensor power iteration
with Collatz-Wielandt bounds.  Agreement of the two is asserted throughout
the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactpoly as xp
from .errors import DisconnectedError, NoPositiveRootError, NotConvergedError
from .hypergraph import Hypergraph, is_connected, power
from .matching import MatchingPolynomial, matching_polynomial

DEFAULT_TOL = 1e-10
ITERATION_CAP = 10 ** 6
_BRACKET_WIDTH = Fraction(1, 10 ** 13)

METHOD_MATCHING = "MatchingRoot"
METHOD_POWER = "PowerIteration"


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    method: str
    error_bound: float
    iterations: int
    eigenvector: tuple[float, ...] | None = None

    def to_json_dict(self) -> dict:
        return {
            "rho": self.rho,
            "method": self.method,
            "error_bound": self.error_bound,
            "iterations": self.iterations,
        }


def reduced_root_bracket(phi: MatchingPolynomial) -> xp.LargestRootBracket:
    """Rational bracket for the largest root of the reduced polynomial.

    For a superforest this root equals rho^r.  Requires at least one edge.
    """
    if phi.nu < 1:
        raise NoPositiveRootError("edgeless polynomial has no reduced root")
    p = xp.make(phi.reduced_coefficients())
    hi = Fraction(phi.counts[1] + 1)
    bracket = xp.largest_root_bracket(p, Fraction(0), hi, _BRACKET_WIDTH)
    if bracket is None:
        raise NoPositiveRootError("reduced polynomial has no root in (0, m+1]")
    return bracket


def rho_from_matching_poly(phi: MatchingPolynomial) -> SpectralResult:
    """Spectral radius as the r-th root of the largest reduced-polynomial root."""
    bracket = reduced_root_bracket(phi)
    inv_r = 1.0 / phi.r
    lo = float(bracket.lo) ** inv_r
    hi = float(bracket.hi) ** inv_r
    rho = 0.5 * (lo + hi)
    error = 0.5 * (hi - lo) + 4.0 * abs(rho) * 2.3e-16 + 1e-300
    return SpectralResult(rho, METHOD_MATCHING, error, bracket.steps)


def rho_power_iteration(
    h: Hypergraph,
    tol: float = DEFAULT_TOL,
    max_iterations: int = ITERATION_CAP,
) -> SpectralResult:
    """Shifted power iteration on the adjacency tensor.

    Iterates x <- normalize((A x^{r-1} + x^{[r-1]})^{[1/(r-1)]}) and stops
    when the Collatz-Wielandt bounds min_i / max_i of (A x)_i / x_i^{r-1}
    agree to within tol.  The unit shift keeps the iteration convergent for
    every connected input.
    """
    if h.n == 0:
        raise DisconnectedError("empty hypergraph")
    if not is_connected(h):
        raise DisconnectedError("power iteration needs a connected hypergraph")
    r = h.rank
    n = h.n
    sigma = 1.0
    x = [n ** (-1.0 / r)] * n
    exponent = 1.0 / (r - 1)
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        ax = [0.0] * n
        for e in h.edges:
            for v in e:
                prod = 1.0
                for w in e:
                    if w != v:
                        prod *= x[w]
                ax[v] += prod
        quotients = [ax[v] / x[v] ** (r - 1) for v in range(n)]
        q_lo, q_hi = min(quotients), max(quotients)
        if q_hi - q_lo < tol:
            rho = 0.5 * (q_lo + q_hi)
            error = 0.5 * (q_hi - q_lo) + 4.0 * abs(rho + sigma) * 2.3e-16 + 1e-300
            return SpectralResult(rho, METHOD_POWER, error, iterations, tuple(x))
        y = [(ax[v] + sigma * x[v] ** (r - 1)) ** exponent for v in range(n)]
        norm = sum(t ** r for t in y) ** (1.0 / r)
        x = [t / norm for t in y]
    raise NotConvergedError(f"no convergence after {max_iterations} iterations")


def spectral_radius(h: Hypergraph, method: str = METHOD_MATCHING, tol: float = DEFAULT_TOL) -> SpectralResult:
    if method == METHOD_MATCHING:
        return rho_from_matching_poly(matching_polynomial(h))
    if method == METHOD_POWER:
        return rho_power_iteration(h, tol)
    raise ValueError(f"unknown method {method!r}")


def dual_method_gap(h: Hypergraph, tol: float = DEFAULT_TOL) -> tuple[SpectralResult, SpectralResult, float]:
    """Both spectral radius estimates and their absolute gap."""
    a = rho_from_matching_poly(matching_polynomial(h))
    b = rho_power_iteration(h, tol)
    return a, b, abs(a.rho - b.rho)


@dataclass(frozen=True)
class PowerRelationEntry:
    rank: int
    rho_base: float
    rho_power: float
    expected: float
    gap: float
    bound: float
    passed: bool


@dataclass(frozen=True)
class PowerRelationReport:
    entries: tuple[PowerRelationEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def verify_power_relation(tree: Hypergraph, ranks: tuple[int, ...] = (3, 4)) -> PowerRelationReport:
    """Check rho(T^r) = rho(T)^{2/r} for an ordinary connected tree.

    The base radius comes from the exact matching-root route at rank 2; the
    inflated radius comes from the independent power iteration.
    """
    if tree.rank != 2:
        raise ValueError("power relation check starts from a 2-uniform tree")
    if not is_connected(tree):
        raise DisconnectedError("tree must be connected")
    base = rho_from_matching_poly(matching_polynomial(tree))
    entries = []
    for r in ranks:
        inflated = power(tree, r)
        lifted = rho_power_iteration(inflated)
        expected = base.rho ** (2.0 / r)
        gap = abs(lifted.rho - expected)
        scale = (2.0 / r) * base.rho ** (2.0 / r - 1.0) if base.rho > 0 else 1.0
        bound = lifted.error_bound + scale * base.error_bound + 1e-12
        entries.append(
            PowerRelationEntry(r, base.rho, lifted.rho, expected, gap, bound, gap <= bound)
        )
    return PowerRelationReport(tuple(entries))
