"""Exact dense univariate polynomials over the rationals.

Coefficient lists are ascending (coeffs[i] is the coefficient of y^i) and
kept trimmed.  Everything here is exact Fraction arithmetic; it backs the
sign-certified root work used by the spectral and ordering code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = list[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def make(coeffs: Iterable) -> Poly:
    p = [Fraction(c) for c in coeffs]
    return trim(p)


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def negate(p: Poly) -> Poly:
    return [-c for c in p]


def sub(p: Poly, q: Poly) -> Poly:
    out = [ZERO] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return trim(out)


def scale(p: Poly, k: Fraction) -> Poly:
    if k == 0:
        return []
    return [c * k for c in p]


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def derivative(p: Poly) -> Poly:
    return trim([c * i for i, c in enumerate(p)][1:])


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    inv = ONE / b[-1]
    while len(a) >= len(b) and a:
        k = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = k
        for i, c in enumerate(b):
            a[shift + i] -= k * c
        trim(a)
    return trim(q), a


def monic(p: Poly) -> Poly:
    if is_zero(p):
        return []
    return [c / p[-1] for c in p]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = list(a), list(b)
    while not is_zero(b):
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lead * prod(f_i ^ i) with the f_i squarefree."""
    if degree(p) < 1:
        return []
    p = monic(p)
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b, _ = divmod_poly(p, a)
    c, _ = divmod_poly(dp, a)
    d = sub(c, derivative(b))
    out = []
    i = 1
    while degree(b) >= 1:
        f = poly_gcd(b, d)
        if degree(f) >= 1:
            out.append((f, i))
        b, _ = divmod_poly(b, f)
        c, _ = divmod_poly(d, f)
        d = sub(c, derivative(b))
        i += 1
    return out


def odd_multiplicity_part(p: Poly) -> Poly:
    """Monic product of the squarefree factors with odd multiplicity.

    The real roots of this polynomial are exactly the points where p
    changes sign.
    """
    out = [ONE]
    for f, i in squarefree_decomposition(p):
        if i % 2 == 1:
            out = mul(out, f)
    return out


def remove_root(p: Poly, a: Fraction) -> Poly:
    """Divide out every (y - a) factor."""
    while not is_zero(p) and evaluate(p, a) == 0:
        p, _ = divmod_poly(p, [-a, ONE])
    return p


def _variations(signs: Sequence[int]) -> int:
    flips = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            flips += 1
        prev = s
    return flips


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class RootCounter:
    """Sturm chain of one polynomial, reused across count queries."""

    def __init__(self, p: Poly):
        if is_zero(p):
            raise ValueError("root counting needs a nonzero polynomial")
        self.p = list(p)
        chain = [list(p), derivative(p)]
        while not is_zero(chain[-1]) and degree(chain[-1]) >= 1:
            _, r = divmod_poly(chain[-2], chain[-1])
            chain.append(negate(r))
        if is_zero(chain[-1]):
            chain.pop()
        self.chain = chain

    def variations_at(self, x: Fraction) -> int:
        return _variations([_sign(evaluate(q, x)) for q in self.chain])

    def variations_at_posinf(self) -> int:
        return _variations([_sign(q[-1]) for q in self.chain])

    def count_between(self, a: Fraction, b: Fraction) -> int:
        """Distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0."""
        if evaluate(self.p, a) == 0 or evaluate(self.p, b) == 0:
            raise ValueError("Sturm endpoints must not be roots")
        return self.variations_at(a) - self.variations_at(b)

    def count_above(self, a: Fraction) -> int:
        """Distinct real roots in (a, inf); requires p(a) != 0."""
        if evaluate(self.p, a) == 0:
            raise ValueError("Sturm endpoint must not be a root")
        return self.variations_at(a) - self.variations_at_posinf()


def count_roots_above(p: Poly, a: Fraction) -> int:
    return RootCounter(p).count_above(a)


def nonneg_on_open_ray(p: Poly, a: Fraction) -> bool:
    """Exact test that p(y) >= 0 for every y > a."""
    if is_zero(p):
        return True
    if degree(p) == 0:
        return p[0] > 0
    if p[-1] < 0:
        return False
    odd = odd_multiplicity_part(p)
    if degree(odd) == 0:
        return True
    odd = remove_root(odd, a)
    if degree(odd) < 1:
        return True
    return count_roots_above(odd, a) == 0


class LargestRootBracket:
    """Isolating information for the largest real root of a polynomial.

    Either ``exact`` is set (the root is the rational ``lo == hi``), or
    (lo, hi] contains exactly one distinct root of p - its largest - with
    p(lo) != 0 and p(hi) != 0.
    """

    __slots__ = ("lo", "hi", "exact", "steps")

    def __init__(self, lo: Fraction, hi: Fraction, exact: bool, steps: int):
        self.lo = lo
        self.hi = hi
        self.exact = exact
        self.steps = steps

    def width(self) -> Fraction:
        return self.hi - self.lo


def largest_root_bracket(
    p: Poly,
    lo: Fraction,
    hi: Fraction,
    width: Fraction,
) -> LargestRootBracket | None:
    """Isolate the largest real root of p inside (lo, hi].

    Preconditions: p(lo) != 0, p has no root above hi.  Returns None when p
    has no root in the window.
    """
    p = list(p)
    if evaluate(p, hi) == 0:
        # no roots above hi, so hi itself is the largest
        return LargestRootBracket(hi, hi, True, 0)
    counter = RootCounter(p)
    if counter.count_between(lo, hi) == 0:
        return None
    steps = 0
    while (hi - lo) > width or counter.count_between(lo, hi) != 1:
        mid = lo + (hi - lo) / 2
        if evaluate(p, mid) == 0:
            q = remove_root(list(p), mid)
            above = 0
            if not is_zero(q) and degree(q) >= 1:
                above = RootCounter(q).count_between(mid, hi)
            elif degree(q) == 0:
                above = 0
            if above == 0:
                return LargestRootBracket(mid, mid, True, steps)
            lo = mid
        elif counter.count_between(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
        steps += 1
    return LargestRootBracket(lo, hi, False, steps)
