"""Executable checks for the grafting and extremal-ordering claims.

Each check builds the two supertrees involved, runs the exact comparator,
and cross-checks the strict spectral-radius inequality numerically.  The
ranking verifiers enumerate the full isomorphism classes and compare the
computed order against the predicted family members.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import PreconditionViolatedError
from .families import (
    bistarred_path,
    core_pendent_path,
    core_starred_path,
    graft_paths_at_distance,
    graft_paths_at_edge,
    graft_paths_at_vertex,
    hyperstar,
    loose_path,
    path_edge_attach,
    path_vertex_attach,
    starred_path,
    vertex_pendent_path,
)
from .hypergraph import (
    Hypergraph,
    canonical_code,
    edge_release,
    is_connected,
    is_supertree,
    move_edges,
)
from .matching import matching_polynomial
from .ordering import Relation, compare, enumerate_supertrees, enumerate_with_diameter
from .spectral import (
    dual_method_gap,
    rho_from_matching_poly,
    rho_power_iteration,
)

RHO_GAP = 1e-10


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def __repr__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}"


def _rho(h: Hypergraph) -> float:
    return rho_from_matching_poly(matching_polynomial(h)).rho


def _strict_drop(name: str, larger: Hypergraph, smaller: Hypergraph) -> CheckResult:
    """smaller must be strictly below larger: verdict and numeric rho."""
    verdict = compare(smaller, larger)
    rho_small, rho_large = _rho(smaller), _rho(larger)
    ok = verdict.relation is Relation.STRICTLY_LESS and rho_small < rho_large - RHO_GAP
    return CheckResult(
        name,
        ok,
        {
            "relation": verdict.relation.value,
            "rho_smaller": rho_small,
            "rho_larger": rho_large,
        },
    )


# ---------------------------------------------------------------------------
# Grafting checks
# ---------------------------------------------------------------------------

def check_graft_at_vertex(base: Hypergraph, v: int, p: int, q: int) -> CheckResult:
    """Rebalancing two pendent paths at one vertex: (p,q) beats (p+1,q-1)."""
    if not (p >= q >= 1):
        raise PreconditionViolatedError(f"need p >= q >= 1, got p={p}, q={q}")
    balanced = graft_paths_at_vertex(base, v, p, q)
    skewed = graft_paths_at_vertex(base, v, p + 1, q - 1)
    return _strict_drop(f"graft-vertex p={p} q={q}", balanced, skewed)


def check_graft_at_edge_pair(base: Hypergraph, u: int, v: int, p: int, q: int) -> CheckResult:
    """Same trade with the two paths anchored on one shared edge."""
    if not (p >= q >= 1):
        raise PreconditionViolatedError(f"need p >= q >= 1, got p={p}, q={q}")
    balanced = graft_paths_at_edge(base, u, v, p, q)
    skewed = graft_paths_at_edge(base, u, v, p + 1, q - 1)
    return _strict_drop(f"graft-edge p={p} q={q}", balanced, skewed)


def check_graft_at_distance(
    base: Hypergraph, u: int, v: int, s: int, p: int, q: int
) -> CheckResult:
    """Same trade with anchors at distance s; needs p - q >= s >= 1, q >= 1."""
    if not (q >= 1 and s >= 1 and p - q >= s):
        raise PreconditionViolatedError(f"need p-q >= s >= 1 and q >= 1, got p={p}, q={q}, s={s}")
    balanced = graft_paths_at_distance(base, u, v, s, p, q)
    skewed = graft_paths_at_distance(base, u, v, s, p + 1, q - 1)
    return _strict_drop(f"graft-distance s={s} p={p} q={q}", balanced, skewed)


def check_edge_release(h: Hypergraph, e) -> CheckResult:
    """Releasing a non-pendent edge strictly raises the spectral radius."""
    released = edge_release(h, e)
    return _strict_drop("edge-release", released, h)


def check_edge_moving(h: Hypergraph, moves, target: int) -> CheckResult:
    """Moving edges onto a vertex carrying at least the pivots' eigenvector
    weight strictly raises rho.  Inapplicable moves are reported, not failed."""
    if not is_connected(h):
        raise PreconditionViolatedError("edge moving check needs a connected input")
    before = rho_power_iteration(h)
    assert before.eigenvector is not None
    weight = before.eigenvector
    if any(weight[target] < weight[pivot] for _, pivot in moves):
        return CheckResult("edge-moving", True, {"applicable": False})
    moved = move_edges(h, moves, target)
    rho_after = (
        rho_power_iteration(moved).rho
        if is_connected(moved)
        else max(
            _component_rho_power(moved)
        )
    )
    gap = rho_after - before.rho
    ok = gap > before.error_bound + 1e-9
    return CheckResult(
        "edge-moving",
        ok,
        {"applicable": True, "rho_before": before.rho, "rho_after": rho_after},
    )


def _component_rho_power(h: Hypergraph) -> list[float]:
    """Power-iteration rho of every connected component."""
    from .hypergraph import _components, _incidence_adjacency  # internal reuse

    out = []
    for comp in _components(_incidence_adjacency(h)):
        verts = sorted(x for x in comp if x < h.n)
        keep = set(verts)
        remap = {v: i for i, v in enumerate(verts)}
        edges = tuple(
            tuple(sorted(remap[v] for v in e)) for e in h.edges if set(e) <= keep
        )
        sub = Hypergraph(h.rank, len(verts), edges)
        out.append(rho_power_iteration(sub).rho if sub.m else 0.0)
    return out


# ---------------------------------------------------------------------------
# Randomized suites
# ---------------------------------------------------------------------------

def _random_supertree(rng: random.Random, max_m: int, ranks=(2, 3, 4)) -> Hypergraph:
    r = rng.choice(list(ranks))
    m = rng.randint(1, max_m)
    pool = enumerate_supertrees(m, r)
    return rng.choice(pool)


def random_graft_vertex_suite(trials: int, seed: int, max_m: int = 3) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        base = _random_supertree(rng, max_m)
        v = rng.randrange(base.n)
        q = rng.randint(1, 2)
        p = q + rng.randint(0, 2)
        out.append(check_graft_at_vertex(base, v, p, q))
    return out


def _edge_pair_trade_is_strict(base: Hypergraph, edge, u: int, p: int, q: int) -> bool:
    """Non-degeneracy for the shared-edge trade: some edge must survive off
    u's side of the split, otherwise both results are the same loose path."""
    rest = base.delete_edge(edge)
    from .hypergraph import _components, _incidence_adjacency  # internal reuse

    comp_of = {}
    for idx, comp in enumerate(_components(_incidence_adjacency(rest))):
        for node in comp:
            if node < rest.n:
                comp_of[node] = idx
    has_edge = [False] * (rest.m + rest.n)
    for e in rest.edges:
        has_edge[comp_of[e[0]]] = True
    off_u = any(
        has_edge[comp_of[w]] for w in range(base.n) if comp_of[w] != comp_of[u]
    )
    return off_u or (p > q and has_edge[comp_of[u]])


def random_graft_edge_suite(trials: int, seed: int, max_m: int = 3) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        base = _random_supertree(rng, max_m)
        if base.m < 2:
            continue
        edge = rng.choice(base.edges)
        u, v = rng.sample(list(edge), 2)
        q = rng.randint(1, 2)
        p = q + rng.randint(0, 2)
        if not _edge_pair_trade_is_strict(base, edge, u, p, q):
            continue
        out.append(check_graft_at_edge_pair(base, u, v, p, q))
    return out


def random_graft_distance_suite(trials: int, seed: int, max_m: int = 2) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        r = rng.choice((2, 3, 4))
        s = rng.randint(1, 2)
        spine = loose_path(s, r)
        u = spine.anchor("v1")
        v = spine.anchor(f"v{s + 1}")
        # decorate the far anchor: a bare spine would make both grafts the
        # same loose path (degenerate instance, no strict drop to verify)
        g = _attach_star(spine.graph, v, rng.randint(1, 2))
        q = rng.randint(1, 2)
        p = q + s + rng.randint(0, 1)
        out.append(check_graft_at_distance(g, u, v, s, p, q))
    return out


def _attach_star(g: Hypergraph, at: int, count: int) -> Hypergraph:
    edges = list(g.edges)
    nxt = g.n
    for _ in range(count):
        edges.append(tuple(sorted([at] + list(range(nxt, nxt + g.rank - 1)))))
        nxt += g.rank - 1
    return Hypergraph(g.rank, nxt, tuple(edges))


def random_edge_release_suite(trials: int, seed: int, max_m: int = 4) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        base = _random_supertree(rng, max_m, ranks=(3, 4))
        if base.m < 2:
            continue
        candidates = [e for e in base.edges if not base.is_pendent_edge(e)]
        if not candidates:
            continue
        out.append(check_edge_release(base, rng.choice(candidates)))
    return out


def random_edge_moving_suite(trials: int, seed: int, max_m: int = 4) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < trials and attempts < trials * 200:
        attempts += 1
        base = _random_supertree(rng, max_m, ranks=(3, 4))
        if base.m < 2:
            continue
        target = rng.randrange(base.n)
        movable = [e for e in base.edges if target not in e]
        if not movable:
            continue
        k = rng.randint(1, min(2, len(movable)))
        chosen = rng.sample(movable, k)
        moves = [(e, rng.choice(e)) for e in chosen]
        try:
            result = check_edge_moving(base, moves, target)
        except Exception:
            continue
        if result.details.get("applicable"):
            out.append(result)
    return out


# ---------------------------------------------------------------------------
# Ranking reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankedEntry:
    rank: int
    canonical_code: str
    family_match: str
    rho: float
    method_gap: float

    def to_row(self) -> list:
        return [self.rank, self.canonical_code, self.family_match, self.rho, self.method_gap]


@dataclass(frozen=True)
class RankingReport:
    kind: str
    params: dict
    entries: tuple[RankedEntry, ...]
    expected: tuple[str, ...]
    checks: tuple[CheckResult, ...]
    passed: bool

    CSV_HEADER = ["rank", "canonical_code", "family_match", "rho", "method_gap"]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "passed": self.passed,
            "expected": list(self.expected),
            "entries": [
                {
                    "rank": e.rank,
                    "canonical_code": e.canonical_code,
                    "family_match": e.family_match,
                    "rho": e.rho,
                    "method_gap": e.method_gap,
                }
                for e in self.entries
            ],
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details}
                for c in self.checks
            ],
        }

    def to_csv_rows(self) -> list[list]:
        return [list(self.CSV_HEADER)] + [e.to_row() for e in self.entries]


def _family_labels(m: int, d: int | None, r: int) -> dict[str, str]:
    """Canonical codes of the named families at these parameters."""
    labels: dict[str, str] = {}

    def put(builder, label):
        try:
            built = builder()
        except Exception:
            return
        labels.setdefault(canonical_code(built.graph).decode(), label)

    put(lambda: loose_path(m, r), "loose-path")
    put(lambda: hyperstar(m, r), "hyperstar")
    if m >= 3:
        put(lambda: core_pendent_path(m, r), "core-pendent-path")
        put(lambda: vertex_pendent_path(m, r), "vertex-pendent-path")
    if d is not None:
        for i in range(2, d + 1):
            put(lambda i=i: starred_path(m, d, r, i), f"starred-path(i={i})")
        for i in range(2, d):
            put(lambda i=i: core_starred_path(m, d, r, i), f"core-starred-path(i={i})")
        put(lambda: bistarred_path(m, d, r), "bistarred-path")
    return labels


def _ranked_entries(pool: list[Hypergraph], labels: dict[str, str], ascending: bool) -> list[RankedEntry]:
    rows = []
    for h in pool:
        exact, numeric, gap = dual_method_gap(h)
        rows.append((canonical_code(h).decode(), exact.rho, gap))
    rows.sort(key=lambda t: (t[1], t[0]), reverse=not ascending)
    return [
        RankedEntry(idx + 1, code, labels.get(code, ""), rho, gap)
        for idx, (code, rho, gap) in enumerate(rows)
    ]


def verify_ranking_diameter(m: int, d: int, r: int, max_edges: int | None = None) -> RankingReport:
    """Check the predicted largest-spectral-radius order on S(m, d, r)."""
    if m == d + 2:
        if d < 4:
            raise PreconditionViolatedError("the m = d+2 ranking needs d >= 4")
        top = [starred_path(m, d, r, i) for i in range(d // 2 + 1, 2, -1)]
    elif m >= d + 3:
        if d < 3:
            raise PreconditionViolatedError("the ranking needs d >= 3")
        top = [starred_path(m, d, r, i) for i in range(d // 2 + 1, 1, -1)]
        top.append(bistarred_path(m, d, r))
    else:
        raise PreconditionViolatedError(f"need m >= d + 2, got m={m}, d={d}")

    expected = tuple(canonical_code(t.graph).decode() for t in top)
    pool = enumerate_with_diameter(m, d, r, max_edges)
    labels = _family_labels(m, d, r)
    entries = _ranked_entries(pool, labels, ascending=False)

    checks = [
        CheckResult(
            "top-list-matches",
            tuple(e.canonical_code for e in entries[: len(expected)]) == expected,
            {"expected": list(expected)},
        ),
        CheckResult(
            "top-list-separated",
            all(
                entries[i].rho > entries[i + 1].rho + RHO_GAP
                for i in range(len(expected))
                if i + 1 < len(entries)
            ),
            {},
        ),
    ]
    checks.extend(_pairwise_attachment_checks(m, d, r))
    if m >= d + 2 and d >= 3:
        checks.append(_central_edge_vs_bistar_check(m, d, r))
    if m >= d + 3 and d >= 3:
        checks.append(_outsiders_below_bistar_check(entries, labels, m, d, r))
    passed = all(c.passed for c in checks)
    return RankingReport(
        "diameter-ranking",
        {"m": m, "d": d, "r": r},
        tuple(entries),
        expected,
        tuple(checks),
        passed,
    )


def _pairwise_attachment_checks(m: int, d: int, r: int) -> list[CheckResult]:
    """Monotonicity of path attachments: joints rise toward the middle,
    edge-core attachments stay below their joint counterparts."""
    star = hyperstar(m - d, r)
    center = star.anchor("center")

    def at_vertex(i: int) -> Hypergraph:
        return path_vertex_attach(d, r, i, star.graph, center)

    def at_core(i: int) -> Hypergraph:
        return path_edge_attach(d, r, i, star.graph, center)

    results = []
    rho_v = {i: _rho(at_vertex(i)) for i in range(2, d // 2 + 2)}
    ok_a = all(
        rho_v[i] > rho_v[j] + RHO_GAP
        for j in range(2, d // 2 + 2)
        for i in range(j + 1, d // 2 + 2)
    )
    results.append(CheckResult("joint-attachment-monotone", ok_a, {"rho": rho_v}))

    if r >= 3 and d >= 3:
        rho_e = {i: _rho(at_core(i)) for i in range(2, (d + 1) // 2 + 1)}
        ok_b = all(
            rho_e[i] > rho_e[j] + RHO_GAP
            for j in rho_e
            for i in rho_e
            if i > j
        )
        results.append(CheckResult("core-attachment-monotone", ok_b, {"rho": rho_e}))

        rho_v_all = {i: _rho(at_vertex(i)) for i in range(2, d + 1)}
        rho_e_all = {i: _rho(at_core(i)) for i in range(2, d)}
        ok_c = all(rho_e_all[i] < rho_v_all[i] - RHO_GAP for i in rho_e_all)
        ok_d = all(rho_e_all[i] < rho_v_all[i + 1] - RHO_GAP for i in rho_e_all)
        results.append(CheckResult("core-below-joint", ok_c and ok_d, {}))

        mid = (d + 1) // 2
        ok_e = all(
            compare(at_core(mid), at_vertex(i)).relation is Relation.STRICTLY_LESS
            for i in range(2, d + 1)
        )
        results.append(CheckResult("central-core-below-every-joint", ok_e, {}))
    return results


def _central_edge_vs_bistar_check(m: int, d: int, r: int) -> CheckResult:
    """The split-star path dominates the best core attachment."""
    mid = (d + 1) // 2
    bistar = bistarred_path(m, d, r).graph
    core_mid = core_starred_path(m, d, r, mid).graph
    verdict = compare(core_mid, bistar)
    ok = (
        verdict.relation is Relation.STRICTLY_LESS
        and _rho(core_mid) < _rho(bistar) - RHO_GAP
    )
    return CheckResult("central-core-below-bistar", ok, {"relation": verdict.relation.value})


def _outsiders_below_bistar_check(
    entries: list[RankedEntry], labels: dict[str, str], m: int, d: int, r: int
) -> CheckResult:
    named = {
        canonical_code(starred_path(m, d, r, i).graph).decode()
        for i in range(2, d + 1)
    }
    named.add(canonical_code(bistarred_path(m, d, r).graph).decode())
    rho_bistar = _rho(bistarred_path(m, d, r).graph)
    ok = all(
        e.rho < rho_bistar - RHO_GAP
        for e in entries
        if e.canonical_code not in named
    )
    return CheckResult("outsiders-below-bistar", ok, {})


def verify_minima(m: int, r: int, max_edges: int | None = None) -> RankingReport:
    """Check that the loose path and the core-pendent path sit at the bottom."""
    if m < 4:
        raise PreconditionViolatedError(f"minima ranking needs m >= 4, got m={m}")
    pool = enumerate_supertrees(m, r, max_edges)
    labels = _family_labels(m, None, r)
    entries = _ranked_entries(pool, labels, ascending=True)

    path_code = canonical_code(loose_path(m, r).graph).decode()
    second_code = canonical_code(core_pendent_path(m, r).graph).decode()
    expected = (path_code, second_code)

    checks = [
        CheckResult(
            "bottom-two-match",
            tuple(e.canonical_code for e in entries[:2]) == expected,
            {"expected": list(expected)},
        ),
        CheckResult(
            "bottom-gaps-strict",
            len(entries) >= 3
            and entries[1].rho - entries[0].rho > RHO_GAP
            and entries[2].rho - entries[1].rho > RHO_GAP,
            {},
        ),
    ]

    second = core_pendent_path(m, r).graph
    losers = []
    for h in pool:
        code = canonical_code(h).decode()
        if code in (path_code, second_code):
            continue
        verdict = compare(second, h)
        if verdict.relation is not Relation.STRICTLY_LESS:
            losers.append((code, verdict.relation.value))
    checks.append(CheckResult("second-dominates-others", not losers, {"violations": losers}))

    grave = vertex_pendent_path(m, r).graph
    if r >= 3:
        verdict = compare(second, grave)
        checks.append(
            CheckResult(
                "vertex-pendant-above-core-pendant",
                verdict.relation is Relation.STRICTLY_LESS
                and _rho(second) < _rho(grave) - RHO_GAP,
                {"relation": verdict.relation.value},
            )
        )

    passed = all(c.passed for c in checks)
    return RankingReport(
        "minima-ranking",
        {"m": m, "r": r},
        tuple(entries),
        expected,
        tuple(checks),
        passed,
    )
