"""Named supertree families and path-grafting builders.

Constructors return an :class:`AnchoredHypergraph` carrying the graph and a
map of named anchor vertices (path joints ``v1..v{d+1}``, star ``center``,
attachment points), so callers can address construction vertices without
re-deriving ids.  Fresh vertices are always appended after existing ids, so
anchors of a base graph stay valid across attachments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import BadParamsError, RankTooSmallError
from .hypergraph import Hypergraph, coalesce, from_edges, power


@dataclass(frozen=True)
class AnchoredHypergraph:
    """A constructed hypergraph plus named anchor vertices."""

    graph: Hypergraph
    anchors: dict[str, int] = field(default_factory=dict)

    def anchor(self, name: str) -> int:
        return self.anchors[name]


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise BadParamsError(message)


def loose_path(m: int, r: int) -> AnchoredHypergraph:
    """Path of m edges; joint vertices are anchored as v1..v{m+1}."""
    _check(m >= 0 and r >= 2, f"loose path needs m >= 0, r >= 2, got m={m}, r={r}")
    if m == 0:
        return AnchoredHypergraph(Hypergraph(r, 1, ()), {"v1": 0})
    edges = [tuple(range(i * (r - 1), i * (r - 1) + r)) for i in range(m)]
    g = Hypergraph(r, m * (r - 1) + 1, tuple(edges))
    anchors = {f"v{i + 1}": i * (r - 1) for i in range(m + 1)}
    return AnchoredHypergraph(g, anchors)


def hyperstar(m: int, r: int) -> AnchoredHypergraph:
    """Star of m edges through one center vertex (anchored as ``center``)."""
    _check(m >= 1 and r >= 2, f"hyperstar needs m >= 1, r >= 2, got m={m}, r={r}")
    edges = []
    nxt = 1
    for _ in range(m):
        edges.append(tuple([0] + list(range(nxt, nxt + r - 1))))
        nxt += r - 1
    g = Hypergraph(r, nxt, tuple(edges))
    return AnchoredHypergraph(g, {"center": 0})


def tree_power(tree_edges: Iterable[Iterable[int]], r: int) -> Hypergraph:
    """Inflate a 2-uniform forest given by its edge list to rank r."""
    base = from_edges(tree_edges, 2)
    if r == 2:
        return base
    return power(base, r)


def _pend_edges(g: Hypergraph, at: int, count: int) -> Hypergraph:
    """Attach ``count`` fresh pendent edges at one vertex."""
    g._check_vertex(at)
    edges = list(g.edges)
    nxt = g.n
    for _ in range(count):
        edges.append(tuple(sorted([at] + list(range(nxt, nxt + g.rank - 1)))))
        nxt += g.rank - 1
    return Hypergraph(g.rank, nxt, tuple(edges))


def attach_pendent_path(g: Hypergraph, v: int, p: int) -> AnchoredHypergraph:
    """Chain p fresh edges from vertex v; the far joint is anchored ``tip``."""
    g._check_vertex(v)
    if p < 0:
        raise BadParamsError("path length must be nonnegative")
    edges = list(g.edges)
    nxt = g.n
    joint = v
    for _ in range(p):
        fresh = list(range(nxt, nxt + g.rank - 1))
        nxt += g.rank - 1
        edges.append(tuple(sorted([joint] + fresh)))
        joint = fresh[-1]
    return AnchoredHypergraph(Hypergraph(g.rank, nxt, tuple(edges)), {"tip": joint})


def starred_path(m: int, d: int, r: int, i: int) -> AnchoredHypergraph:
    """Diameter-d path with the m-d spare edges attached as a star at joint v_i.

    Mirror symmetric in i <-> d - i + 2.
    """
    _check(2 <= i <= d <= m - 1, f"need 2 <= i <= d <= m-1, got m={m}, d={d}, i={i}")
    base = loose_path(d, r)
    g = _pend_edges(base.graph, base.anchor(f"v{i}"), m - d)
    return AnchoredHypergraph(g, dict(base.anchors))


def bistarred_path(m: int, d: int, r: int) -> AnchoredHypergraph:
    """Diameter-d path with m-d-1 pendent edges at the central joint and one
    at the next joint.

    The bulk sits at v_{floor(d/2)+1}, the joint that is exactly central;
    for even d this is the unique center, for odd d either of the two.
    """
    _check(m >= d + 2, f"need m >= d + 2, got m={m}, d={d}")
    _check(d >= 3, f"need d >= 3 to keep the diameter, got d={d}")
    b = d // 2 + 1
    base = loose_path(d, r)
    g = _pend_edges(base.graph, base.anchor(f"v{b}"), m - d - 1)
    g = _pend_edges(g, base.anchor(f"v{b + 1}"), 1)
    return AnchoredHypergraph(g, dict(base.anchors))


def core_starred_path(m: int, d: int, r: int, i: int) -> AnchoredHypergraph:
    """Diameter-d path with a star of m-d edges at a core vertex of edge e_i.

    All core vertices of an edge are equivalent; the lowest id is used (it is
    anchored as ``core``).  Mirror symmetric in i <-> d - i + 1.
    """
    if r < 3:
        raise RankTooSmallError("attaching at an edge core needs rank >= 3")
    _check(2 <= i <= d - 1, f"need 2 <= i <= d-1, got d={d}, i={i}")
    _check(m >= d + 1, f"need m >= d + 1, got m={m}, d={d}")
    base = loose_path(d, r)
    joints = {base.anchor(f"v{i}"), base.anchor(f"v{i + 1}")}
    core = min(v for v in base.graph.edges[i - 1] if v not in joints)
    g = _pend_edges(base.graph, core, m - d)
    anchors = dict(base.anchors)
    anchors["core"] = core
    return AnchoredHypergraph(g, anchors)


def core_pendent_path(m: int, r: int) -> AnchoredHypergraph:
    """Path of length m-1 with one pendent edge at a core vertex of e_2.

    This is the second-smallest supertree by spectral radius.  At rank 2 the
    second edge has no core vertex, so the pendent edge lands on joint v_2
    (the rank-2 second-minimal caterpillar).
    """
    _check(m >= 3, f"need m >= 3, got m={m}")
    base = loose_path(m - 1, r)
    anchors = dict(base.anchors)
    if r == 2:
        at = base.anchor("v2")
    else:
        deg = base.graph.degrees()
        at = min(v for v in base.graph.edges[1] if deg[v] == 1)
        anchors["core"] = at
    return AnchoredHypergraph(_pend_edges(base.graph, at, 1), anchors)


def vertex_pendent_path(m: int, r: int) -> AnchoredHypergraph:
    """Path of length m-1 with one pendent edge at the joint v_2."""
    _check(m >= 3, f"need m >= 3, got m={m}")
    base = loose_path(m - 1, r)
    return AnchoredHypergraph(
        _pend_edges(base.graph, base.anchor("v2"), 1), dict(base.anchors)
    )


def path_vertex_attach(d: int, r: int, i: int, h: Hypergraph, u: int) -> Hypergraph:
    """Identify vertex u of h with joint v_i of a fresh length-d path."""
    _check(1 <= i <= d + 1, f"joint index {i} outside 1..{d + 1}")
    base = loose_path(d, r)
    return coalesce(base.graph, base.anchor(f"v{i}"), h, u)


def path_edge_attach(d: int, r: int, i: int, h: Hypergraph, u: int) -> Hypergraph:
    """Identify vertex u of h with the lowest core vertex of edge e_i of a
    fresh length-d path."""
    if r < 3:
        raise RankTooSmallError("attaching at an edge core needs rank >= 3")
    _check(1 <= i <= d, f"edge index {i} outside 1..{d}")
    base = loose_path(d, r)
    joints = {base.anchor(f"v{i}"), base.anchor(f"v{i + 1}")}
    core = min(v for v in base.graph.edges[i - 1] if v not in joints)
    return coalesce(base.graph, core, h, u)


# ---------------------------------------------------------------------------
# Grafting builders
# ---------------------------------------------------------------------------

def graft_paths_at_vertex(g: Hypergraph, v: int, p: int, q: int) -> Hypergraph:
    """Attach pendent paths of lengths p and q at one vertex."""
    step = attach_pendent_path(g, v, p)
    return attach_pendent_path(step.graph, v, q).graph


def graft_paths_at_edge(g: Hypergraph, u: int, v: int, p: int, q: int) -> Hypergraph:
    """Attach pendent paths of lengths p and q at two vertices sharing an edge."""
    if u == v:
        raise BadParamsError("anchor vertices must be distinct")
    if not any(u in e and v in e for e in g.edges):
        raise BadParamsError(f"vertices {u} and {v} share no edge")
    step = attach_pendent_path(g, u, p)
    return attach_pendent_path(step.graph, v, q).graph


def _path_between(g: Hypergraph, u: int, v: int) -> list[int] | None:
    """Edge indices of a shortest u-v path (unique in a superforest)."""
    from collections import deque

    prev: dict[int, tuple[int, int]] = {}
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for idx, e in enumerate(g.edges):
            if x in e:
                for y in e:
                    if y not in seen:
                        seen.add(y)
                        prev[y] = (x, idx)
                        queue.append(y)
    if v not in seen:
        return None
    path = []
    cur = v
    while cur != u:
        cur, idx = prev[cur]
        path.append(idx)
    path.reverse()
    return path


def graft_paths_at_distance(
    g: Hypergraph, u: int, v: int, s: int, p: int, q: int
) -> Hypergraph:
    """Attach pendent paths of lengths p and q at the ends of a length-s path.

    Every interior edge of the u-v path must have all its off-path vertices
    of degree one.
    """
    if u == v:
        raise BadParamsError("anchor vertices must be distinct")
    idxs = _path_between(g, u, v)
    if idxs is None:
        raise BadParamsError(f"vertices {u} and {v} are not connected")
    if len(idxs) != s:
        raise BadParamsError(f"distance between anchors is {len(idxs)}, expected {s}")
    deg = g.degrees()
    joints = {u, v}
    for a, b in zip(idxs, idxs[1:]):
        joints |= set(g.edges[a]) & set(g.edges[b])
    for idx in idxs[1:]:
        for w in g.edges[idx]:
            if w not in joints and deg[w] != 1:
                raise BadParamsError(
                    f"interior edge {idx} carries an off-path vertex of degree {deg[w]}"
                )
    step = attach_pendent_path(g, u, p)
    return attach_pendent_path(step.graph, v, q).graph


# ---------------------------------------------------------------------------
# Serializable family descriptions
# ---------------------------------------------------------------------------

_FAMILY_TAGS = (
    "LoosePath",
    "Hyperstar",
    "PowerOfTree",
    "Tmd_i",
    "Tmdr_edge_i",
    "TDoublePrime",
    "D",
    "PGrave",
    "GraftOneVertex",
    "GraftAdjacent",
    "GraftDistanceS",
)


@dataclass(frozen=True)
class FamilySpec:
    """JSON-serializable description of one named family member."""

    family: str
    m: int | None = None
    d: int | None = None
    r: int | None = None
    i: int | None = None
    p: int | None = None
    q: int | None = None
    s: int | None = None
    edges: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.family not in _FAMILY_TAGS:
            raise BadParamsError(f"unknown family tag {self.family!r}")

    def _need(self, *names: str) -> list[int]:
        out = []
        for name in names:
            value = getattr(self, name)
            if value is None:
                raise BadParamsError(f"family {self.family} needs parameter {name!r}")
            out.append(value)
        return out

    def build(self) -> AnchoredHypergraph:
        f = self.family
        if f == "LoosePath":
            m, r = self._need("m", "r")
            return loose_path(m, r)
        if f == "Hyperstar":
            m, r = self._need("m", "r")
            return hyperstar(m, r)
        if f == "PowerOfTree":
            (r,) = self._need("r")
            if self.edges is None:
                raise BadParamsError("PowerOfTree needs an edge list")
            return AnchoredHypergraph(tree_power(self.edges, r), {})
        if f == "Tmd_i":
            m, d, r, i = self._need("m", "d", "r", "i")
            return starred_path(m, d, r, i)
        if f == "Tmdr_edge_i":
            m, d, r, i = self._need("m", "d", "r", "i")
            return core_starred_path(m, d, r, i)
        if f == "TDoublePrime":
            m, d, r = self._need("m", "d", "r")
            return bistarred_path(m, d, r)
        if f == "D":
            m, r = self._need("m", "r")
            return core_pendent_path(m, r)
        if f == "PGrave":
            m, r = self._need("m", "r")
            return vertex_pendent_path(m, r)
        if f == "GraftOneVertex":
            r, p, q = self._need("r", "p", "q")
            base = loose_path(1, r)
            g = graft_paths_at_vertex(base.graph, base.anchor("v1"), p, q)
            return AnchoredHypergraph(g, dict(base.anchors))
        if f == "GraftAdjacent":
            r, p, q = self._need("r", "p", "q")
            base = loose_path(1, r)
            u, v = base.anchor("v1"), base.anchor("v2")
            return AnchoredHypergraph(
                graft_paths_at_edge(base.graph, u, v, p, q), dict(base.anchors)
            )
        if f == "GraftDistanceS":
            r, p, q, s = self._need("r", "p", "q", "s")
            base = loose_path(s, r)
            u, v = base.anchor("v1"), base.anchor(f"v{s + 1}")
            return AnchoredHypergraph(
                graft_paths_at_distance(base.graph, u, v, s, p, q), dict(base.anchors)
            )
        raise BadParamsError(f"unknown family tag {f!r}")

    def to_json_dict(self) -> dict:
        out: dict = {"family": self.family}
        for name in ("m", "d", "r", "i", "p", "q", "s"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.edges is not None:
            out["edges"] = [list(e) for e in self.edges]
        return out

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FamilySpec":
        edges = data.get("edges")
        return cls(
            family=data["family"],
            m=data.get("m"),
            d=data.get("d"),
            r=data.get("r"),
            i=data.get("i"),
            p=data.get("p"),
            q=data.get("q"),
            s=data.get("s"),
            edges=tuple(tuple(e) for e in edges) if edges is not None else None,
        )
