"""Immutable r-uniform linear hypergraphs and structural surgery on them.

A hypergraph is stored as a rank, a dense vertex count ``n`` (ids 0..n-1,
isolated vertices are explicit) and an ordered tuple of edges, each edge a
sorted tuple of ``rank`` distinct vertex ids.  Any two edges share at most
one vertex.  All operations are pure: they return new values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DanglingVertexError,
    DiameterUndefinedError,
    NoSuchEdgeError,
    NoSuchVertexError,
    NonLinearError,
    NonLinearResultError,
    NonUniformEdgeError,
    NotAcyclicError,
    PendentEdgeError,
    PivotNotInEdgeError,
    RankTooSmallError,
    TargetInsideEdgeError,
)

Edge = tuple[int, ...]


def _normalize_edge(edge: Iterable[int], rank: int) -> Edge:
    vs = tuple(sorted(int(v) for v in edge))
    if len(vs) != rank or len(set(vs)) != rank:
        raise NonUniformEdgeError(f"edge {list(edge)!r} is not a set of {rank} distinct vertices")
    return vs


def _check_linear(edges: Sequence[Edge]) -> None:
    seen: dict[tuple[int, int], int] = {}
    for idx, e in enumerate(edges):
        for a in range(len(e)):
            for b in range(a + 1, len(e)):
                pair = (e[a], e[b])
                other = seen.get(pair)
                if other is not None:
                    raise NonLinearError(f"edges {other} and {idx} share vertices {pair}")
                seen[pair] = idx


@dataclass(frozen=True)
class VertexRole:
    """Degree classification of one vertex."""

    degree: int

    @property
    def is_core(self) -> bool:
        return self.degree == 1


@dataclass(frozen=True)
class StructureReport:
    """Connectivity / acyclicity summary of a hypergraph."""

    is_connected: bool
    is_acyclic: bool
    is_supertree: bool
    diameter: int | None
    roles: tuple[VertexRole, ...]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform linear hypergraph with dense vertex ids 0..n-1."""

    rank: int
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def incident_edges(self, v: int) -> tuple[Edge, ...]:
        self._check_vertex(v)
        return tuple(e for e in self.edges if v in e)

    def core_vertices(self, e: Iterable[int]) -> tuple[int, ...]:
        """Degree-one vertices of an edge."""
        edge = self._find_edge(e)
        deg = self.degrees()
        return tuple(v for v in edge if deg[v] == 1)

    def is_pendent_edge(self, e: Iterable[int]) -> bool:
        """True when the edge has exactly rank-1 core vertices."""
        return len(self.core_vertices(e)) == self.rank - 1

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise NoSuchVertexError(f"vertex {v} not in 0..{self.n - 1}")

    def _find_edge(self, e: Iterable[int]) -> Edge:
        edge = tuple(sorted(int(v) for v in e))
        if edge not in self.edges:
            raise NoSuchEdgeError(f"edge {list(edge)!r} not present")
        return edge

    def delete_edge(self, e: Iterable[int]) -> "Hypergraph":
        """Remove one edge, keeping the full vertex set."""
        edge = self._find_edge(e)
        rest = list(self.edges)
        rest.remove(edge)
        return Hypergraph(self.rank, self.n, tuple(rest))

    def delete_vertices(self, remove: Iterable[int]) -> "Hypergraph":
        """Drop the given vertices; an edge survives iff fully outside them.

        Surviving vertex ids are compacted to 0..n'-1 preserving order.
        """
        gone = set(int(v) for v in remove)
        for v in gone:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in gone]
        remap = {old: new for new, old in enumerate(keep)}
        edges = tuple(
            tuple(remap[v] for v in e) for e in self.edges if not (set(e) & gone)
        )
        return Hypergraph(self.rank, len(keep), edges)

    def to_json_dict(self, name: str | None = None) -> dict:
        d: dict = {"r": self.rank, "n": self.n, "edges": [list(e) for e in self.edges]}
        if name is not None:
            d["name"] = name
        return d

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Hypergraph(r={self.rank}, n={self.n}, m={self.m})"


def validate(raw_vertices: Iterable[int], raw_edges: Iterable[Iterable[int]], rank: int) -> Hypergraph:
    """Build a validated hypergraph, compacting vertex ids to 0..n-1."""
    if rank < 2:
        raise RankTooSmallError(f"rank must be at least 2, got {rank}")
    order: list[int] = []
    index: dict[int, int] = {}
    for v in raw_vertices:
        v = int(v)
        if v in index:
            raise DanglingVertexError(f"duplicate vertex id {v}")
        index[v] = len(order)
        order.append(v)
    edges = []
    for e in raw_edges:
        norm = _normalize_edge(e, rank)
        for v in norm:
            if v not in index:
                raise DanglingVertexError(f"edge {list(norm)!r} references unknown vertex {v}")
        edges.append(tuple(sorted(index[v] for v in norm)))
    _check_linear(edges)
    return Hypergraph(rank, len(order), tuple(edges))


def from_edges(raw_edges: Iterable[Iterable[int]], rank: int, isolated: int = 0) -> Hypergraph:
    """Validate edges over the vertex set they mention plus ``isolated`` extras."""
    raw_edges = [list(e) for e in raw_edges]
    mentioned = sorted({int(v) for e in raw_edges for v in e})
    extra = []
    nxt = (mentioned[-1] + 1) if mentioned else 0
    for _ in range(isolated):
        extra.append(nxt)
        nxt += 1
    return validate(mentioned + extra, raw_edges, rank)


def from_json_dict(data: Mapping) -> Hypergraph:
    """Load the interchange form {"r":…, "n":…, "edges":[[…],…]}."""
    rank = int(data["r"])
    n = int(data["n"])
    edges = data["edges"]
    return validate(range(n), edges, rank)


def empty_hypergraph(rank: int, isolated: int = 0) -> Hypergraph:
    """k isolated vertices, no edges."""
    return Hypergraph(rank, isolated, ())


def disjoint_union(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Side-by-side union; h's vertex ids are shifted past g's."""
    if g.rank != h.rank:
        raise NonUniformEdgeError("disjoint union requires equal ranks")
    shifted = tuple(tuple(v + g.n for v in e) for e in h.edges)
    return Hypergraph(g.rank, g.n + h.n, g.edges + shifted)


def coalesce(g: Hypergraph, u: int, h: Hypergraph, v: int) -> Hypergraph:
    """Glue g and h by identifying vertex u of g with vertex v of h.

    g keeps its ids; h's other vertices follow in their original order.
    """
    if g.rank != h.rank:
        raise NonUniformEdgeError("coalesce requires equal ranks")
    g._check_vertex(u)
    h._check_vertex(v)
    remap = {}
    nxt = g.n
    for w in range(h.n):
        if w == v:
            remap[w] = u
        else:
            remap[w] = nxt
            nxt += 1
    edges = g.edges + tuple(tuple(sorted(remap[w] for w in e)) for e in h.edges)
    _check_linear(edges)
    return Hypergraph(g.rank, nxt, edges)


def power(g: Hypergraph, rank: int) -> Hypergraph:
    """Inflate a 2-uniform graph: each edge gains rank-2 fresh core vertices."""
    if g.rank != 2:
        raise NonUniformEdgeError("power is defined on 2-uniform graphs")
    if rank < 3:
        raise RankTooSmallError("power requires rank at least 3")
    nxt = g.n
    edges = []
    for e in g.edges:
        fresh = tuple(range(nxt, nxt + rank - 2))
        nxt += rank - 2
        edges.append(tuple(sorted(e + fresh)))
    return Hypergraph(rank, nxt, tuple(edges))


def move_edges(
    h: Hypergraph,
    moves: Sequence[tuple[Iterable[int], int]],
    target: int,
) -> Hypergraph:
    """Re-anchor each listed edge from its pivot vertex to ``target``."""
    h._check_vertex(target)
    remaining = list(h.edges)
    replaced = []
    for raw_edge, pivot in moves:
        edge = tuple(sorted(int(x) for x in raw_edge))
        if edge not in remaining:
            raise NoSuchEdgeError(f"edge {list(edge)!r} not present (or moved twice)")
        if target in edge:
            raise TargetInsideEdgeError(f"target {target} lies inside edge {list(edge)!r}")
        if pivot not in edge:
            raise PivotNotInEdgeError(f"pivot {pivot} not in edge {list(edge)!r}")
        remaining.remove(edge)
        replaced.append(tuple(sorted((set(edge) - {pivot}) | {target})))
    edges = tuple(remaining + replaced)
    try:
        _check_linear(edges)
    except NonLinearError as exc:
        raise NonLinearResultError(str(exc)) from exc
    return Hypergraph(h.rank, h.n, edges)


def edge_release(h: Hypergraph, e: Iterable[int], u: int | None = None) -> Hypergraph:
    """Move every edge adjacent to ``e`` but avoiding ``u`` onto ``u``.

    The result is independent of the choice of u in e up to isomorphism.
    """
    edge = h._find_edge(e)
    if u is None:
        u = edge[0]
    if u not in edge:
        raise NoSuchVertexError(f"vertex {u} not in edge {list(edge)!r}")
    if h.is_pendent_edge(edge):
        raise PendentEdgeError(f"edge {list(edge)!r} is pendent")
    moves = []
    for f in h.edges:
        if f == edge or u in f:
            continue
        shared = set(f) & set(edge)
        if shared:
            moves.append((f, shared.pop()))
    return move_edges(h, moves, u)


def relabel(h: Hypergraph, mapping: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (mapping[old] = new)."""
    if sorted(mapping) != list(range(h.n)):
        raise NoSuchVertexError("mapping is not a permutation of the vertex ids")
    edges = tuple(tuple(sorted(mapping[v] for v in e)) for e in h.edges)
    return Hypergraph(h.rank, h.n, edges)


# ---------------------------------------------------------------------------
# Incidence-structure analysis
# ---------------------------------------------------------------------------

def _incidence_adjacency(h: Hypergraph) -> list[list[int]]:
    """Bipartite incidence graph: nodes 0..n-1 are vertices, n+i is edge i."""
    adj: list[list[int]] = [[] for _ in range(h.n + h.m)]
    for i, e in enumerate(h.edges):
        node = h.n + i
        for v in e:
            adj[v].append(node)
            adj[node].append(v)
    return adj


def _components(adj: list[list[int]]) -> list[list[int]]:
    seen = [False] * len(adj)
    comps = []
    for start in range(len(adj)):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def is_connected(h: Hypergraph) -> bool:
    if h.n == 0:
        return True
    return len(_components(_incidence_adjacency(h))) == 1


def is_acyclic(h: Hypergraph) -> bool:
    """A linear hypergraph is acyclic iff its incidence graph is a forest."""
    adj = _incidence_adjacency(h)
    links = sum(len(e) for e in h.edges)
    return links == h.n + h.m - len(_components(adj))


def diameter(h: Hypergraph) -> int:
    """Longest shortest path (in edges) between two vertices."""
    if h.n == 0 or not is_connected(h):
        raise DiameterUndefinedError("diameter of a disconnected hypergraph")
    neighbors: list[set[int]] = [set() for _ in range(h.n)]
    for e in h.edges:
        for v in e:
            neighbors[v].update(e)
    best = 0
    for src in range(h.n):
        dist = [-1] * h.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in neighbors[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        best = max(best, max(dist))
    return best


def structure(h: Hypergraph) -> StructureReport:
    """Connectivity, acyclicity, supertree flag, diameter and vertex roles."""
    connected = is_connected(h)
    acyclic = is_acyclic(h)
    supertree = connected and acyclic
    if supertree and h.n != h.m * (h.rank - 1) + 1:
        raise AssertionError("connected acyclic hypergraph violates n = m(r-1)+1")
    roles = tuple(VertexRole(d) for d in h.degrees())
    diam = diameter(h) if connected and h.n > 0 else None
    return StructureReport(connected, acyclic, supertree, diam, roles)


def is_supertree(h: Hypergraph) -> bool:
    return is_connected(h) and is_acyclic(h)


# ---------------------------------------------------------------------------
# Canonical codes for superforests
# ---------------------------------------------------------------------------

def _tree_centers(adj: list[list[int]], comp: list[int]) -> list[int]:
    if len(comp) == 1:
        return [comp[0]]
    deg = {x: len(adj[x]) for x in comp}
    leaves = [x for x in comp if deg[x] <= 1]
    removed = len(leaves)
    while removed < len(comp):
        nxt = []
        for x in leaves:
            deg[x] = 0
            for y in adj[x]:
                if deg[y] > 0:
                    deg[y] -= 1
                    if deg[y] == 1:
                        nxt.append(y)
        removed += len(nxt)
        leaves = nxt
    return leaves


def _rooted_code(root: int, parent: int, adj: list[list[int]], tag_of) -> str:
    subs = sorted(
        _rooted_code(c, root, adj, tag_of) for c in adj[root] if c != parent
    )
    return tag_of(root) + "(" + ",".join(subs) + ")"


def _forest_component_codes(adj: list[list[int]], tag_of) -> list[str]:
    codes = []
    for comp in _components(adj):
        links = sum(len(adj[x]) for x in comp) // 2
        if links != len(comp) - 1:
            raise NotAcyclicError("canonical codes are only defined for superforests")
        centers = _tree_centers(adj, comp)
        codes.append(min(_rooted_code(c, -1, adj, tag_of) for c in centers))
    return codes


def canonical_code(h: Hypergraph) -> bytes:
    """Isomorphism-invariant code; equal codes iff isomorphic superforests."""
    adj = _incidence_adjacency(h)
    tag_of = lambda node: "v" if node < h.n else "e"
    codes = _forest_component_codes(adj, tag_of)
    return (f"{h.rank}:" + "|".join(sorted(codes))).encode("ascii")


def component_code_for_edges(edges: Sequence[Edge], rank: int) -> str:
    """Canonical code of one connected acyclic edge set (no isolated vertices)."""
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj: list[list[int]] = [[] for _ in range(n + len(edges))]
    for i, e in enumerate(edges):
        node = n + i
        for v in e:
            adj[index[v]].append(node)
            adj[node].append(index[v])
    tag_of = lambda node: "v" if node < n else "e"
    codes = _forest_component_codes(adj, tag_of)
    if len(codes) != 1:
        raise NotAcyclicError("edge set is not connected")
    return f"{rank}:{codes[0]}"
