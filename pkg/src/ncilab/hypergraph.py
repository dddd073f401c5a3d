"""Minimal hypergraphs and the operation algebra on them.

A hypergraph is a finite set of string-labelled vertices together with a set
of nonempty edges (subsets of the vertices).  An edge of cardinality 1 is a
"1-edge", cardinality 2 an "edge", cardinality >= 3 a "hyperedge".  A
hypergraph is *minimal* when no edge properly contains another; operations
that promise minimal output always deliver it.

All values are immutable and every operation is a pure function, so values
are safely shareable across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SchemaError, UnitIdeal, UnknownVertex

Label = str
Edge = frozenset  # frozenset of vertex labels


def make_edge(vertices: Iterable[str]) -> frozenset:
    e = frozenset(vertices)
    if not e:
        raise ValueError("an edge must contain at least one vertex")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set plus edge set; not necessarily minimal."""

    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        for v in self.vertices:
            if not isinstance(v, str) or not v:
                raise ValueError(f"vertex labels must be nonempty strings, got {v!r}")
        for e in self.edges:
            if not e:
                raise ValueError("edges must be nonempty")
            if not e <= self.vertices:
                raise ValueError(f"edge {sorted(e)} contains unknown vertices")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Iterable[str]],
        vertices: Iterable[str] | None = None,
    ) -> "Hypergraph":
        """Build a hypergraph; the vertex set defaults to the edge support."""
        es = frozenset(make_edge(e) for e in edges)
        if vertices is None:
            vs = frozenset().union(*es) if es else frozenset()
        else:
            vs = frozenset(vertices)
        return cls(vs, es)

    @property
    def support(self) -> frozenset:
        """Vertices that belong to at least one edge."""
        return frozenset().union(*self.edges) if self.edges else frozenset()

    def is_minimal(self) -> bool:
        return all(not (f < e) for e in self.edges for f in self.edges)

    def sorted_edges(self) -> list:
        return sorted(sorted(e) for e in self.edges)

    def hyperedges(self) -> list:
        """Edges of cardinality >= 3, canonically ordered (size, then labels)."""
        hs = [e for e in self.edges if len(e) >= 3]
        return sorted(hs, key=lambda e: (len(e), sorted(e)))

    def to_json_dict(self) -> dict:
        return {"vertices": sorted(self.vertices), "edges": self.sorted_edges()}

    @classmethod
    def from_json_dict(cls, obj) -> "Hypergraph":
        if not isinstance(obj, dict):
            raise SchemaError("hypergraph JSON must be an object")
        verts = obj.get("vertices")
        edges = obj.get("edges")
        if not isinstance(verts, list) or not all(isinstance(v, str) and v for v in verts):
            raise SchemaError('"vertices" must be a list of nonempty strings')
        if len(set(verts)) != len(verts):
            raise SchemaError("duplicate vertex labels")
        if not isinstance(edges, list):
            raise SchemaError('"edges" must be a list of label lists')
        vs = frozenset(verts)
        es = set()
        for e in edges:
            if not isinstance(e, list) or not e or not all(isinstance(x, str) for x in e):
                raise SchemaError("each edge must be a nonempty list of labels")
            fe = frozenset(e)
            if not fe <= vs:
                raise SchemaError(f"edge {e} references unknown vertices")
            es.add(fe)
        return cls(vs, frozenset(es))


def minimal_edge_set(edges: Iterable[frozenset]) -> frozenset:
    """Antichain of the given edges: drop every edge strictly containing another."""
    es = set(edges)
    return frozenset(e for e in es if not any(f < e for f in es))


def min_reduce(g: Hypergraph) -> Hypergraph:
    """Delete every edge that properly contains another edge; idempotent."""
    return Hypergraph(g.vertices, minimal_edge_set(g.edges))


def _require_subset(g: Hypergraph, vs: frozenset) -> None:
    if not vs <= g.vertices:
        bad = sorted(vs - g.vertices)
        raise UnknownVertex(f"vertices {bad} are not in the hypergraph")


def induced_sub(g: Hypergraph, vs: Iterable[str]) -> Hypergraph:
    """Keep only edges contained entirely in ``vs``.

    Preserves minimality: the edge poset of the result is a subposet of the
    original, so minimal elements stay minimal.
    """
    vset = frozenset(vs)
    _require_subset(g, vset)
    return Hypergraph(vset, frozenset(e for e in g.edges if e <= vset))


def weak_induced_sub(g: Hypergraph, vs: Iterable[str]) -> Hypergraph:
    """Restrict every edge to ``vs``; empty intersections are dropped.

    The result is generally not minimal.
    """
    vset = frozenset(vs)
    _require_subset(g, vset)
    cut = {e & vset for e in g.edges}
    cut.discard(frozenset())
    return Hypergraph(vset, frozenset(cut))


def invert(g: Hypergraph, v: str) -> Hypergraph:
    """Vertex inversion: minimalized weak restriction to the other vertices.

    Mirrors substituting 1 for the variable ``v`` in the edge ideal.  A 1-edge
    at ``v`` would substitute to the unit ideal, which has no hypergraph;
    that case raises UnitIdeal.
    """
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v!r} is not in the hypergraph")
    if frozenset((v,)) in g.edges:
        raise UnitIdeal(f"inverting at {v!r} yields the unit ideal (1-edge present)")
    return min_reduce(weak_induced_sub(g, g.vertices - {v}))


def skeleton(g: Hypergraph) -> Hypergraph:
    """The simple graph of all 2-edges, on the same vertex set."""
    return Hypergraph(g.vertices, frozenset(e for e in g.edges if len(e) == 2))


def two_neighbors(g: Hypergraph, v: str) -> frozenset:
    """Neighbors of ``v`` in the skeleton."""
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v!r} is not in the hypergraph")
    out = set()
    for e in g.edges:
        if len(e) == 2 and v in e:
            out.update(e - {v})
    return frozenset(out)


def enlarge_edges(g: Hypergraph, v: str) -> Hypergraph:
    """Add ``v`` to every edge; generally non-minimal."""
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v!r} is not in the hypergraph")
    return Hypergraph(g.vertices, frozenset(e | {v} for e in g.edges))


def edge_components(edges: Iterable[frozenset]) -> list:
    """Connected components of the given edges; each component is a vertex frozenset."""
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for e in edges:
        it = iter(e)
        first = next(it)
        parent.setdefault(first, first)
        for v in it:
            parent.setdefault(v, v)
            union(first, v)
    comps: dict = {}
    for v in parent:
        comps.setdefault(find(v), set()).add(v)
    return [frozenset(c) for c in comps.values()]


def iter_subsets(items: Iterable) -> Iterator[frozenset]:
    """All subsets of ``items`` (including the empty set), deterministic order."""
    pool = sorted(items)
    n = len(pool)
    for mask in range(1 << n):
        yield frozenset(pool[i] for i in range(n) if mask >> i & 1)
