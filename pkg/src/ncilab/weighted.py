"""Vertex-weighted graphs and the join/splay correspondence.

A joinable hypergraph (disjoint hyperedges whose members share one 2-neighbor
set) collapses to a vertex-weighted simple graph: each hyperedge becomes a
single vertex weighted by its cardinality.  Splay is the inverse expansion.
The correspondence is bijective away from weight-2 vertices, which splay to a
plain edge pair that join cannot re-collapse.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .errors import NotAHyperedge, NotJoinable, SchemaError
from .hypergraph import Hypergraph, two_neighbors


@dataclass(frozen=True)
class WeightedGraph:
    """Simple graph with positive integer vertex weights."""

    weights: tuple  # sorted ((label, weight), ...)
    edges: frozenset  # frozenset of 2-element frozensets

    def __post_init__(self):
        labels = [v for v, _ in self.weights]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex labels")
        for v, w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of {v!r} must be a positive integer")
        vs = set(labels)
        for e in self.edges:
            if len(e) != 2:
                raise ValueError("edges must join two distinct vertices")
            if not e <= vs:
                raise ValueError(f"edge {sorted(e)} references unknown vertices")

    @classmethod
    def from_weights(cls, weights: Dict[str, int], edges: Iterable[Iterable[str]]) -> "WeightedGraph":
        ws = tuple(sorted(weights.items()))
        es = frozenset(frozenset(e) for e in edges)
        return cls(ws, es)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for v, _ in self.weights)

    def weight_of(self, v: str) -> int:
        for u, w in self.weights:
            if u == v:
                return w
        raise KeyError(v)

    def weight_map(self) -> dict:
        return dict(self.weights)

    def neighbors(self, v: str) -> frozenset:
        return frozenset(u for e in self.edges if v in e for u in e - {v})

    def induced(self, vs: Iterable[str]) -> "WeightedGraph":
        keep = frozenset(vs)
        ws = tuple((v, w) for v, w in self.weights if v in keep)
        es = frozenset(e for e in self.edges if e <= keep)
        return WeightedGraph(ws, es)

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"label": v, "weight": w} for v, w in self.weights],
            "edges": sorted(sorted(e) for e in self.edges),
        }

    @classmethod
    def from_json_dict(cls, obj) -> "WeightedGraph":
        if not isinstance(obj, dict):
            raise SchemaError("weighted graph JSON must be an object")
        verts = obj.get("vertices")
        edges = obj.get("edges")
        if not isinstance(verts, list):
            raise SchemaError('"vertices" must be a list of {label, weight} objects')
        weights: Dict[str, int] = {}
        for item in verts:
            if not isinstance(item, dict) or "label" not in item:
                raise SchemaError("each vertex needs a label")
            label = item["label"]
            weight = item.get("weight", 1)
            if not isinstance(label, str) or not label:
                raise SchemaError("vertex labels must be nonempty strings")
            if not isinstance(weight, int) or isinstance(weight, bool) or weight < 1:
                raise SchemaError(f"weight of {label!r} must be a positive integer")
            if label in weights:
                raise SchemaError(f"duplicate vertex label {label!r}")
            weights[label] = weight
        if not isinstance(edges, list):
            raise SchemaError('"edges" must be a list of label pairs')
        es = set()
        for e in edges:
            if not isinstance(e, list) or len(e) != 2 or e[0] == e[1]:
                raise SchemaError("each edge must be a pair of distinct labels")
            if e[0] not in weights or e[1] not in weights:
                raise SchemaError(f"edge {e} references unknown vertices")
            es.add(frozenset(e))
        return cls.from_weights(weights, es)


@dataclass(frozen=True)
class JoinabilityReport:
    """Outcome of the two joinability tests, with minimal witnesses."""

    joinable: bool
    violations: tuple  # of dicts: {"rule": "J1"|"J2", ...}

    def to_json_dict(self) -> dict:
        return {"joinable": self.joinable, "violations": list(self.violations)}


def check_joinable(g: Hypergraph) -> JoinabilityReport:
    """J1: hyperedges pairwise disjoint.  J2: hyperedge members share 2-neighbors."""
    violations: List[dict] = []
    hyper = g.hyperedges()
    for e1, e2 in combinations(hyper, 2):
        if e1 & e2:
            violations.append({"rule": "J1", "edges": [sorted(e1), sorted(e2)]})
    for e in hyper:
        members = sorted(e)
        base = two_neighbors(g, members[0])
        for v in members[1:]:
            if two_neighbors(g, v) != base:
                violations.append(
                    {"rule": "J2", "edge": members, "vertices": [members[0], v]}
                )
                break
    return JoinabilityReport(not violations, tuple(violations))


def _fresh_label(base: str, taken: frozenset) -> str:
    label = base
    while label in taken:
        label += "'"
    return label


def join_at(g: Hypergraph, h: Iterable[str]) -> Hypergraph:
    """Collapse the hyperedge ``h`` to a single fresh vertex.

    The fresh vertex is adjacent to exactly the common 2-neighbors of all of
    ``h``; everything not meeting ``h`` is preserved.
    """
    hset = frozenset(h)
    if hset not in g.edges or len(hset) < 3:
        raise NotAHyperedge(f"{sorted(hset)} is not a hyperedge of the hypergraph")
    report = check_joinable(g)
    if not report.joinable:
        raise NotJoinable(f"hypergraph is not joinable: {report.violations[0]}")
    rest = g.vertices - hset
    v = _fresh_label("+".join(sorted(hset)), rest)
    common = frozenset.intersection(*(two_neighbors(g, x) for x in hset))
    edges = set()
    for e in g.edges:
        if e == hset:
            continue
        if e & hset:
            # joinable => only 2-edges {x, w} with x in h can meet h
            continue
        edges.add(e)
    for w in common:
        edges.add(frozenset((v, w)))
    return Hypergraph(rest | {v}, frozenset(edges))


def join_all(g: Hypergraph) -> WeightedGraph:
    """Collapse every hyperedge, recording its cardinality as the vertex weight.

    The hyperedge order does not affect the result up to isomorphism.  The
    input may not contain 1-edges (a weighted graph cannot represent them).
    """
    if any(len(e) == 1 for e in g.edges):
        raise NotJoinable("hypergraphs with 1-edges have no weighted-graph form")
    report = check_joinable(g)
    if not report.joinable:
        raise NotJoinable(f"hypergraph is not joinable: {report.violations[0]}")
    weights: Dict[str, int] = {}
    current = g
    while True:
        hyper = current.hyperedges()
        if not hyper:
            break
        h = hyper[0]
        joined = join_at(current, h)
        fresh = next(iter(joined.vertices - current.vertices))
        weights[fresh] = len(h)
        current = joined
    wmap = {v: weights.get(v, 1) for v in current.vertices}
    return WeightedGraph.from_weights(wmap, current.edges)


def splay(w: WeightedGraph) -> Hypergraph:
    """Expand each vertex of weight n > 1 into an n-clique-free group.

    The group members inherit all neighbors and are tied together by one
    n-edge.  Weight-1 vertices pass through unchanged.
    """
    taken = set(w.vertices)
    members: Dict[str, List[str]] = {}
    for v, wt in w.weights:
        if wt == 1:
            members[v] = [v]
        else:
            group = []
            for k in range(1, wt + 1):
                label = _fresh_label(f"{v}_{k}", frozenset(taken))
                taken.add(label)
                group.append(label)
            members[v] = group
    edges = set()
    for v, wt in w.weights:
        if wt > 1:
            edges.add(frozenset(members[v]))
    for e in w.edges:
        a, b = sorted(e)
        for ma in members[a]:
            for mb in members[b]:
                edges.add(frozenset((ma, mb)))
    vertices = frozenset(x for group in members.values() for x in group)
    return Hypergraph(vertices, frozenset(edges))


def splay_with_sources(w: WeightedGraph) -> Tuple[Hypergraph, dict]:
    """Splay plus the member -> weighted-source-vertex map (for witness reporting)."""
    h = splay(w)
    sources = {}
    for v, wt in w.weights:
        if wt == 1:
            sources[v] = v
    for member in h.vertices:
        if member not in sources:
            base = member.rsplit("_", 1)[0]
            sources[member] = base
    return h, sources


def _components(w: WeightedGraph) -> List[frozenset]:
    seen: set = set()
    comps = []
    adj = {v: w.neighbors(v) for v in w.vertices}
    for v in sorted(w.vertices):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_ci_weighted(w: WeightedGraph) -> bool:
    """True iff every component is an isolated vertex or a weight-1--weight-1 edge."""
    wmap = w.weight_map()
    for comp in _components(w):
        if len(comp) == 1:
            continue
        if len(comp) == 2:
            a, b = sorted(comp)
            if frozenset((a, b)) in w.edges and wmap[a] == wmap[b] == 1:
                continue
        return False
    return True


def is_nci_weighted(w: WeightedGraph) -> bool:
    """Weighted NCI criterion, equivalent to the splayed definitional check.

    Inverting the splayed hypergraph at any member of a vertex ``v`` turns all
    members of neighboring groups into 1-edges, which wipe out everything they
    touch; what survives is the splay of the graph induced away from the
    closed neighborhood of ``v``.  So the splay is NCI exactly when the graph
    is not already CI-weighted and each closed-neighborhood complement is.
    """
    if is_ci_weighted(w):
        return False
    for v in sorted(w.vertices):
        rest = w.vertices - w.neighbors(v) - {v}
        if not is_ci_weighted(w.induced(rest)):
            return False
    return True


def weighted_isomorphic(a: WeightedGraph, b: WeightedGraph) -> bool:
    """Brute-force weight- and adjacency-preserving bijection search."""
    if len(a.weights) != len(b.weights):
        return False
    akey = sorted((wt, len(a.neighbors(v))) for v, wt in a.weights)
    bkey = sorted((wt, len(b.neighbors(v))) for v, wt in b.weights)
    if akey != bkey or len(a.edges) != len(b.edges):
        return False
    averts = sorted(a.vertices)
    bverts = sorted(b.vertices)
    awt, bwt = a.weight_map(), b.weight_map()
    aadj = {v: a.neighbors(v) for v in averts}
    badj = {v: b.neighbors(v) for v in bverts}

    mapping: Dict[str, str] = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(averts):
            return True
        x = averts[i]
        for y in bverts:
            if y in used or awt[x] != bwt[y] or len(aadj[x]) != len(badj[y]):
                continue
            ok = True
            for px, py in mapping.items():
                if (px in aadj[x]) != (py in badj[y]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del mapping[x]
            used.remove(y)
        return False

    return extend(0)
