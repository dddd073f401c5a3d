"""CI/NCI decision procedures by independent routes.

``is_nci_definitional`` is the authoritative semantics: invert at every
vertex and demand a complete intersection each time.  ``is_nci_structural``
reaches the same verdict without inversions, via joinability plus the
forbidden-configuration test on the skeleton.  ``is_nci_graph_miller_stone``
is the graph-only forbidden-configuration route.

Convention for 1-edges: inverting at a vertex carrying a 1-edge yields the
unit ideal, which counts as a complete intersection here (the whole ring,
vacuously resolved).  The exhaustive route-equivalence suite pins this down.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from .errors import BudgetExceeded, Disconnected, TooSmall, UnitIdeal
from .hypergraph import Hypergraph, edge_components, invert
from .weighted import check_joinable


@dataclass(frozen=True)
class NciVerdict:
    status: str  # "CI" | "NCI" | "NEITHER"
    route: str  # "definitional" | "structural" | "miller_stone"
    witness: Optional[dict] = None

    def to_json_dict(self) -> dict:
        return {"status": self.status, "route": self.route, "witness": self.witness}


def is_ci(g: Hypergraph) -> bool:
    """Complete intersection: no vertex lies in two edges."""
    seen: set = set()
    for e in g.edges:
        if e & seen:
            return False
        seen |= e
    return True


def is_nci_definitional(g: Hypergraph) -> NciVerdict:
    """CI if already disjoint; NCI iff every vertex inversion is CI."""
    if is_ci(g):
        return NciVerdict("CI", "definitional")
    for v in sorted(g.vertices):
        try:
            if not is_ci(invert(g, v)):
                return NciVerdict(
                    "NEITHER", "definitional", {"type": "vertex", "vertex": v}
                )
        except UnitIdeal:
            # substituting onto a 1-edge gives the unit ideal: counts as CI
            continue
    return NciVerdict("NCI", "definitional")


def _forbidden_five(vertices: List[str], adj: dict) -> Optional[Tuple[str, ...]]:
    """Search for five vertices certifying a non-NCI graph.

    Needed shape: one of the five is a leaf of their induced subgraph H, and
    H has a spanning tree that is either a path with the leaf at an end, or a
    three-vertex path from the leaf whose far end carries two extra leaves.
    Returns the lexicographically first such 5-tuple, leaf first.
    """
    for combo in combinations(vertices, 5):
        cset = set(combo)
        hedges = []
        deg = dict.fromkeys(combo, 0)
        for x, y in combinations(combo, 2):
            if y in adj[x]:
                hedges.append((x, y))
                deg[x] += 1
                deg[y] += 1
        if len(hedges) < 4:
            continue
        leaves = [v for v in combo if deg[v] == 1]
        if not leaves:
            continue
        # connectivity of H
        stack = [combo[0]]
        seen = {combo[0]}
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in cset and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != 5:
            continue
        for tree in combinations(hedges, 4):
            tdeg = dict.fromkeys(combo, 0)
            for x, y in tree:
                tdeg[x] += 1
                tdeg[y] += 1
            if 0 in tdeg.values():
                continue  # not spanning
            stack = [combo[0]]
            seen = {combo[0]}
            while stack:
                x = stack.pop()
                for a, b in tree:
                    if a == x and b not in seen:
                        seen.add(b)
                        stack.append(b)
                    elif b == x and a not in seen:
                        seen.add(a)
                        stack.append(a)
            if len(seen) != 5:
                continue  # 4 edges spanning 5 vertices + connected = tree
            degs = sorted(tdeg.values())
            for v1 in leaves:
                if tdeg[v1] != 1:
                    continue
                if degs == [1, 1, 2, 2, 2]:
                    return (v1,) + tuple(v for v in combo if v != v1)
                if degs == [1, 1, 1, 2, 3]:
                    nb = next(b if a == v1 else a for a, b in tree if v1 in (a, b))
                    if tdeg[nb] == 2:
                        return (v1,) + tuple(v for v in combo if v != v1)
    return None


def is_nci_graph_miller_stone(g: Hypergraph) -> NciVerdict:
    """Forbidden-configuration route for connected simple graphs (>= 3 vertices).

    A connected graph on >= 3 vertices is never CI, so the verdict is NCI
    unless a forbidden 5-tuple exists.
    """
    if any(len(e) != 2 for e in g.edges):
        raise ValueError("the forbidden-configuration route needs a simple graph")
    if len(g.vertices) < 3:
        raise TooSmall("need at least 3 vertices")
    comps = edge_components(g.edges)
    if len(comps) != 1 or comps[0] != g.vertices:
        raise Disconnected("the forbidden-configuration route needs a connected graph")
    vertices = sorted(g.vertices)
    adj = {v: set() for v in vertices}
    for e in g.edges:
        a, b = e
        adj[a].add(b)
        adj[b].add(a)
    found = _forbidden_five(vertices, adj)
    if found:
        return NciVerdict(
            "NEITHER",
            "miller_stone",
            {"type": "forbidden_subgraph", "vertices": list(found)},
        )
    return NciVerdict("NCI", "miller_stone")


def is_nci_structural(g: Hypergraph) -> NciVerdict:
    """Structural route: joinability plus the skeleton's forbidden-config test.

    Degenerate inputs are routed so the verdict always matches the
    definitional one:

    * isolated vertices: inverting there leaves the non-CI edge structure
      intact, so any non-CI hypergraph with an isolated vertex is NEITHER;
    * 1-edges: harmless (their inversions are unit ideals, which count as
      CI, and they stay disjoint from everything else);
    * several components of edges of size >= 2: inverting inside one
      component cannot fix a conflict in another, so NEITHER.
    """
    if is_ci(g):
        return NciVerdict("CI", "structural")
    isolated = g.vertices - g.support
    if isolated:
        return NciVerdict(
            "NEITHER", "structural", {"type": "vertex", "vertex": min(isolated)}
        )
    report = check_joinable(g)
    if not report.joinable:
        return NciVerdict(
            "NEITHER",
            "structural",
            {"type": "joinability", "violation": report.violations[0]},
        )
    big = [e for e in g.edges if len(e) >= 2]
    comps = edge_components(big)
    if len(comps) > 1:
        # the conflict lives inside one component; any vertex elsewhere witnesses
        conflict_comp = None
        for comp in sorted(comps, key=sorted):
            seen: set = set()
            for e in (f for f in big if f <= comp):
                if e & seen:
                    conflict_comp = comp
                    break
                seen |= e
            if conflict_comp is not None:
                break
        others = sorted(v for comp in comps if comp != conflict_comp for v in comp)
        return NciVerdict(
            "NEITHER", "structural", {"type": "vertex", "vertex": others[0]}
        )
    dvertices = sorted(comps[0])
    adj = {v: set() for v in dvertices}
    for e in big:
        if len(e) == 2:
            a, b = e
            adj[a].add(b)
            adj[b].add(a)
    found = _forbidden_five(dvertices, adj)
    if found:
        return NciVerdict(
            "NEITHER",
            "structural",
            {"type": "forbidden_subgraph", "vertices": list(found)},
        )
    return NciVerdict("NCI", "structural")


def _letters(n: int) -> list:
    return [chr(ord("a") + i) for i in range(n)]


def _antichains(pool: list) -> Iterator[list]:
    """All nonempty antichains from the pool of candidate edges."""
    n = len(pool)

    def rec(start: int, chosen: list) -> Iterator[list]:
        for i in range(start, n):
            e = pool[i]
            if any(e < f or f < e for f in chosen):
                continue
            chosen.append(e)
            yield list(chosen)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def enumerate_small(max_vertices: int) -> Iterator[Hypergraph]:
    """Every minimal hypergraph with at most ``max_vertices`` vertices.

    Labeled enumeration over the fixed vertex sets {a}, {a, b}, ...; edge
    sets are the nonempty antichains of nonempty subsets (so isolated
    vertices do occur).  Beyond 5 vertices only graphs plus at most two
    hyperedges are emitted, to bound the count; above 7 the budget is
    exceeded.
    """
    if max_vertices > 7:
        raise BudgetExceeded("exhaustive enumeration is budgeted to 7 vertices")
    for n in range(1, max_vertices + 1):
        labels = _letters(n)
        vset = frozenset(labels)
        if n <= 5:
            pool = [
                frozenset(c) for k in range(1, n + 1) for c in combinations(labels, k)
            ]
            pool.sort(key=lambda e: (len(e), sorted(e)))
            for chain in _antichains(pool):
                yield Hypergraph(vset, frozenset(chain))
        else:
            two = [frozenset(c) for c in combinations(labels, 2)]
            hyper = [
                frozenset(c) for k in range(3, n + 1) for c in combinations(labels, k)
            ]
            for mask in range(1 << len(two)):
                graph_edges = [two[i] for i in range(len(two)) if mask >> i & 1]
                compatible = [
                    h for h in hyper if not any(e < h for e in graph_edges)
                ]
                if graph_edges:
                    yield Hypergraph(vset, frozenset(graph_edges))
                for i, h1 in enumerate(compatible):
                    yield Hypergraph(vset, frozenset(graph_edges + [h1]))
                    for h2 in compatible[i + 1 :]:
                        if h1 < h2 or h2 < h1:
                            continue
                        yield Hypergraph(vset, frozenset(graph_edges + [h1, h2]))
