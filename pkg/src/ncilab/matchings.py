"""Matching invariants used to bound regularity, and the hub-of-triangles family.

ind_match maximizes the matching number over induced subgraphs whose
components are single edges or 5-cycles; min_match minimizes it over maximal
such subgraphs (maximal: the untouched vertices induce no edge at all).
These sandwich the regularity of the quotient by an edge ideal.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Dict, FrozenSet, List

from .errors import BudgetExceeded
from .hypergraph import Hypergraph

FAMILY_EDGE_AND_FIVE_CYCLE = frozenset({"K2", "C5"})


def _graph_adjacency(g: Hypergraph) -> Dict[str, set]:
    if any(len(e) != 2 for e in g.edges):
        raise ValueError("expected a simple graph (2-edges only)")
    adj: Dict[str, set] = {v: set() for v in g.vertices}
    for e in g.edges:
        a, b = e
        adj[a].add(b)
        adj[b].add(a)
    return adj


def matching_number(g: Hypergraph) -> int:
    """Maximum matching size by exhaustive search over vertex bitmasks."""
    if len(g.vertices) > 14:
        raise BudgetExceeded("matching is budgeted to 14 vertices")
    adj = _graph_adjacency(g)
    verts = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    nbr_masks = [0] * len(verts)
    for v in verts:
        for u in adj[v]:
            nbr_masks[pos[v]] |= 1 << pos[u]
    memo: Dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        i = low.bit_length() - 1
        value = best(mask ^ low)  # leave vertex i unmatched
        avail = nbr_masks[i] & mask
        while avail:
            ubit = avail & -avail
            value = max(value, 1 + best(mask ^ low ^ ubit))
            avail ^= ubit
        memo[mask] = value
        return value

    return best((1 << len(verts)) - 1)


def _five_cycle_sets(verts: List[str], adj: Dict[str, set]) -> List[FrozenSet[str]]:
    """Vertex 5-sets supporting a cycle through all five (chords allowed)."""
    out = []
    for combo in combinations(verts, 5):
        a = combo[0]
        rest = combo[1:]
        found = False
        seen = set()
        for perm in permutations(rest):
            if perm in seen:
                continue
            seen.add(perm)
            seen.add(tuple(reversed(perm)))
            cycle = (a,) + perm
            if all(cycle[(i + 1) % 5] in adj[cycle[i]] for i in range(5)):
                found = True
                break
        if found:
            out.append(frozenset(combo))
    return out


def _check_family(family) -> None:
    if frozenset(family) != FAMILY_EDGE_AND_FIVE_CYCLE:
        raise ValueError("only the {K2, C5} family is supported")


def ind_match(g: Hypergraph, family=FAMILY_EDGE_AND_FIVE_CYCLE) -> int:
    """Max matching number over induced subgraphs with only K2/C5 components."""
    _check_family(family)
    if len(g.vertices) > 12:
        raise BudgetExceeded("ind_match is budgeted to 12 vertices")
    adj = _graph_adjacency(g)
    verts = sorted(g.vertices)
    best = 0
    for mask in range(1 << len(verts)):
        chosen = [verts[i] for i in range(len(verts)) if mask >> i & 1]
        if not chosen:
            continue
        cset = set(chosen)
        # split the induced subgraph into components and classify each
        seen: set = set()
        value = 0
        ok = True
        for v in chosen:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in adj[x] & cset:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            edges_in = sum(1 for x in comp for y in adj[x] & comp) // 2
            if len(comp) == 2 and edges_in == 1:
                value += 1
            elif len(comp) == 5 and edges_in == 5 and all(
                len(adj[x] & comp) == 2 for x in comp
            ):
                value += 2
            else:
                ok = False
                break
        if ok:
            best = max(best, value)
    return best


def min_match(g: Hypergraph, family=FAMILY_EDGE_AND_FIVE_CYCLE) -> int:
    """Min matching number over maximal K2/C5-subgraphs.

    A subgraph here is a vertex-disjoint packing of single edges and 5-cycles
    of the graph (cycles need not be induced); maximality means the leftover
    vertices form an independent set.
    """
    _check_family(family)
    if len(g.vertices) > 12:
        raise BudgetExceeded("min_match is budgeted to 12 vertices")
    adj = _graph_adjacency(g)
    verts = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    cycles = _five_cycle_sets(verts, adj)
    cycles_at: Dict[str, List[FrozenSet[str]]] = {v: [] for v in verts}
    for c in cycles:
        for v in c:
            cycles_at[v].append(c)
    n = len(verts)
    best: List[int] = [len(verts)]  # upper bound; every packing has value <= n/2

    def rec(idx: int, used: int, excluded: int, value: int):
        if value >= best[0]:
            return
        while idx < n and ((used | excluded) >> idx) & 1:
            idx += 1
        if idx == n:
            best[0] = min(best[0], value)
            return
        v = verts[idx]
        vbit = 1 << idx
        # option: v stays out; its neighborhood must not contain another out-vertex
        if not any((excluded >> pos[u]) & 1 for u in adj[v]):
            rec(idx + 1, used, excluded | vbit, value)
        # option: v matched along an edge
        for u in sorted(adj[v]):
            ubit = 1 << pos[u]
            if used & ubit or excluded & ubit:
                continue
            rec(idx + 1, used | vbit | ubit, excluded, value + 1)
        # option: v absorbed into a 5-cycle
        for cyc in cycles_at[v]:
            cmask = 0
            for x in cyc:
                cmask |= 1 << pos[x]
            if cmask & (used | excluded):
                continue
            rec(idx + 1, used | cmask, excluded, value + 2)

    rec(0, 0, 0, 0)
    return best[0]


def gn_family(n: int) -> Hypergraph:
    """Hub vertex joined to n disjoint edges: 2n+1 vertices, 3n edges."""
    if n < 1:
        raise ValueError("n must be positive")
    edges = []
    for i in range(1, n + 1):
        a, b = f"a{i}", f"b{i}"
        edges.append(("c", a))
        edges.append(("c", b))
        edges.append((a, b))
    return Hypergraph.from_edges(edges)
