"""Deterministic random instance generators for tests and the self-test suite."""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .hypergraph import Hypergraph, minimal_edge_set
from .ideals import MonomialIdeal
from .nci import is_nci_definitional
from .weighted import WeightedGraph, splay


def _labels(n: int, prefix: str = "x") -> List[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def random_minimal_hypergraph(
    rng: random.Random,
    max_vertices: int,
    max_edges: int = 8,
    allow_isolated: bool = True,
) -> Hypergraph:
    """Random antichain of edges over a random-size vertex set."""
    n = rng.randint(1, max_vertices)
    labels = _labels(n)
    edges = set()
    for _ in range(rng.randint(1, max_edges)):
        size = rng.choice([1, 2, 2, 2, 3, 3, 4])
        size = min(size, n)
        edges.add(frozenset(rng.sample(labels, size)))
    edges = minimal_edge_set(edges)
    if allow_isolated and rng.random() < 0.3:
        vertices = frozenset(labels)
    else:
        vertices = frozenset().union(*edges)
    return Hypergraph(vertices, edges)


def random_squarefree_ideal(
    rng: random.Random, max_vars: int = 8, max_gens: int = 6
) -> MonomialIdeal:
    labels = _labels(rng.randint(1, max_vars))
    gens = set()
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, min(4, len(labels)))
        gens.add(frozenset(rng.sample(labels, size)))
    return MonomialIdeal.from_generators(gens)


def random_ci(
    rng: random.Random,
    max_gens: int = 6,
    max_degree: int = 4,
    max_support: int = 13,
) -> MonomialIdeal:
    """Complete intersection: generators over pairwise disjoint variables."""
    gens = []
    used = 0
    count = rng.randint(1, max_gens)
    for _ in range(count):
        d = rng.randint(1, max_degree)
        if used + d > max_support:
            break
        gens.append(frozenset(_labels(used + d)[used:]))
        used += d
    if not gens:
        gens.append(frozenset(["x1"]))
    return MonomialIdeal.from_generators(gens)


def random_graph(
    rng: random.Random, n: int, p: float = 0.5, ensure_edge: bool = True
) -> Hypergraph:
    labels = _labels(n)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add(frozenset((labels[i], labels[j])))
    if ensure_edge and not edges and n >= 2:
        edges.add(frozenset(labels[:2]))
    return Hypergraph(frozenset(labels), frozenset(edges))


def random_weighted_graph(
    rng: random.Random,
    max_vertices: int = 5,
    max_weight: int = 3,
    p: float = 0.6,
    weight_pool: Optional[Tuple[int, ...]] = None,
) -> WeightedGraph:
    n = rng.randint(1, max_vertices)
    labels = _labels(n, prefix="v")
    pool = weight_pool or tuple(range(1, max_weight + 1))
    weights = {v: rng.choice(pool) for v in labels}
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add(frozenset((labels[i], labels[j])))
    return WeightedGraph.from_weights(weights, edges)


def random_nci(
    rng: random.Random,
    max_support: int = 12,
    require_hyperedge: bool = True,
    max_tries: int = 4000,
) -> MonomialIdeal:
    """Random nearly complete intersection, via splayed weighted graphs.

    Dense small weighted graphs with a heavy vertex splay to NCI candidates
    often enough for rejection sampling; every returned instance is certified
    by the definitional check.
    """
    from .ideals import to_ideal

    for _ in range(max_tries):
        n = rng.randint(2, 5)
        labels = _labels(n, prefix="v")
        weights = {v: rng.choice((1, 1, 1, 3, 3, 4)) for v in labels}
        if require_hyperedge and all(w < 3 for w in weights.values()):
            weights[rng.choice(labels)] = rng.choice((3, 4))
        if sum(weights.values()) > max_support:
            continue
        edges = set()
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.75:
                    edges.add(frozenset((labels[i], labels[j])))
        w = WeightedGraph.from_weights(weights, edges)
        h = splay(w)
        if not h.edges or h.vertices != h.support:
            continue
        if require_hyperedge and not h.hyperedges():
            continue
        if is_nci_definitional(h).status == "NCI":
            return to_ideal(h)
    raise RuntimeError("failed to sample an NCI within the retry budget")
