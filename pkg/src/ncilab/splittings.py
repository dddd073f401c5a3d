"""Betti splittings of nearly complete intersections.

Splitting a generator ``h`` of degree >= 3 off an NCI decomposes the Betti
table as beta(I) = beta(K) + beta((h)) + beta(K cap (h)) shifted up one
homological degree.  The intersection always factors as h times a complete
intersection, so iterating over all hyperedges reduces everything to the
degree-2 part plus closed-form Koszul blocks.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from .betti import (
    IDEAL,
    BettiTable,
    betti_table,
    koszul_table,
    pdim,
    principal_table,
    shift_by_degree,
    shift_homological,
)
from .errors import DegreeTooLow, NotNci, UnitIdeal
from .hypergraph import Hypergraph, invert, minimal_edge_set
from .ideals import MonomialIdeal, substitute_one, to_hypergraph
from .nci import is_ci, is_nci_definitional
from .weighted import join_at

DEFAULT_MAX_SUBSETS = 1 << 16
RANDOM_SUBSET_SAMPLES = 10_000


def max_subsets_budget() -> int:
    raw = os.environ.get("NCILAB_MAX_SUBSETS", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_SUBSETS
    except ValueError:
        return DEFAULT_MAX_SUBSETS


def intersect_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection of squarefree monomial ideals: minimalized pairwise lcms."""
    gens = {x | y for x in a.generators for y in b.generators}
    return MonomialIdeal.from_generators(minimal_edge_set(gens))


@dataclass(frozen=True)
class SplittingFunction:
    """Assignment w -> (phi(w), psi(w)) on the intersection's minimal generators."""

    assignments: tuple  # sorted ((w, phi, psi), ...) of frozensets

    @classmethod
    def from_mapping(cls, mapping: Dict[frozenset, Tuple[frozenset, frozenset]]) -> "SplittingFunction":
        rows = tuple(
            sorted(
                ((w, p, q) for w, (p, q) in mapping.items()),
                key=lambda row: sorted(row[0]),
            )
        )
        return cls(rows)

    @property
    def domain(self) -> frozenset:
        return frozenset(w for w, _, _ in self.assignments)

    def phi(self, w: frozenset) -> frozenset:
        for ww, p, _ in self.assignments:
            if ww == w:
                return p
        raise KeyError(sorted(w))

    def psi(self, w: frozenset) -> frozenset:
        for ww, _, q in self.assignments:
            if ww == w:
                return q
        raise KeyError(sorted(w))


def canonical_splitting_function(h: Iterable[str], k: MonomialIdeal) -> SplittingFunction:
    """The standard function for the split (h) + K: phi is constantly h.

    For an intersection generator h*e with e a generator of K, psi is e; for
    h*y with y a common neighbor of h, psi is x*y for the smallest x in h.
    """
    hset = frozenset(h)
    principal = MonomialIdeal.from_generators([hset])
    inter = intersect_ideals(principal, k)
    x = min(hset)
    mapping: Dict[frozenset, Tuple[frozenset, frozenset]] = {}
    for w in inter.generators:
        rest = w - hset
        if rest in k.generators:
            mapping[w] = (hset, rest)
        elif len(rest) == 1:
            (y,) = rest
            cand = frozenset((x, y))
            if cand not in k.generators:
                cand = next(
                    (
                        frozenset((xx, y))
                        for xx in sorted(hset)
                        if frozenset((xx, y)) in k.generators
                    ),
                    None,
                )
            if cand is None:
                raise NotNci(
                    f"no edge from {sorted(hset)} to {y!r} generates the remainder"
                )
            mapping[w] = (hset, cand)
        else:
            raise NotNci(
                f"intersection generator {sorted(w)} has neither expected form"
            )
    return SplittingFunction.from_mapping(mapping)


@dataclass(frozen=True)
class SplittingCheck:
    ok: bool
    mode: str  # "exhaustive" | "sampled"
    failure: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok


def _strictly_divides(a: frozenset, b: frozenset) -> bool:
    return a <= b and a != b


def verify_splitting(
    j: MonomialIdeal,
    k: MonomialIdeal,
    f: SplittingFunction,
    max_subsets: Optional[int] = None,
) -> SplittingCheck:
    """Check the two lcm conditions of a splitting function.

    The second condition quantifies over every nonempty subset of the
    intersection's minimal generators; past the subset budget we fall back to
    all singletons and pairs plus a deterministic random sample, and say so
    in the returned mode.
    """
    if j.generators & k.generators:
        raise ValueError("generator sets must be disjoint")
    union = j.generators | k.generators
    if minimal_edge_set(union) != union:
        raise ValueError("generators of the two parts must stay minimal together")
    inter = intersect_ideals(j, k)
    gens = sorted(inter.generators, key=sorted)
    if f.domain != frozenset(gens):
        raise ValueError("splitting function domain must be the intersection generators")
    for w in gens:
        p, q = f.phi(w), f.psi(w)
        if p not in j.generators or q not in k.generators:
            raise ValueError("splitting function must map into the two generator sets")
        if p | q != w:
            return SplittingCheck(
                False, "exhaustive", {"condition": "S1", "generator": sorted(w)}
            )

    def s2_holds(subset: Tuple[frozenset, ...]) -> bool:
        total = frozenset().union(*subset)
        lphi = frozenset().union(*(f.phi(w) for w in subset))
        lpsi = frozenset().union(*(f.psi(w) for w in subset))
        return _strictly_divides(lphi, total) and _strictly_divides(lpsi, total)

    cap = max_subsets if max_subsets is not None else max_subsets_budget()
    n = len(gens)
    if n == 0:
        return SplittingCheck(True, "exhaustive")
    if (1 << n) <= cap:
        for size in range(1, n + 1):
            for subset in combinations(gens, size):
                if not s2_holds(subset):
                    return SplittingCheck(
                        False,
                        "exhaustive",
                        {"condition": "S2", "subset": [sorted(w) for w in subset]},
                    )
        return SplittingCheck(True, "exhaustive")
    for size in (1, 2):
        for subset in combinations(gens, size):
            if not s2_holds(subset):
                return SplittingCheck(
                    False,
                    "sampled",
                    {"condition": "S2", "subset": [sorted(w) for w in subset]},
                )
    rng = random.Random(0x5EED)
    for _ in range(RANDOM_SUBSET_SAMPLES):
        size = rng.randint(1, n)
        subset = tuple(rng.sample(gens, size))
        if not s2_holds(subset):
            return SplittingCheck(
                False,
                "sampled",
                {"condition": "S2", "subset": [sorted(w) for w in subset]},
            )
    return SplittingCheck(True, "sampled")


def verify_betti_splitting(
    j: MonomialIdeal,
    k: MonomialIdeal,
    char: int = 0,
    max_vars: Optional[int] = None,
) -> bool:
    """Check the table identity beta(I) = beta(J) + beta(K) + beta(J cap K) shifted."""
    if j.generators & k.generators:
        raise ValueError("generator sets must be disjoint")
    union = j.generators | k.generators
    if minimal_edge_set(union) != union:
        raise ValueError("generators of the two parts must stay minimal together")
    total = MonomialIdeal.from_generators(union)
    kwargs = {"char": char, "max_vars": max_vars}
    t_total = betti_table(total, IDEAL, **kwargs)
    t_j = betti_table(j, IDEAL, **kwargs)
    t_k = betti_table(k, IDEAL, **kwargs)
    t_int = betti_table(intersect_ideals(j, k), IDEAL, **kwargs)
    assembled = t_j + t_k + shift_homological(t_int, 1)
    return assembled == t_total


def intersect_principal(k: MonomialIdeal, h: Iterable[str]) -> Tuple[MonomialIdeal, frozenset]:
    """Factor (h) cap K as h * J with J a complete intersection.

    Computed two independent ways that must agree: dividing h out of the
    pairwise lcms, and collapsing h in the hypergraph of K + (h) and then
    inverting at the collapsed vertex.
    """
    hset = frozenset(h)
    if len(hset) < 3:
        raise DegreeTooLow("the split-off generator must have degree at least 3")
    total = MonomialIdeal.from_generators(set(k.generators) | {hset})
    if hset not in total.generators or len(total.generators) != len(k.generators) + 1:
        raise ValueError("h must be a new minimal generator alongside K")
    if is_nci_definitional(to_hypergraph(total)).status != "NCI":
        raise NotNci("K + (h) must be a nearly complete intersection")
    cofactor = MonomialIdeal.from_generators(
        minimal_edge_set(g - hset for g in k.generators)
    )
    if not is_ci(to_hypergraph(cofactor)):
        raise AssertionError("intersection cofactor is not a complete intersection")
    g_total = to_hypergraph(total)
    joined = join_at(g_total, hset)
    fresh = next(iter(joined.vertices - g_total.vertices))
    collapsed = invert(joined, fresh)
    if collapsed.edges != cofactor.generators:
        raise AssertionError("lcm route and join/invert route disagree")
    return cofactor, hset


@dataclass(frozen=True)
class DecompositionReport:
    """Betti table of an NCI as skeleton + principal + shifted Koszul blocks."""

    hyperedge_order: tuple  # sorted label tuples
    skeleton_ideal: MonomialIdeal
    skeleton_table: BettiTable
    principal_tables: tuple  # ((hyperedge, BettiTable), ...)
    intersection_cofactors: tuple  # ((hyperedge, MonomialIdeal), ...)
    intersection_tables: tuple  # ((hyperedge, BettiTable), ...) fully shifted
    assembled: BettiTable
    oracle: BettiTable

    @property
    def exact(self) -> bool:
        return self.assembled == self.oracle

    def to_json_dict(self) -> dict:
        return {
            "hyperedges": [list(h) for h in self.hyperedge_order],
            "skeleton": {
                "ideal": self.skeleton_ideal.render(),
                "table": self.skeleton_table.to_json_dict(),
            },
            "principal": [
                {"hyperedge": list(h), "table": t.to_json_dict()}
                for h, t in self.principal_tables
            ],
            "intersections": [
                {
                    "hyperedge": list(h),
                    "cofactor": c.render(),
                    "table": t.to_json_dict(),
                }
                for (h, c), (_, t) in zip(
                    self.intersection_cofactors, self.intersection_tables
                )
            ],
            "assembled": self.assembled.to_json_dict(),
            "exact": self.exact,
        }


def decompose_nci(
    ideal: MonomialIdeal,
    char: int = 0,
    max_vars: Optional[int] = None,
) -> DecompositionReport:
    """Peel hyperedges off an NCI one at a time and assemble the Betti table.

    Hyperedges are processed in canonical order (size, then labels).  The
    assembled table is verified against the homology oracle; a mismatch is an
    internal consistency failure.
    """
    g = to_hypergraph(ideal)
    if is_nci_definitional(g).status != "NCI":
        raise NotNci("input is not a nearly complete intersection")
    hyper = g.hyperedges()
    remaining = set(ideal.generators)
    principals: List[Tuple[tuple, BettiTable]] = []
    cofactors: List[Tuple[tuple, MonomialIdeal]] = []
    shifted_tables: List[Tuple[tuple, BettiTable]] = []
    for h in hyper:
        remaining.discard(h)
        k_ideal = MonomialIdeal.from_generators(remaining)
        cofactor, _ = intersect_principal(k_ideal, h)
        koszul = koszul_table(cofactor.degrees()).as_ideal()
        shifted = shift_homological(shift_by_degree(koszul, len(h)), 1)
        label = tuple(sorted(h))
        principals.append((label, principal_table(len(h)).as_ideal()))
        cofactors.append((label, cofactor))
        shifted_tables.append((label, shifted))
    skeleton_ideal = MonomialIdeal.from_generators(remaining)
    skeleton_tab = betti_table(skeleton_ideal, IDEAL, char=char, max_vars=max_vars)
    assembled = skeleton_tab
    for _, t in principals:
        assembled = assembled + t
    for _, t in shifted_tables:
        assembled = assembled + t
    oracle = betti_table(ideal, IDEAL, char=char, max_vars=max_vars)
    report = DecompositionReport(
        hyperedge_order=tuple(tuple(sorted(h)) for h in hyper),
        skeleton_ideal=skeleton_ideal,
        skeleton_table=skeleton_tab,
        principal_tables=tuple(principals),
        intersection_cofactors=tuple(cofactors),
        intersection_tables=tuple(shifted_tables),
        assembled=assembled,
        oracle=oracle,
    )
    if not report.exact:
        raise AssertionError("assembled decomposition disagrees with the oracle table")
    return report


@dataclass(frozen=True)
class PdimSplittingReport:
    """pdim accounting for one hyperedge splitting (ideal-subject pdims)."""

    pdim_total: int
    pdim_k: int
    pdim_intersection: int
    bound_ok: bool
    max_formula_ok: bool
    substitution_strict: tuple  # ((variable, bool), ...) pdim K(x=1) < pdim K

    def __bool__(self) -> bool:
        return self.bound_ok and self.max_formula_ok


def pdim_splitting_bound(
    k: MonomialIdeal,
    h: Iterable[str],
    char: int = 0,
    max_vars: Optional[int] = None,
    tables: Optional[Dict[str, BettiTable]] = None,
) -> PdimSplittingReport:
    """Check pdim(I) <= pdim(K) + 1 and the splitting max-formula.

    Also records, per variable of ``h`` in K's support, whether the
    substituted ideal's pdim strictly drops; that is an observed statistic,
    never an assertion.  Precomputed ideal-subject tables for keys "total",
    "k", "intersection" may be supplied to avoid recomputation.
    """
    hset = frozenset(h)
    cofactor, _ = intersect_principal(k, hset)
    tables = tables or {}
    kwargs = {"char": char, "max_vars": max_vars}
    total = MonomialIdeal.from_generators(set(k.generators) | {hset})
    t_total = tables.get("total") or betti_table(total, IDEAL, **kwargs)
    t_k = tables.get("k") or betti_table(k, IDEAL, **kwargs)
    t_int = tables.get("intersection") or betti_table(
        intersect_ideals(MonomialIdeal.from_generators([hset]), k), IDEAL, **kwargs
    )
    p_total, p_k, p_int = pdim(t_total), pdim(t_k), pdim(t_int)
    bound_ok = p_total <= p_k + 1
    max_formula_ok = p_total == max(p_k, 0, p_int + 1)
    strict: List[Tuple[str, bool]] = []
    for x in sorted(hset & k.support):
        try:
            sub = substitute_one(k, x)
        except UnitIdeal:
            continue
        if sub.is_zero:
            continue
        strict.append((x, pdim(betti_table(sub, IDEAL, **kwargs)) < p_k))
    return PdimSplittingReport(
        pdim_total=p_total,
        pdim_k=p_k,
        pdim_intersection=p_int,
        bound_ok=bound_ok,
        max_formula_ok=max_formula_ok,
        substitution_strict=tuple(strict),
    )
