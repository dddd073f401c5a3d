"""Built-in consistency suite: route equivalence and oracle cross-checks.

A bounded version of the full test suite, runnable from the CLI; exits
nonzero when any property fails.
"""

from __future__ import annotations

import random
from typing import Callable, List, Tuple

from .betti import IDEAL, betti_table, koszul_table
from .hypergraph import induced_sub, invert, iter_subsets
from .ideals import parse_ideal, to_hypergraph
from .errors import UnitIdeal
from .nci import enumerate_small, is_nci_definitional, is_nci_structural
from .randgen import random_ci, random_minimal_hypergraph

DOUBLE_HUB = (
    "x1*x7, x2*x7, x3*x7, x4*x7, x5*x7, x6*x7, "
    "x1*x8, x2*x8, x3*x8, x4*x8, x5*x8, x6*x8, x7*x8, "
    "x1*x2*x3, x4*x5*x6"
)


def _route_equivalence() -> bool:
    for g in enumerate_small(4):
        if is_nci_definitional(g).status != is_nci_structural(g).status:
            return False
    rng = random.Random(20240817)
    for _ in range(300):
        g = random_minimal_hypergraph(rng, 8)
        if is_nci_definitional(g).status != is_nci_structural(g).status:
            return False
    return True


def _commutation() -> bool:
    for g in enumerate_small(3):
        for vs in iter_subsets(g.vertices):
            for v in sorted(vs):
                try:
                    lhs = invert(induced_sub(g, vs), v)
                except UnitIdeal:
                    lhs = None
                try:
                    rhs = induced_sub(invert(g, v), vs - {v})
                except UnitIdeal:
                    rhs = None
                if lhs != rhs:
                    return False
    return True


def _koszul_oracle() -> bool:
    rng = random.Random(99)
    for _ in range(15):
        ci = random_ci(rng, max_gens=4, max_degree=3, max_support=9)
        if betti_table(ci, IDEAL) != koszul_table(ci.degrees()).as_ideal():
            return False
    return True


def _double_hub_table() -> bool:
    table = betti_table(parse_ideal(DOUBLE_HUB), IDEAL)
    row2 = [table.get(i, i + 2) for i in range(7)]
    row3 = [table.get(i, i + 3) for i in range(3)]
    row5 = [table.get(i, i + 5) for i in range(4)]
    return (
        row2 == [13, 42, 70, 70, 42, 14, 2]
        and row3 == [2, 4, 2]
        and row5 == [0, 1, 2, 1]
    )


def _double_hub_decomposition() -> bool:
    from .splittings import decompose_nci

    report = decompose_nci(parse_ideal(DOUBLE_HUB))
    return report.exact


def run_selftest(verbose: bool = True) -> bool:
    suites: List[Tuple[str, Callable[[], bool]]] = [
        ("route equivalence (exhaustive <=4 vertices + random)", _route_equivalence),
        ("inversion/induced commutation (exhaustive <=3 vertices)", _commutation),
        ("Koszul oracle agreement on random complete intersections", _koszul_oracle),
        ("double-hub Betti table reproduction", _double_hub_table),
        ("double-hub decomposition exactness", _double_hub_decomposition),
    ]
    all_ok = True
    for name, fn in suites:
        ok = fn()
        all_ok = all_ok and ok
        if verbose:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return all_ok
