"""Graded Betti tables of squarefree monomial ideals, computed exactly.

The homology oracle walks every subset of the support, builds the
independence complex restricted to that subset, and accumulates reduced
homology ranks: a subset S of size j contributes its rank in degree
j - i - 1 to the quotient-subject entry (i, j).  Subsets in which some
vertex is covered by no fully-contained generator are cones and are skipped.

Tables exist in two subjects related by an offset: entry (i, j) of the ideal
table equals entry (i+1, j) of the quotient table, and the quotient table
additionally carries the unit at (0, 0).
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import BudgetExceeded, EmptyTable, SchemaError
from .homology import ranks_from_faces
from .ideals import MonomialIdeal

IDEAL = "IDEAL"
QUOTIENT = "QUOTIENT"

DEFAULT_MAX_VARS = 16


def max_vars_budget() -> int:
    raw = os.environ.get("NCILAB_MAX_VARS", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_VARS
    except ValueError:
        return DEFAULT_MAX_VARS


@dataclass(frozen=True)
class BettiTable:
    subject: str
    entries: dict = field(default_factory=dict)  # (i, j) -> positive int

    def __post_init__(self):
        if self.subject not in (IDEAL, QUOTIENT):
            raise ValueError(f"unknown subject {self.subject!r}")
        for (i, j), v in self.entries.items():
            if v <= 0:
                raise ValueError("table entries must be positive")
            if i < 0 or j < 0:
                raise ValueError("table indices must be nonnegative")

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.subject == other.subject and self.entries == other.entries

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def as_quotient(self) -> "BettiTable":
        if self.subject == QUOTIENT:
            return self
        shifted = {(i + 1, j): v for (i, j), v in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(QUOTIENT, shifted)

    def as_ideal(self) -> "BettiTable":
        if self.subject == IDEAL:
            return self
        if self.get(0, 0) != 1:
            raise ValueError("quotient table must have a unit at (0, 0)")
        shifted = {
            (i - 1, j): v for (i, j), v in self.entries.items() if (i, j) != (0, 0)
        }
        if any(i < 0 for i, _ in shifted):
            raise ValueError("quotient table has entries at homological degree 0")
        return BettiTable(IDEAL, shifted)

    def as_subject(self, subject: str) -> "BettiTable":
        return self.as_ideal() if subject == IDEAL else self.as_quotient()

    def __add__(self, other: "BettiTable") -> "BettiTable":
        if self.subject != other.subject:
            raise ValueError("cannot add tables with different subjects")
        total = Counter(self.entries)
        total.update(other.entries)
        return BettiTable(self.subject, dict(total))

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "entries": [
                {"i": i, "j": j, "beta": v}
                for (i, j), v in sorted(self.entries.items())
            ],
        }

    def __repr__(self):
        cells = ", ".join(f"({i},{j}):{v}" for (i, j), v in sorted(self.entries.items()))
        return f"BettiTable({self.subject}, {{{cells}}})"


def pdim(t: BettiTable) -> int:
    """Largest homological degree with a nonzero entry."""
    if not t.entries:
        raise EmptyTable("empty Betti table")
    return max(i for i, _ in t.entries)


def reg(t: BettiTable) -> int:
    """Largest j - i over the nonzero entries (regularity of the table's subject)."""
    if not t.entries:
        raise EmptyTable("empty Betti table")
    return max(j - i for i, j in t.entries)


def shift_by_degree(t: BettiTable, d: int) -> BettiTable:
    """Shift every internal degree by ``d`` (multiplying by a degree-d monomial)."""
    if d == 0:
        return t
    return BettiTable(t.subject, {(i, j + d): v for (i, j), v in t.entries.items()})


def shift_homological(t: BettiTable, k: int = 1) -> BettiTable:
    """Shift every homological degree by ``k`` (mapping-cone placement)."""
    if k == 0:
        return t
    return BettiTable(t.subject, {(i + k, j): v for (i, j), v in t.entries.items()})


def koszul_table(degrees: Iterable[int]) -> BettiTable:
    """Quotient-subject table of a complete intersection with these generator degrees.

    Expand the product of (1 + t*u^d) over the degrees: entry (i, j) counts
    the i-subsets of degrees summing to j.  Column sums are binomials.
    """
    entries: Counter = Counter({(0, 0): 1})
    for d in degrees:
        if d < 1:
            raise ValueError("generator degrees must be positive")
        new = Counter(entries)
        for (i, j), v in entries.items():
            new[(i + 1, j + d)] += v
        entries = new
    return BettiTable(QUOTIENT, dict(entries))


def principal_table(d: int) -> BettiTable:
    """Quotient-subject table of a principal ideal generated in degree ``d``."""
    if d < 1:
        raise ValueError("degree must be positive")
    return BettiTable(QUOTIENT, {(0, 0): 1, (1, d): 1})


def _independence_faces(sigma_bits: List[int], edges_at: Dict[int, List[int]], nbits: int) -> List[List[int]]:
    """Faces of the independence complex inside sigma, grouped by cardinality."""
    levels: List[List[int]] = [[0]]

    def rec(mask: int, start: int, size: int):
        for idx in range(start, len(sigma_bits)):
            bit = sigma_bits[idx]
            new = mask | bit
            blocked = False
            for em in edges_at.get(bit, ()):
                if em & new == em:
                    blocked = True
                    break
            if blocked:
                continue
            while len(levels) <= size + 1:
                levels.append([])
            levels[size + 1].append(new)
            rec(new, idx + 1, size + 1)

    rec(0, 0, 0)
    for level in levels:
        level.sort()
    return levels


def hochster_scan(
    ideal: MonomialIdeal,
    char: int = 0,
    max_vars: Optional[int] = None,
) -> Tuple[Dict[Tuple[int, int], int], Dict[str, int]]:
    """Quotient-subject Betti entries plus deterministic work counters."""
    if char:
        if char < 2 or any(char % q == 0 for q in range(2, int(char**0.5) + 1)):
            raise SchemaError(f"characteristic must be 0 or a prime, got {char}")
    support = sorted(ideal.support)
    n = len(support)
    budget = max_vars if max_vars is not None else max_vars_budget()
    if n > budget:
        raise BudgetExceeded(
            f"support has {n} variables, exceeding the budget of {budget}"
        )
    pos = {v: k for k, v in enumerate(support)}
    edge_masks = []
    for gen in ideal.generators:
        m = 0
        for v in gen:
            m |= 1 << pos[v]
        edge_masks.append(m)
    edges_at: Dict[int, List[int]] = {}
    for em in edge_masks:
        rest = em
        while rest:
            bit = rest & -rest
            edges_at.setdefault(bit, []).append(em)
            rest ^= bit
    entries: Counter = Counter()
    examined = 0
    computed = 0
    for sigma in range(1 << n):
        examined += 1
        covered = 0
        for em in edge_masks:
            if em & sigma == em:
                covered |= em
        if covered != sigma:
            continue  # some vertex is a cone apex: no reduced homology
        computed += 1
        size = bin(sigma).count("1")
        sigma_bits = []
        rest = sigma
        while rest:
            bit = rest & -rest
            sigma_bits.append(bit)
            rest ^= bit
        faces = _independence_faces(sigma_bits, edges_at, n)
        for d, h in ranks_from_faces(faces, char).items():
            entries[(size - d - 1, size)] += h
    stats = {"subsets_examined": examined, "homology_computations": computed}
    return dict(entries), stats


def betti_table(
    ideal: MonomialIdeal,
    subject: str = IDEAL,
    char: int = 0,
    max_vars: Optional[int] = None,
) -> BettiTable:
    """Exact graded Betti table of a squarefree monomial ideal."""
    entries, _ = hochster_scan(ideal, char=char, max_vars=max_vars)
    table = BettiTable(QUOTIENT, entries)
    return table.as_subject(subject)


def render_betti(t: BettiTable) -> str:
    """Aligned text matrix; zeros print as "-".

    Ideal-subject rows are indexed by j - i - 2 (degree-2 generators on row
    0); quotient-subject rows by j - i.
    """
    if not t.entries:
        return "(empty table)"
    offset = 2 if t.subject == IDEAL else 0
    offset = min([offset] + [j - i for i, j in t.entries])
    cols = max(i for i, _ in t.entries) + 1
    rows = max(j - i - offset for i, j in t.entries) + 1
    grid = [["-"] * cols for _ in range(rows)]
    for (i, j), v in t.entries.items():
        grid[j - i - offset][i] = str(v)
    widths = [max(len(grid[r][c]) for r in range(rows)) for c in range(cols)]
    lines = []
    for r in range(rows):
        lines.append("  ".join(grid[r][c].rjust(widths[c]) for c in range(cols)))
    return "\n".join(lines)
