"""Exact reduced simplicial homology ranks.

Faces are bitmasks over a ground tuple.  Ranks of the boundary maps are
computed exactly: over the rationals by unit-pivot sparse elimination with a
fraction-free dense fallback, or over a prime field when a characteristic is
requested.  The reduced convention includes the empty face, so the complex
{empty} has one unit of homology in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List

from .errors import SchemaError


def _bareiss_rank(rows: List[List[int]]) -> int:
    """Fraction-free elimination rank of a dense integer matrix."""
    m = [row[:] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            fac = m[i][c]
            for j in range(c, ncols):
                m[i][j] = (m[i][j] * piv - fac * m[r][j]) // prev
        prev = piv
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _rank_mod_p(rows: Dict[int, Dict[int, int]], p: int) -> int:
    dense: Dict[int, Dict[int, int]] = {
        r: {c: v % p for c, v in row.items() if v % p} for r, row in rows.items()
    }
    cols: Dict[int, set] = {}
    for r, row in dense.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    rank = 0
    while True:
        pivot = None
        for r, row in dense.items():
            if row:
                c = next(iter(row))
                pivot = (r, c)
                break
        if pivot is None:
            break
        r0, c0 = pivot
        inv = pow(dense[r0][c0], p - 2, p)
        prow = {c: (v * inv) % p for c, v in dense[r0].items()}
        for r in list(cols.get(c0, ())):
            if r == r0 or r not in dense:
                continue
            fac = dense[r].get(c0, 0) % p
            if not fac:
                continue
            row = dense[r]
            for c, v in prow.items():
                nv = (row.get(c, 0) - fac * v) % p
                if nv:
                    row[c] = nv
                    cols.setdefault(c, set()).add(r)
                else:
                    if c in row:
                        del row[c]
                        cols[c].discard(r)
        for c in list(dense[r0]):
            cols[c].discard(r0)
        del dense[r0]
        rank += 1
    return rank


def exact_rank(rows: Dict[int, Dict[int, int]], char: int = 0) -> int:
    """Rank of a sparse integer matrix over Q (char 0) or GF(char).

    Unit pivots (+-1) are eliminated first with pure integer row operations;
    whatever dense core remains goes through fraction-free elimination.
    """
    if char:
        return _rank_mod_p(rows, char)
    work: Dict[int, Dict[int, int]] = {
        r: dict(row) for r, row in rows.items() if row
    }
    cols: Dict[int, set] = {}
    for r, row in work.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    rank = 0
    while True:
        pivot = None
        best_len = None
        for r, row in work.items():
            if best_len is not None and len(row) >= best_len:
                continue
            for c, v in row.items():
                if v == 1 or v == -1:
                    pivot = (r, c, v)
                    best_len = len(row)
                    break
        if pivot is None:
            break
        r0, c0, v0 = pivot
        prow = work[r0]
        for r in list(cols.get(c0, ())):
            if r == r0 or r not in work:
                continue
            fac = work[r].get(c0)
            if not fac:
                continue
            mult = fac * v0  # v0 in {1,-1}: row -= mult * pivot row
            row = work[r]
            for c, v in prow.items():
                nv = row.get(c, 0) - mult * v
                if nv:
                    row[c] = nv
                    cols.setdefault(c, set()).add(r)
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            if not row:
                del work[r]
        for c in list(prow):
            cols[c].discard(r0)
        del work[r0]
        rank += 1
    if work:
        col_ids = sorted({c for row in work.values() for c in row})
        dense = [[row.get(c, 0) for c in col_ids] for row in work.values()]
        rank += _bareiss_rank(dense)
    return rank


def ranks_from_faces(faces_by_dim: List[List[int]], char: int = 0) -> Dict[int, int]:
    """Reduced homology ranks from faces grouped by dimension.

    ``faces_by_dim[k]`` holds the bitmasks of the (k-1)-dimensional faces, so
    index 0 is the empty face, index 1 the vertices, and so on.  Returns
    {dimension: rank} with only nonzero ranks, dimensions starting at -1.
    """
    if not faces_by_dim or faces_by_dim[0] != [0]:
        raise ValueError("the empty face must be present at index 0")
    counts = [len(level) for level in faces_by_dim]
    index: List[Dict[int, int]] = [
        {mask: i for i, mask in enumerate(level)} for level in faces_by_dim
    ]
    boundary_ranks = [0] * (len(faces_by_dim) + 1)
    for k in range(1, len(faces_by_dim)):
        rows: Dict[int, Dict[int, int]] = {}
        lower = index[k - 1]
        for col, mask in enumerate(faces_by_dim[k]):
            sign = 1
            rest = mask
            while rest:
                bit = rest & -rest
                face = mask ^ bit
                rows.setdefault(lower[face], {})[col] = sign
                sign = -sign
                rest ^= bit
        boundary_ranks[k] = exact_rank(rows, char)
    ranks: Dict[int, int] = {}
    for k in range(len(faces_by_dim)):
        h = counts[k] - boundary_ranks[k] - boundary_ranks[k + 1]
        if h:
            ranks[k - 1] = h
    # consistency of the chain bookkeeping
    euler = sum((-1) ** k * counts[k] for k in range(len(counts)))
    heuler = sum((-1) ** (d + 1) * h for d, h in ranks.items())
    if euler != heuler:
        raise AssertionError("reduced Euler characteristic mismatch")
    return ranks


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its facets (downward closure implied)."""

    ground: tuple
    facets: frozenset

    def __post_init__(self):
        gset = set(self.ground)
        if len(gset) != len(self.ground):
            raise ValueError("duplicate ground vertices")
        for f in self.facets:
            if not f <= gset:
                raise ValueError("facet outside the ground set")

    @classmethod
    def from_facets(cls, ground: Iterable[str], facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        return cls(tuple(sorted(ground)), frozenset(frozenset(f) for f in facets))

    @property
    def is_void(self) -> bool:
        """Void complex: no faces at all (not even the empty face)."""
        return not self.facets

    def faces_by_dimension(self) -> List[List[int]]:
        """Faces as bitmasks over the ground order, grouped by dimension + 1."""
        pos = {v: i for i, v in enumerate(self.ground)}
        masks = set()
        for f in self.facets:
            fm = 0
            for v in f:
                fm |= 1 << pos[v]
            masks.add(fm)
        seen = set(masks)
        stack = list(masks)
        while stack:
            m = stack.pop()
            rest = m
            while rest:
                bit = rest & -rest
                sub = m ^ bit
                if sub not in seen:
                    seen.add(sub)
                    stack.append(sub)
                rest ^= bit
        top = max((bin(m).count("1") for m in seen), default=0)
        levels: List[List[int]] = [[] for _ in range(top + 1)]
        for m in seen:
            levels[bin(m).count("1")].append(m)
        for level in levels:
            level.sort()
        return levels

    def reduced_homology_ranks(self, char: int = 0) -> Dict[int, int]:
        if self.is_void:
            return {}
        if char and (char < 2 or any(char % q == 0 for q in range(2, int(char**0.5) + 1))):
            raise SchemaError(f"characteristic must be 0 or a prime, got {char}")
        return ranks_from_faces(self.faces_by_dimension(), char)
