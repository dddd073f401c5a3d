"""Squarefree monomial ideals: parsing, rendering, and the hypergraph bridge.

A squarefree monomial is represented by its support, a frozenset of variable
names.  An ideal is identified by its minimal generating set (an antichain
under divisibility); the ring variable order is presentation metadata used
only for echoing input back, never for semantics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyIdeal, NotSquarefree, ParseError, UnknownVertex, UnitIdeal
from .hypergraph import Hypergraph, minimal_edge_set

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    """Minimal generators of a squarefree monomial ideal.

    Two ideals compare equal iff they have the same minimal generators; the
    recorded variable order does not participate in equality.
    """

    ring_vars: tuple
    generators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for g in self.generators:
            if not g:
                raise ValueError("generators must be nonempty monomials")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @classmethod
    def from_generators(cls, gens: Iterable[Iterable[str]]) -> "MonomialIdeal":
        """Normalize arbitrary squarefree generators to an antichain."""
        sets = minimal_edge_set(frozenset(g) for g in gens)
        ring = tuple(sorted(frozenset().union(*sets))) if sets else ()
        return cls(ring, sets)

    @property
    def support(self) -> frozenset:
        return frozenset().union(*self.generators) if self.generators else frozenset()

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def sorted_generators(self) -> list:
        """Canonical order: by degree, then lexicographically."""
        return sorted((sorted(g) for g in self.generators), key=lambda m: (len(m), m))

    def degrees(self) -> list:
        return sorted(len(g) for g in self.generators)

    def render(self) -> str:
        return render_ideal(self)

    def __repr__(self):
        return f"MonomialIdeal({self.render()!r})"


def render_ideal(ideal: MonomialIdeal) -> str:
    """Canonical text form: sorted generators joined by ", ", variables by "*"."""
    return ", ".join("*".join(m) for m in ideal.sorted_generators())


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``m1, m2, ...`` where each monomial is ``x*y*z``.

    Whitespace is ignored.  Repeating a variable inside one monomial raises
    NotSquarefree; duplicate or divisible generators are normalized away.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect_var() -> str:
        nonlocal pos
        skip_ws()
        m = _VAR_RE.match(text, pos)
        if not m:
            what = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"expected a variable name, found {what}", pos)
        pos = m.end()
        return m.group(0)

    ring_order: list = []
    gens: list = []
    while True:
        seen: set = set()
        while True:
            v = expect_var()
            if v in seen:
                raise NotSquarefree(f"variable {v!r} repeats inside one monomial")
            seen.add(v)
            if v not in ring_order:
                ring_order.append(v)
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                continue
            break
        gens.append(frozenset(seen))
        skip_ws()
        if pos >= n:
            break
        if text[pos] != ",":
            raise ParseError(f"expected ',' or '*', found {text[pos]!r}", pos)
        pos += 1
    return MonomialIdeal(tuple(ring_order), minimal_edge_set(gens))


def to_hypergraph(ideal: MonomialIdeal) -> Hypergraph:
    """The minimal hypergraph with the generator supports as edges."""
    if ideal.is_zero:
        raise EmptyIdeal("the zero ideal has no hypergraph")
    return Hypergraph(ideal.support, ideal.generators)


def to_ideal(g: Hypergraph) -> MonomialIdeal:
    """The edge ideal of a minimal hypergraph; isolated vertices are dropped."""
    ring = tuple(sorted(g.support))
    return MonomialIdeal(ring, frozenset(g.edges))


def substitute_one(ideal: MonomialIdeal, x: str) -> MonomialIdeal:
    """Set ``x`` to 1: delete it from every generator, then re-minimalize."""
    if x not in ideal.support:
        raise UnknownVertex(f"variable {x!r} is not in the support")
    if frozenset((x,)) in ideal.generators:
        raise UnitIdeal(f"substituting {x!r}=1 yields the unit ideal")
    cut = {g - {x} for g in ideal.generators}
    ring = tuple(v for v in ideal.ring_vars if v != x)
    return MonomialIdeal(ring, minimal_edge_set(cut))
