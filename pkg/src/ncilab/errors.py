"""Exception types shared across the toolkit."""


class NcilabError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(NcilabError):
    """Bad ideal text; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class NotSquarefree(NcilabError):
    """A variable repeats inside a single monomial."""


class EmptyIdeal(NcilabError):
    """The zero ideal has no hypergraph."""


class UnknownVertex(NcilabError):
    """A vertex/variable outside the carrier was referenced."""


class UnitIdeal(NcilabError):
    """Substitution produced the unit ideal (a 1-edge at the inverted vertex)."""


class NotAHyperedge(NcilabError):
    """join was asked to collapse something that is not a hyperedge of the input."""


class NotJoinable(NcilabError):
    """Operation requires a joinable hypergraph."""


class TooSmall(NcilabError):
    """Graph-only criterion needs at least 3 vertices."""


class Disconnected(NcilabError):
    """Graph-only criterion needs a connected graph."""


class NotNci(NcilabError):
    """Operation requires a nearly complete intersection."""


class DegreeTooLow(NcilabError):
    """Splitting generator must have degree at least 3."""


class EmptyTable(NcilabError):
    """pdim/reg of an empty Betti table is undefined."""


class BudgetExceeded(NcilabError):
    """Instance exceeds the configured exact-computation budget."""


class SchemaError(NcilabError):
    """A JSON wire form violated its schema."""
