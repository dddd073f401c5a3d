"""Shared request/response layer for the CLI and the HTTP service.

Both front ends serialize through ``dumps_canonical`` so identical inputs
produce byte-identical JSON.  Responses are deterministic for a given request
and package version: the "timing" block reports work counters from the
homology oracle, not wall-clock time.
"""

from __future__ import annotations

import json
from typing import Dict, Optional, Tuple

from . import __version__
from .betti import IDEAL, QUOTIENT, betti_table, hochster_scan, BettiTable, pdim, reg, render_betti
from .errors import SchemaError
from .hypergraph import Hypergraph, invert, skeleton
from .ideals import MonomialIdeal, parse_ideal, to_hypergraph, to_ideal
from .matchings import ind_match, matching_number, min_match
from .nci import is_nci_definitional, is_nci_structural
from .splittings import decompose_nci
from .weighted import WeightedGraph, join_all, splay_with_sources

KNOWN_OPERATIONS = ("verdict", "betti", "decompose", "invert", "join", "splay", "bounds")


def dumps_canonical(obj) -> str:
    """The one JSON encoding both front ends emit (trailing newline included)."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class NormalizedInput:
    """One of the three accepted input forms, with derived views."""

    def __init__(
        self,
        kind: str,
        ideal: Optional[MonomialIdeal],
        hypergraph: Optional[Hypergraph],
        weighted: Optional[WeightedGraph],
        sources: Optional[dict] = None,
    ):
        self.kind = kind
        self.ideal = ideal
        self.hypergraph = hypergraph
        self.weighted = weighted
        self.sources = sources or {}

    def echo(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.ideal is not None:
            out["ideal"] = self.ideal.render()
        if self.hypergraph is not None:
            out["hypergraph"] = self.hypergraph.to_json_dict()
        if self.weighted is not None:
            out["weighted_graph"] = self.weighted.to_json_dict()
        return out

    def map_vertices(self, labels) -> list:
        """Translate splayed member labels back to weighted-graph vertices."""
        if not self.sources:
            return sorted(set(labels))
        return sorted({self.sources.get(v, v) for v in labels})


def normalize_input(spec: dict) -> NormalizedInput:
    """Accept exactly one of {"ideal": text, "hypergraph": {...}, "weighted_graph": {...}}."""
    if not isinstance(spec, dict):
        raise SchemaError("input must be an object")
    forms = [k for k in ("ideal", "hypergraph", "weighted_graph") if k in spec]
    if len(forms) != 1:
        raise SchemaError(
            'input must contain exactly one of "ideal", "hypergraph", "weighted_graph"'
        )
    form = forms[0]
    if form == "ideal":
        text = spec["ideal"]
        if not isinstance(text, str):
            raise SchemaError('"ideal" must be a string')
        ideal = parse_ideal(text)
        return NormalizedInput("ideal", ideal, to_hypergraph(ideal), None)
    if form == "hypergraph":
        g = Hypergraph.from_json_dict(spec["hypergraph"])
        ideal = to_ideal(g) if g.edges else None
        return NormalizedInput("hypergraph", ideal, g, None)
    w = WeightedGraph.from_json_dict(spec["weighted_graph"])
    g, sources = splay_with_sources(w)
    ideal = to_ideal(g) if g.edges else None
    return NormalizedInput("weighted_graph", ideal, g, w, sources)


def verdict_payload(inp: NormalizedInput) -> dict:
    g = inp.hypergraph
    if g is None or not g.edges:
        raise SchemaError("verdict needs at least one edge/generator")
    definitional = is_nci_definitional(g)
    structural = is_nci_structural(g)
    if definitional.status != structural.status:
        raise AssertionError(
            f"routes disagree: definitional={definitional.status} "
            f"structural={structural.status}"
        )
    out = structural.to_json_dict()
    witness = out.get("witness")
    if witness and inp.sources:
        mapped = dict(witness)
        if "vertex" in mapped:
            mapped["weighted_vertices"] = inp.map_vertices([mapped["vertex"]])
        if "vertices" in mapped:
            mapped["weighted_vertices"] = inp.map_vertices(mapped["vertices"])
        out["witness"] = mapped
    out["routes_agree"] = True
    return out


def betti_payload(
    inp: NormalizedInput,
    subject: str = QUOTIENT,
    char: int = 0,
    max_vars: Optional[int] = None,
) -> Tuple[dict, Dict[str, int]]:
    if inp.ideal is None:
        raise SchemaError("betti needs a nonzero ideal")
    subject = subject.upper()
    if subject not in (IDEAL, QUOTIENT):
        raise SchemaError('subject must be "ideal" or "quotient"')
    entries, stats = hochster_scan(inp.ideal, char=char, max_vars=max_vars)
    table = BettiTable(QUOTIENT, entries).as_subject(subject)
    payload = table.to_json_dict()
    payload["text"] = render_betti(table)
    payload["pdim"] = pdim(table)
    payload["reg"] = reg(table)
    payload["char"] = char
    return payload, stats


def invert_payload(inp: NormalizedInput, at: str) -> dict:
    g = inp.hypergraph
    if g is None:
        raise SchemaError("invert needs a hypergraph-backed input")
    target = at
    if inp.weighted is not None and at not in g.vertices:
        members = sorted(v for v, src in inp.sources.items() if src == at)
        if not members:
            from .errors import UnknownVertex

            raise UnknownVertex(f"vertex {at!r} is not in the input")
        target = members[0]
    result = invert(g, target)
    return {"inverted_at": target, "hypergraph": result.to_json_dict()}


def decompose_payload(
    inp: NormalizedInput, char: int = 0, max_vars: Optional[int] = None
) -> Tuple[dict, Dict[str, int]]:
    if inp.ideal is None:
        raise SchemaError("decompose needs a nonzero ideal")
    report = decompose_nci(inp.ideal, char=char, max_vars=max_vars)
    payload = report.to_json_dict()
    payload["assembled_text"] = render_betti(report.assembled)
    _, stats = hochster_scan(inp.ideal, char=char, max_vars=max_vars)
    return payload, stats


def join_payload(inp: NormalizedInput) -> dict:
    g = inp.hypergraph
    if g is None:
        raise SchemaError("join needs a hypergraph-backed input")
    return {"weighted_graph": join_all(g).to_json_dict()}


def splay_payload(inp: NormalizedInput) -> dict:
    if inp.weighted is None:
        raise SchemaError("splay needs a weighted-graph input")
    return {"hypergraph": inp.hypergraph.to_json_dict()}


def bounds_payload(
    inp: NormalizedInput, char: int = 0, max_vars: Optional[int] = None
) -> Tuple[dict, Dict[str, int]]:
    if inp.ideal is None:
        raise SchemaError("bounds needs a nonzero ideal")
    entries, stats = hochster_scan(inp.ideal, char=char, max_vars=max_vars)
    quotient = BettiTable(QUOTIENT, entries)
    payload: dict = {
        "pdim_ideal": pdim(quotient.as_ideal()) if quotient.as_ideal().entries else 0,
        "pdim_quotient": pdim(quotient),
        "reg_quotient": reg(quotient),
        "ind_match": None,
        "min_match": None,
        "notes": [],
    }
    g = inp.hypergraph
    if g is not None and g.edges and all(len(e) == 2 for e in g.edges):
        if len(g.vertices) <= 12:
            payload["ind_match"] = ind_match(g)
            payload["min_match"] = min_match(g)
            payload["matching"] = matching_number(g)
        else:
            payload["notes"].append("matching invariants skipped: more than 12 vertices")
    else:
        payload["notes"].append("matching invariants apply to simple graphs only")
    return payload, stats


def analysis_payload(request: dict) -> dict:
    """The /api/analyze body shared by CLI and service."""
    if not isinstance(request, dict):
        raise SchemaError("request must be an object")
    unknown = set(request) - {"input", "operations", "subject", "char"}
    if unknown:
        raise SchemaError(f"unknown request fields: {sorted(unknown)}")
    inp = normalize_input(request.get("input"))
    ops = request.get("operations")
    if not isinstance(ops, list) or not ops:
        raise SchemaError('"operations" must be a nonempty list')
    char = request.get("char", 0)
    if not isinstance(char, int) or isinstance(char, bool) or char < 0:
        raise SchemaError('"char" must be a nonnegative integer')
    subject = request.get("subject", "quotient")
    results: dict = {}
    counters = {"subsets_examined": 0, "homology_computations": 0}
    notes: list = []

    def bump(stats: Dict[str, int]):
        for key in counters:
            counters[key] += stats.get(key, 0)

    for op in ops:
        if isinstance(op, str):
            name, args = op, {}
        elif isinstance(op, dict) and isinstance(op.get("op"), str):
            name = op["op"]
            args = {k: v for k, v in op.items() if k != "op"}
        else:
            raise SchemaError(f"malformed operation {op!r}")
        if name not in KNOWN_OPERATIONS:
            raise SchemaError(f"unknown operation {name!r}")
        if name == "verdict":
            results["verdict"] = verdict_payload(inp)
        elif name == "betti":
            payload, stats = betti_payload(
                inp, subject=args.get("subject", subject), char=char
            )
            results["betti"] = payload
            bump(stats)
        elif name == "decompose":
            payload, stats = decompose_payload(inp, char=char)
            results["decompose"] = payload
            bump(stats)
        elif name == "invert":
            at = args.get("at")
            if not isinstance(at, str):
                raise SchemaError('invert needs an "at" vertex')
            results["invert"] = invert_payload(inp, at)
        elif name == "join":
            results["join"] = join_payload(inp)
        elif name == "splay":
            results["splay"] = splay_payload(inp)
        elif name == "bounds":
            payload, stats = bounds_payload(inp, char=char)
            results["bounds"] = payload
            bump(stats)
    return {
        "version": __version__,
        "input": inp.echo(),
        "results": results,
        "timing": counters,
        "budget_notes": notes,
    }
