"""Command-line front door.

Exit codes: 0 success, 1 usage/parse error, 2 internal consistency failure,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .api import (
    analysis_payload,
    betti_payload,
    bounds_payload,
    decompose_payload,
    dumps_canonical,
    invert_payload,
    join_payload,
    normalize_input,
    splay_payload,
    verdict_payload,
)
from .betti import render_betti, BettiTable
from .errors import BudgetExceeded, Disconnected, NcilabError, TooSmall
from .hypergraph import Hypergraph
from .ideals import to_ideal
from .matchings import gn_family
from .nci import is_nci_definitional, is_nci_graph_miller_stone, is_nci_structural

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2
EXIT_BUDGET = 3


def _input_spec(args) -> dict:
    text = args.input
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    fmt = getattr(args, "format", "ideal")
    if fmt == "ideal":
        return {"ideal": text}
    payload = json.loads(text)
    key = "hypergraph" if fmt == "hypergraph" else "weighted_graph"
    return {key: payload}


def _emit(args, payload: dict, text: Optional[str] = None) -> None:
    if args.json:
        sys.stdout.write(dumps_canonical(payload))
    else:
        sys.stdout.write((text if text is not None else dumps_canonical(payload).rstrip("\n")) + "\n")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="ideal text, or JSON when --format says so; @file reads a file")
    p.add_argument(
        "--format",
        choices=["ideal", "hypergraph", "weighted"],
        default="ideal",
        help="how to interpret INPUT (default: ideal text)",
    )


def cmd_check(args) -> int:
    inp = normalize_input(_input_spec(args))
    g = inp.hypergraph
    definitional = is_nci_definitional(g)
    structural = is_nci_structural(g)
    routes = {
        "definitional": definitional.to_json_dict(),
        "structural": structural.to_json_dict(),
        "miller_stone": None,
    }
    statuses = {definitional.status, structural.status}
    if g.edges and all(len(e) == 2 for e in g.edges):
        try:
            ms = is_nci_graph_miller_stone(g)
            routes["miller_stone"] = ms.to_json_dict()
            statuses.add(ms.status)
        except (Disconnected, TooSmall):
            pass
    payload = {"status": definitional.status, "routes": routes}
    agree = len(statuses) == 1
    payload["routes_agree"] = agree
    lines = [f"status: {definitional.status}"]
    for name, verdict in routes.items():
        if verdict is None:
            lines.append(f"  {name}: (not applicable)")
        else:
            extra = f" witness={verdict['witness']}" if verdict["witness"] else ""
            lines.append(f"  {name}: {verdict['status']}{extra}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if agree else EXIT_INCONSISTENT


def cmd_invert(args) -> int:
    inp = normalize_input(_input_spec(args))
    payload = invert_payload(inp, args.at)
    g = Hypergraph.from_json_dict(payload["hypergraph"])
    text = (
        f"inverted at {payload['inverted_at']}\n"
        + (to_ideal(g).render() if g.edges else "(no edges)")
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_betti(args) -> int:
    inp = normalize_input(_input_spec(args))
    payload, _ = betti_payload(inp, subject=args.subject, char=args.char, max_vars=args.max_vars)
    table = BettiTable(payload["subject"], {(e["i"], e["j"]): e["beta"] for e in payload["entries"]})
    text = f"subject: {payload['subject']}  pdim: {payload['pdim']}  reg: {payload['reg']}\n"
    text += render_betti(table)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    inp = normalize_input(_input_spec(args))
    payload, _ = decompose_payload(inp, char=args.char, max_vars=args.max_vars)
    lines = ["skeleton:"]
    skel = payload["skeleton"]["table"]
    lines.append(render_betti(BettiTable(skel["subject"], {(e["i"], e["j"]): e["beta"] for e in skel["entries"]})))
    for block in payload["principal"]:
        lines.append(f"principal {'*'.join(block['hyperedge'])}:")
        t = block["table"]
        lines.append(render_betti(BettiTable(t["subject"], {(e["i"], e["j"]): e["beta"] for e in t["entries"]})))
    for block in payload["intersections"]:
        lines.append(
            f"intersection at {'*'.join(block['hyperedge'])} = "
            f"{'*'.join(block['hyperedge'])} * ({block['cofactor']}):"
        )
        t = block["table"]
        lines.append(render_betti(BettiTable(t["subject"], {(e["i"], e["j"]): e["beta"] for e in t["entries"]})))
    lines.append("assembled (equals the oracle table):")
    lines.append(payload["assembled_text"])
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_bounds(args) -> int:
    inp = normalize_input(_input_spec(args))
    payload, _ = bounds_payload(inp, char=args.char, max_vars=args.max_vars)
    text = "\n".join(f"{k}: {v}" for k, v in payload.items() if k != "notes")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_join(args) -> int:
    inp = normalize_input(_input_spec(args))
    payload = join_payload(inp)
    _emit(args, payload)
    return EXIT_OK


def cmd_splay(args) -> int:
    if args.format != "weighted":
        args.format = "weighted"
    inp = normalize_input(_input_spec(args))
    payload = splay_payload(inp)
    g = Hypergraph.from_json_dict(payload["hypergraph"])
    _emit(args, payload, to_ideal(g).render() if g.edges else "(no edges)")
    return EXIT_OK


def cmd_gn(args) -> int:
    g = gn_family(args.n)
    payload = {"hypergraph": g.to_json_dict(), "ideal": to_ideal(g).render()}
    _emit(args, payload, payload["ideal"])
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok = run_selftest(verbose=not args.json)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def cmd_analyze(args) -> int:
    if args.request.startswith("@"):
        with open(args.request[1:], "r", encoding="utf-8") as fh:
            request = json.load(fh)
    else:
        request = json.loads(args.request)
    payload = analysis_payload(request)
    sys.stdout.write(dumps_canonical(payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncilab",
        description="Exact toolkit for squarefree monomial ideals and nearly complete intersections",
    )
    parser.add_argument("--version", action="version", version=f"ncilab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True, with_char=False):
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        if with_input:
            _add_input_flags(p)
        if with_char:
            p.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
            p.add_argument("--max-vars", type=int, default=None, help="override the support-size budget")

    p = sub.add_parser("check", help="CI/NCI verdict by all applicable routes")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("invert", help="vertex inversion / substitute 1 for a variable")
    common(p)
    p.add_argument("--at", required=True, help="vertex to invert at")
    p.set_defaults(fn=cmd_invert)

    p = sub.add_parser("betti", help="graded Betti table via the homology oracle")
    common(p, with_char=True)
    p.add_argument("--subject", choices=["ideal", "quotient"], default="quotient")
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("decompose", help="hyperedge-splitting decomposition of an NCI table")
    common(p, with_char=True)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("bounds", help="pdim, reg, and matching bounds")
    common(p, with_char=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("join", help="collapse hyperedges to a weighted graph")
    common(p)
    p.set_defaults(fn=cmd_join)

    p = sub.add_parser("splay", help="expand a weighted graph into a hypergraph")
    common(p)
    p.set_defaults(fn=cmd_splay)

    p = sub.add_parser("gn", help="hub-of-triangles family member")
    p.add_argument("--json", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_gn)

    p = sub.add_parser("selftest", help="run the equivalence and oracle suites")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("analyze", help="run an analysis request document")
    p.add_argument("request", help="JSON request or @file")
    p.set_defaults(fn=cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NcilabError, json.JSONDecodeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
