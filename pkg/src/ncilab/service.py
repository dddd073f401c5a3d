"""Stateless JSON-over-HTTP service.

Endpoints: POST /api/analyze, /api/invert, /api/betti, /api/decompose and
GET /api/health.  Malformed JSON or schema violations are 400, domain errors
422 (carrying the error type name), budget refusals 503.  Bodies are encoded
with the same canonical serializer as the CLI.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .api import (
    analysis_payload,
    betti_payload,
    decompose_payload,
    dumps_canonical,
    invert_payload,
    normalize_input,
)
from .errors import BudgetExceeded, NcilabError, ParseError, NotSquarefree, SchemaError


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=dumps_canonical(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(exc: Exception) -> Response:
    name = type(exc).__name__
    if isinstance(exc, BudgetExceeded):
        return _json_response({"error": name, "message": str(exc)}, 503)
    if isinstance(exc, (SchemaError, ParseError, NotSquarefree)):
        return _json_response({"error": name, "message": str(exc)}, 400)
    if isinstance(exc, NcilabError):
        return _json_response({"error": name, "message": str(exc)}, 422)
    raise exc


async def _read_json(request: Request) -> dict:
    try:
        body = await request.body()
        obj = json.loads(body)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError(f"malformed JSON: {exc}")
    if not isinstance(obj, dict):
        raise SchemaError("request body must be a JSON object")
    return obj


def create_app() -> FastAPI:
    app = FastAPI(title="ncilab", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    async def health() -> Response:
        return _json_response({"ok": True})

    @app.post("/api/analyze")
    async def analyze(request: Request) -> Response:
        try:
            return _json_response(analysis_payload(await _read_json(request)))
        except Exception as exc:  # mapped to HTTP codes above
            return _error_response(exc)

    @app.post("/api/invert")
    async def invert_endpoint(request: Request) -> Response:
        try:
            obj = await _read_json(request)
            at = obj.get("at")
            if not isinstance(at, str):
                raise SchemaError('"at" must name a vertex')
            inp = normalize_input(obj.get("input"))
            return _json_response(invert_payload(inp, at))
        except Exception as exc:
            return _error_response(exc)

    @app.post("/api/betti")
    async def betti_endpoint(request: Request) -> Response:
        try:
            obj = await _read_json(request)
            subject = obj.get("subject", "quotient")
            char = obj.get("char", 0)
            if not isinstance(subject, str):
                raise SchemaError('"subject" must be a string')
            if not isinstance(char, int) or isinstance(char, bool) or char < 0:
                raise SchemaError('"char" must be a nonnegative integer')
            inp = normalize_input(obj.get("input"))
            payload, _ = betti_payload(inp, subject=subject, char=char)
            return _json_response(payload)
        except Exception as exc:
            return _error_response(exc)

    @app.post("/api/decompose")
    async def decompose_endpoint(request: Request) -> Response:
        try:
            obj = await _read_json(request)
            char = obj.get("char", 0)
            if not isinstance(char, int) or isinstance(char, bool) or char < 0:
                raise SchemaError('"char" must be a nonnegative integer')
            inp = normalize_input(obj.get("input"))
            payload, _ = decompose_payload(inp, char=char)
            return _json_response(payload)
        except Exception as exc:
            return _error_response(exc)

    return app
