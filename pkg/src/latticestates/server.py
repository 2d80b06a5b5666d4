"""JSON-over-HTTP service for scripts and the explorer UI.

Every request is stateless over the read-only catalog; responses wrap the
same canonical payloads the CLI emits in a small envelope carrying the
schema version, a request echo and the handling time.
"""

from __future__ import annotations

import json
import os
import time
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .classify import SCHEMA_VERSION, classify
from .patterns import Pattern, PatternParseError
from .quadruples import catalog_all
from .witness import family_report


def _envelope(request_echo, result, started: float) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "request": request_echo,
        "result": result,
        "timing_ms": round((time.time() - started) * 1000.0, 3),
    }


def _error(status: int, message: str, started: float, request_echo=None) -> JSONResponse:
    return JSONResponse(status_code=status, content={
        "version": SCHEMA_VERSION,
        "request": request_echo,
        "error": message,
        "timing_ms": round((time.time() - started) * 1000.0, 3),
    })


def _pattern_from(value) -> Pattern:
    if isinstance(value, int):
        return Pattern(value)
    if isinstance(value, str):
        return Pattern.parse(value)
    raise PatternParseError(f"pattern must be a string or mask integer, got {type(value).__name__}")


def create_app(census_path: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="latticestates", version=SCHEMA_VERSION)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.post("/classify")
    async def classify_endpoint(request: Request):
        started = time.time()
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body is not valid JSON", started)
        if not isinstance(body, dict) or "pattern" not in body:
            return _error(400, "body must be an object with a 'pattern' field",
                          started, body if isinstance(body, dict) else None)
        try:
            pattern = _pattern_from(body["pattern"])
            result = classify(pattern, spectral=bool(body.get("spectral", False)))
        except (PatternParseError, ValueError) as exc:
            return _error(400, str(exc), started, body)
        return _envelope(body, result.as_json(), started)

    @app.get("/quadruples")
    def quadruples_endpoint(point: Optional[str] = None):
        started = time.time()
        cat = catalog_all()
        echo = {"point": point}
        if point is not None:
            try:
                parts = [int(x) for x in point.split(",")]
                if len(parts) != 2 or not all(0 <= x <= 3 for x in parts):
                    raise ValueError
            except ValueError:
                return _error(400, f"bad point {point!r}; expected a,b with a,b in 0..3",
                              started, echo)
            indices = cat.through[tuple(parts)]
        else:
            indices = tuple(range(len(cat.all)))
        result = [{
            "index": i,
            "points": [list(p) for p in cat.all[i].points],
            "mask": f"0x{cat.all[i].mask:04X}",
            "grid": Pattern(cat.all[i].mask).grid_rows(),
        } for i in indices]
        return _envelope(echo, result, started)

    @app.post("/witness")
    async def witness_endpoint(request: Request):
        started = time.time()
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body is not valid JSON", started)
        if not isinstance(body, dict):
            return _error(400, "body must be an object", started)
        family = body.get("family")
        if family not in ("delta", "gamma", "phiv"):
            return _error(400, "family must be one of delta, gamma, phiv", started, body)
        try:
            pattern = _pattern_from(body.get("pattern"))
            if pattern.mask == 0:
                raise ValueError("empty pattern")
            params = body.get("params") or {}
            result = family_report(pattern, family, params)
        except (PatternParseError, ValueError, KeyError) as exc:
            return _error(400, str(exc), started, body)
        return _envelope(body, result, started)

    @app.get("/census/summary")
    def census_summary():
        started = time.time()
        path = census_path or "census.json"
        if not os.path.exists(path):
            return _error(404, f"no cached census at {path!r}; "
                               "run `latticestates census --out .` first", started)
        with open(path) as fh:
            data = json.load(fh)
        data.pop("orbits", None)
        return _envelope({"path": path}, data, started)

    return app
