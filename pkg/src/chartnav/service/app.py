"""Session-oriented HTTP API over the chart, tree, and query pipeline.

Versioned under /v1. Query submission streams server-sent events: a
"Loading. Please Wait" progress event immediately, "Still Loading" on a
fixed cadence while the pipeline works, then the answer. Mutating
endpoints honor an Idempotency-Key header for retry-safe assistive
clients.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from queue import Empty, Queue
from typing import Optional

from fastapi import FastAPI, Header, Request
from fastapi.responses import JSONResponse, StreamingResponse

from ..chart.csvio import format_cell
from ..chart.view import sort_view
from ..context import ChartContext
from ..errors import ChartNavError, UnknownAddressError, UnknownSessionError
from ..gateway.core import LOADING_MESSAGE, STILL_LOADING_MESSAGE, Gateway
from ..nav.engine import Cursor, Key, apply_key, auto_traverse, orient
from ..pipeline.runner import QueryPipeline
from ..pipeline.types import ExampleBank, UserQuery
from .sessions import Session, SessionStore

API_PREFIX = "/v1"


@dataclass
class ServiceConfig:
    charts: dict  # chart_id -> ChartContext
    gateway: Gateway
    bank: ExampleBank
    still_loading_interval: float = 3.0
    auto_traverse: bool = False
    event_log_path: Optional[str] = None
    examples_per_type: int = 4
    agent_max_steps: int = 15
    agent_wall_clock: float = 60.0
    session_id_factory: Optional[object] = None  # injectable for deterministic replays


@dataclass
class ProgressEvent:
    phase: str  # started | still_loading | done | error
    message: str
    elapsed: float = 0.0

    def sse(self) -> str:
        data = json.dumps(
            {"phase": self.phase, "message": self.message, "elapsed": round(self.elapsed, 3)}
        )
        return f"event: progress\ndata: {data}\n\n"


def _sse(event: str, payload: dict) -> str:
    return f"event: {event}\ndata: {json.dumps(payload, ensure_ascii=False)}\n\n"


def create_app(config: ServiceConfig) -> FastAPI:
    app = FastAPI(title="chartnav", version="0.1.0")
    store = SessionStore(config.event_log_path, id_factory=config.session_id_factory)
    app.state.config = config
    app.state.store = store

    def pipeline_for(session: Session) -> QueryPipeline:
        return QueryPipeline(
            config.gateway,
            session.context,
            config.bank,
            examples_per_type=config.examples_per_type,
            auto_traverse=config.auto_traverse,
            agent_max_steps=config.agent_max_steps,
            agent_wall_clock=config.agent_wall_clock,
        )

    def idempotent(session: Optional[Session], key: Optional[str], compute):
        if session is not None and key:
            cached = session.idempotency.get(key)
            if cached is not None:
                return cached
        result = compute()
        if session is not None and key:
            session.idempotency[key] = result
        return result

    @app.exception_handler(ChartNavError)
    async def chartnav_error(_request: Request, exc: ChartNavError):
        status = 404 if isinstance(exc, (UnknownSessionError, UnknownAddressError)) else 400
        return JSONResponse(status_code=status, content={"error": str(exc)})

    # -- session lifecycle -------------------------------------------------

    creation_cache: dict = {}

    @app.post(API_PREFIX + "/sessions")
    async def create_session(
        body: dict, idempotency_key: Optional[str] = Header(default=None)
    ):
        chart_id = body.get("chart_id")
        if chart_id not in config.charts:
            return JSONResponse(
                status_code=404,
                content={"error": f"unknown chart {chart_id!r}", "known": sorted(config.charts)},
            )
        if idempotency_key and idempotency_key in creation_cache:
            return creation_cache[idempotency_key]
        session = store.create(chart_id, config.charts[chart_id])
        payload = {
            "session_id": session.id,
            "chart_id": chart_id,
            "cursor": session.cursor.address,
            "view_mode": session.view_mode,
            "focused_label": session.focused_label,
        }
        if idempotency_key:
            creation_cache[idempotency_key] = payload
        return payload

    @app.get(API_PREFIX + "/sessions/{session_id}/tree")
    async def get_tree(session_id: str):
        session = store.get(session_id)
        tree = session.context.tree
        return {
            "tree_text": tree.tree_text,
            "nodes": [
                {
                    "address": n.address,
                    "level": n.level,
                    "kind": n.kind.value,
                    "label": n.label,
                    "group": n.kind.value == "group",
                }
                for n in tree.root.walk()
            ],
            "cursor": session.cursor.address,
            "focused_label": session.focused_label,
        }

    # -- cursor moves --------------------------------------------------------

    @app.post(API_PREFIX + "/sessions/{session_id}/key")
    async def send_key(
        session_id: str, body: dict, idempotency_key: Optional[str] = Header(default=None)
    ):
        session = store.get(session_id)
        raw = str(body.get("key", "")).lower()
        try:
            key = Key(raw)
        except ValueError:
            return JSONResponse(status_code=400, content={"error": f"invalid key {raw!r}"})

        def compute():
            with session.lock:
                result = apply_key(session.context.tree, session.cursor, key)
                session.cursor = result.cursor
                payload = {
                    "cursor": session.cursor.address,
                    "focused_label": session.focused_label,
                    "boundary": result.boundary,
                    "table_open": session.cursor.table_open,
                }
                if result.toggled_table and session.cursor.table_open:
                    from ..tree.model import snapshot_table

                    table = snapshot_table(
                        session.context.tree, session.cursor.address, session.context.view
                    )
                    payload["snapshot"] = {
                        "columns": [c.name for c in table.columns],
                        "rows": [[format_cell(v) for v in row] for row in table.rows],
                    }
                store.log(session.id, "key", {"key": raw, "cursor": session.cursor.address})
                return payload

        return idempotent(session, idempotency_key, compute)

    @app.post(API_PREFIX + "/sessions/{session_id}/traverse")
    async def traverse(
        session_id: str, body: dict, idempotency_key: Optional[str] = Header(default=None)
    ):
        session = store.get(session_id)
        target = str(body.get("target", ""))

        def compute():
            with session.lock:
                cursor, script = auto_traverse(session.context.tree, session.cursor, target)
                session.cursor = cursor
                store.log(session.id, "traverse", {"target": target})
                return {
                    "cursor": cursor.address,
                    "focused_label": session.focused_label,
                    "script": {"spoken": script.spoken, "steps": [
                        (k.value, n) for k, n in script.steps
                    ]},
                }

        return idempotent(session, idempotency_key, compute)

    @app.get(API_PREFIX + "/sessions/{session_id}/orient")
    async def get_orient(session_id: str):
        session = store.get(session_id)
        return {
            "text": orient(session.context.tree, session.cursor),
            "cursor": session.cursor.address,
            "focused_label": session.focused_label,
        }

    # -- table view ------------------------------------------------------------

    @app.post(API_PREFIX + "/sessions/{session_id}/view")
    async def toggle_view(
        session_id: str, idempotency_key: Optional[str] = Header(default=None)
    ):
        session = store.get(session_id)

        def compute():
            with session.lock:
                session.view_mode = "table" if session.view_mode == "tree" else "tree"
                store.log(session.id, "view", {"view_mode": session.view_mode})
                return {
                    "view_mode": session.view_mode,
                    "focused_label": session.focused_label,
                }

        return idempotent(session, idempotency_key, compute)

    @app.post(API_PREFIX + "/sessions/{session_id}/sort")
    async def sort_table(
        session_id: str, body: dict, idempotency_key: Optional[str] = Header(default=None)
    ):
        session = store.get(session_id)
        column = str(body.get("column", ""))
        order = str(body.get("order", "asc"))

        def compute():
            with session.lock:
                sorted_view = sort_view(session.context.view, column, order)
                session.sort_state = (column, order)
                store.log(session.id, "sort", {"column": column, "order": order})
                return {
                    "columns": sorted_view.column_names,
                    "rows": [[format_cell(v) for v in row] for row in sorted_view.rows],
                    "sort_state": {"column": column, "order": order},
                    "focused_label": session.focused_label,
                }

        return idempotent(session, idempotency_key, compute)

    # -- suggestions --------------------------------------------------------------

    @app.get(API_PREFIX + "/sessions/{session_id}/suggestions")
    def get_suggestions(session_id: str):
        session = store.get(session_id)
        suggestions = pipeline_for(session).suggestions()
        return {"suggestions": suggestions, "focused_label": session.focused_label}

    # -- query submission -----------------------------------------------------------

    @app.post(API_PREFIX + "/sessions/{session_id}/query")
    def submit_query(session_id: str, body: dict, stream: bool = True):
        session = store.get(session_id)
        text = str(body.get("text", "")).strip()
        if not text:
            return JSONResponse(status_code=400, content={"error": "query text required"})
        with session.lock:
            if session.pending_query:
                return JSONResponse(
                    status_code=409,
                    content={
                        "error": "a query is already in flight for this session",
                        "retry": "wait for the current answer, then resubmit",
                    },
                )
            session.pending_query = True

        store.log(session.id, "query", {"text": text})
        pipeline = pipeline_for(session)
        query = UserQuery(
            text=text,
            session=session.id,
            cursor_address=session.cursor.address,
            table_mode=session.view_mode == "table",
        )

        def finish(answer) -> dict:
            if pipeline.last_cursor is not None:
                session.cursor = Cursor(session=session.id, address=pipeline.last_cursor.address)
            payload = answer.to_dict()
            payload["focused_label"] = session.focused_label
            payload["cursor"] = session.cursor.address
            return payload

        if not stream:
            try:
                answer = pipeline.run(query)
                return finish(answer)
            finally:
                session.pending_query = False

        def event_stream():
            started = time.monotonic()
            outcome: dict = {}

            def worker():
                try:
                    outcome["answer"] = pipeline.run(query)
                except Exception as exc:  # pipeline is total; belt and braces
                    outcome["error"] = str(exc)

            thread = threading.Thread(target=worker, daemon=True)
            thread.start()
            try:
                yield ProgressEvent("started", LOADING_MESSAGE, 0.0).sse()
                while thread.is_alive():
                    thread.join(config.still_loading_interval)
                    if thread.is_alive():
                        yield ProgressEvent(
                            "still_loading",
                            STILL_LOADING_MESSAGE,
                            time.monotonic() - started,
                        ).sse()
                if "error" in outcome:
                    yield ProgressEvent("error", outcome["error"], time.monotonic() - started).sse()
                    return
                yield _sse("answer", finish(outcome["answer"]))
                yield ProgressEvent("done", "done", time.monotonic() - started).sse()
            finally:
                session.pending_query = False

        return StreamingResponse(event_stream(), media_type="text/event-stream")

    return app
