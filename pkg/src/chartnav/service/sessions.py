"""In-memory session state with optional append-only event logging."""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional

from ..context import ChartContext
from ..errors import UnknownSessionError
from ..nav.engine import Cursor


@dataclass
class Session:
    id: str
    chart_id: str
    context: ChartContext
    cursor: Cursor
    view_mode: str = "tree"  # tree | table
    sort_state: Optional[tuple] = None  # (column, order)
    pending_query: bool = False
    lock: threading.Lock = dc_field(default_factory=threading.Lock)
    idempotency: dict = dc_field(default_factory=dict)

    @property
    def focused_label(self) -> str:
        return self.context.tree.resolve(self.cursor.address).label


class SessionStore:
    def __init__(self, event_log_path: Optional[str] = None, id_factory=None):
        self._sessions: dict = {}
        self._lock = threading.Lock()
        self._event_log = Path(event_log_path) if event_log_path else None
        self._id_factory = id_factory or (lambda: uuid.uuid4().hex[:12])

    def create(self, chart_id: str, context: ChartContext) -> Session:
        session = Session(
            id=str(self._id_factory()),
            chart_id=chart_id,
            context=context,
            cursor=Cursor(session="pending", address="1"),
        )
        session.cursor = Cursor(session=session.id, address="1")
        with self._lock:
            self._sessions[session.id] = session
        self.log(session.id, "create", {"chart_id": chart_id})
        return session

    def get(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(f"unknown session {session_id!r}")
        return session

    def log(self, session_id: str, action: str, payload: dict) -> None:
        if self._event_log is None:
            return
        record = {
            "ts": time.time(),
            "session": session_id,
            "action": action,
            "payload": payload,
        }
        with self._lock:
            with self._event_log.open("a", encoding="utf-8") as f:
                f.write(json.dumps(record, ensure_ascii=False) + "\n")
