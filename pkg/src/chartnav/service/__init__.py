"""HTTP API exposing sessions, tree state, cursor moves, and queries."""

from .app import API_PREFIX, ProgressEvent, ServiceConfig, create_app
from .sessions import Session, SessionStore

__all__ = [
    "API_PREFIX",
    "ProgressEvent",
    "ServiceConfig",
    "Session",
    "SessionStore",
    "create_app",
]
