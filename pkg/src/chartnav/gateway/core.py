"""Single boundary for model and web-knowledge calls.

Every completion and web lookup flows through a Gateway configured in one
of three modes:

    live    call the configured provider
    record  call the provider and append (digest, prompt, completion) to a
            transcript file
    replay  serve completions from a transcript; any drift between the
            rendered prompt digest and the recording is an error

Replay keeps the whole pipeline deterministic and testable offline.
"""

from __future__ import annotations

import hashlib
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..errors import (
    GatewayError,
    GatewayTimeout,
    ReplayExhaustedError,
    ReplayMismatchError,
    TransportError,
)
from .transcript import Transcript, TranscriptEntry

LOADING_MESSAGE = "Loading. Please Wait"
STILL_LOADING_MESSAGE = "Still Loading"

# Grace period added to provider timeouts before the gateway gives up itself.
TIMEOUT_GRACE = 2.0


@dataclass(frozen=True)
class Prompt:
    system: str = ""
    user: str = ""
    few_shot: tuple = ()  # of (input, output) pairs
    tools: tuple = ()  # declared tool names

    def render(self) -> str:
        """Stable byte-for-byte text form; the digest is computed over this."""
        parts = ["[system]", self.system]
        for shot_in, shot_out in self.few_shot:
            parts += ["[example input]", shot_in, "[example output]", shot_out]
        if self.tools:
            parts += ["[tools]", ", ".join(self.tools)]
        parts += ["[user]", self.user]
        return "\n".join(parts)

    def digest(self) -> str:
        return hashlib.sha256(self.render().encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Completion:
    text: Optional[str] = None
    tool_call: Optional[tuple] = None  # (tool name, arguments)
    elapsed: float = 0.0

    def __post_init__(self):
        if (self.text is None) == (self.tool_call is None):
            raise ValueError("exactly one of text / tool_call must be populated")


class Gateway:
    """Completion, embedding, and web-lookup calls with one switchable mode."""

    def __init__(
        self,
        mode: str = "live",
        provider=None,
        transcript: Optional[Transcript] = None,
        embedder=None,
        progress_interval: float = 3.0,
        on_progress: Optional[Callable] = None,
    ):
        if mode not in ("live", "record", "replay"):
            raise ValueError(f"unknown gateway mode {mode!r}")
        if mode in ("live", "record") and provider is None:
            raise ValueError(f"mode {mode!r} requires a provider")
        if mode in ("record", "replay") and transcript is None:
            raise ValueError(f"mode {mode!r} requires a transcript")
        self.mode = mode
        self.provider = provider
        self.transcript = transcript
        self.embedder = embedder
        self.progress_interval = progress_interval
        self.on_progress = on_progress

    # -- completions ----------------------------------------------------

    def complete(self, prompt: Prompt, timeout: float = 60.0) -> Completion:
        digest = prompt.digest()
        self._emit("started", LOADING_MESSAGE, 0.0)
        if self.mode == "replay":
            return self._replay("complete", digest)

        started = time.monotonic()
        try:
            text = self._call_with_progress(
                lambda: self.provider.complete(prompt.render(), timeout), timeout
            )
            elapsed = time.monotonic() - started
        except GatewayTimeout:
            self._record_error("complete", digest, prompt.render(), "timeout")
            raise
        except GatewayError:
            self._record_error("complete", digest, prompt.render(), "transport")
            raise
        except Exception as exc:
            self._record_error("complete", digest, prompt.render(), "transport")
            raise TransportError(str(exc)) from exc

        if self.mode == "record":
            self.transcript.append(
                TranscriptEntry(kind="complete", digest=digest, prompt=prompt.render(), completion=text)
            )
        return Completion(text=text, elapsed=elapsed)

    def web_lookup(self, query: str, timeout: float = 60.0) -> str:
        if not query or not query.strip():
            raise GatewayError("web_lookup requires a non-empty query")
        pseudo = Prompt(system="web_lookup", user=query)
        digest = pseudo.digest()
        if self.mode == "replay":
            return self._replay("web", digest).text

        try:
            text = self._call_with_progress(
                lambda: self.provider.web_search(query, timeout), timeout
            )
        except GatewayTimeout:
            self._record_error("web", digest, pseudo.render(), "timeout")
            raise
        except GatewayError:
            self._record_error("web", digest, pseudo.render(), "transport")
            raise
        except Exception as exc:
            self._record_error("web", digest, pseudo.render(), "transport")
            raise TransportError(str(exc)) from exc

        if self.mode == "record":
            self.transcript.append(
                TranscriptEntry(kind="web", digest=digest, prompt=pseudo.render(), completion=text)
            )
        return text

    # -- embeddings -------------------------------------------------------

    def embed(self, text: str):
        if not text:
            raise GatewayError("embed requires non-empty text")
        if self.embedder is None:
            from .embeddings import HashedEmbedder

            self.embedder = HashedEmbedder()
        return self.embedder.embed(text)

    # -- internals --------------------------------------------------------

    def _replay(self, kind: str, digest: str) -> Completion:
        entry = self.transcript.next_entry()
        if entry is None:
            raise ReplayExhaustedError("transcript has no more entries")
        if entry.digest != digest:
            raise ReplayMismatchError(expected=entry.digest, got=digest)
        if entry.kind != kind:
            raise ReplayMismatchError(expected=f"kind={entry.kind}", got=f"kind={kind}")
        if entry.error == "timeout":
            raise GatewayTimeout("recorded timeout")
        if entry.error:
            raise TransportError(f"recorded transport error: {entry.error}")
        return Completion(text=entry.completion, elapsed=0.0)

    def _record_error(self, kind: str, digest: str, prompt: str, error: str) -> None:
        if self.mode == "record":
            self.transcript.append(
                TranscriptEntry(kind=kind, digest=digest, prompt=prompt, completion=None, error=error)
            )

    def _call_with_progress(self, call: Callable, timeout: float):
        """Run a provider call, emitting Still Loading at the configured cadence."""
        if self.on_progress is None:
            return call()

        result: dict = {}

        def worker():
            try:
                result["value"] = call()
            except Exception as exc:  # re-raised on the caller thread
                result["exc"] = exc

        thread = threading.Thread(target=worker, daemon=True)
        started = time.monotonic()
        thread.start()
        deadline = started + timeout + TIMEOUT_GRACE
        while thread.is_alive():
            thread.join(self.progress_interval)
            if thread.is_alive():
                elapsed = time.monotonic() - started
                if elapsed >= deadline - started:
                    raise GatewayTimeout(f"provider call exceeded {timeout}s plus grace")
                self._emit("still_loading", STILL_LOADING_MESSAGE, elapsed)
        if "exc" in result:
            raise result["exc"]
        return result["value"]

    def _emit(self, phase: str, message: str, elapsed: float) -> None:
        if self.on_progress is not None:
            self.on_progress(phase, message, elapsed)
