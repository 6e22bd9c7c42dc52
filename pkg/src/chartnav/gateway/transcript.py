"""Recorded request/response pairs at the LLM/web boundary.

One JSON record per line: kind, prompt digest, rendered prompt, completion
text (or an error marker for recorded timeouts). Record mode appends;
replay mode consumes entries strictly in order, verifying digests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional


@dataclass(frozen=True)
class TranscriptEntry:
    kind: str  # "complete" or "web"
    digest: str
    prompt: str
    completion: Optional[str]
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "digest": self.digest,
                "prompt": self.prompt,
                "completion": self.completion,
                "error": self.error,
            },
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> "TranscriptEntry":
        raw = json.loads(line)
        return cls(
            kind=raw.get("kind", "complete"),
            digest=raw["digest"],
            prompt=raw.get("prompt", ""),
            completion=raw.get("completion"),
            error=raw.get("error"),
        )


class Transcript:
    """Append-only in record mode; an ordered cursor in replay mode."""

    def __init__(self, path: Optional[str] = None, entries: Optional[list] = None):
        self.path = Path(path) if path else None
        self.entries: list = list(entries or [])
        self._cursor = 0

    @classmethod
    def load(cls, path: str) -> "Transcript":
        entries = []
        text = Path(path).read_text(encoding="utf-8")
        for line in text.splitlines():
            if line.strip():
                entries.append(TranscriptEntry.from_json(line))
        return cls(path=path, entries=entries)

    def append(self, entry: TranscriptEntry) -> None:
        self.entries.append(entry)
        if self.path is not None:
            with self.path.open("a", encoding="utf-8") as f:
                f.write(entry.to_json() + "\n")

    def next_entry(self) -> Optional[TranscriptEntry]:
        if self._cursor >= len(self.entries):
            return None
        entry = self.entries[self._cursor]
        self._cursor += 1
        return entry

    def rewind(self) -> None:
        self._cursor = 0

    def __len__(self) -> int:
        return len(self.entries)
