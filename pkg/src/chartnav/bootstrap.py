"""Assemble runtime pieces (charts, example bank, gateway) from config.

CLI and service share this. Provider credentials come from an environment
variable; the base URL and model name come from a JSON config file.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Optional

from .context import ChartContext
from .gateway.core import Gateway
from .gateway.embeddings import HashedEmbedder
from .gateway.providers import HTTPProvider
from .gateway.transcript import Transcript
from .pipeline.types import ExampleBank

PACKAGED_CHARTS = ("bar", "line", "scatter", "map")

DEFAULT_CONFIG = {
    "base_url": "https://api.openai.com/v1",
    "model": "gpt-4",
    "refine_model": "gpt-3.5-turbo",
    "api_key_env": "CHARTNAV_API_KEY",
    "web_url": None,
    "embedder": "hashed",
}


def load_config(path: Optional[str] = None) -> dict:
    config = dict(DEFAULT_CONFIG)
    if path:
        config.update(json.loads(Path(path).read_text(encoding="utf-8")))
    return config


def packaged_chart_path(name: str) -> str:
    return str(resources.files("chartnav.data").joinpath(f"charts/{name}.json"))


def packaged_transcript_path(name: str) -> str:
    return str(resources.files("chartnav.data").joinpath(f"transcripts/{name}.jsonl"))


def resolve_chart(ref: str) -> ChartContext:
    """Load a chart by packaged name (bar/line/scatter/map) or file path."""
    if ref in PACKAGED_CHARTS:
        return ChartContext.load(packaged_chart_path(ref))
    return ChartContext.load(ref)


def load_packaged_charts() -> dict:
    return {name: resolve_chart(name) for name in PACKAGED_CHARTS}


def default_bank(embedder=None) -> ExampleBank:
    path = resources.files("chartnav.data").joinpath("example_bank.jsonl")
    return ExampleBank.load_jsonl(str(path), embedder or HashedEmbedder())


def build_gateway(
    config: dict,
    replay: Optional[str] = None,
    record: Optional[str] = None,
    on_progress=None,
) -> Gateway:
    if replay:
        return Gateway(
            mode="replay", transcript=Transcript.load(replay),
            embedder=HashedEmbedder(), on_progress=on_progress,
        )
    provider = HTTPProvider(
        base_url=config["base_url"],
        model=config["model"],
        api_key_env=config["api_key_env"],
        web_url=config.get("web_url"),
    )
    if record:
        return Gateway(
            mode="record", provider=provider, transcript=Transcript(record),
            embedder=HashedEmbedder(), on_progress=on_progress,
        )
    return Gateway(
        mode="live", provider=provider, embedder=HashedEmbedder(), on_progress=on_progress
    )
