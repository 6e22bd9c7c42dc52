"""Versioned prompt templates with named placeholders.

Templates live as UTF-8 files under chartnav/data/prompts and use
``{{name}}`` placeholders (literal braces elsewhere are left untouched, so
templates can show JSON examples). The rendered text feeds the gateway
digest, which is what pins transcripts to template versions.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_PLACEHOLDER = re.compile(r"\{\{(\w+)\}\}")


@lru_cache(maxsize=32)
def template_text(name: str) -> str:
    return resources.files("chartnav.data").joinpath(f"prompts/{name}.txt").read_text("utf-8")


def render_template(name: str, **values) -> str:
    text = template_text(name)

    def replace(match: re.Match) -> str:
        key = match.group(1)
        if key not in values:
            raise KeyError(f"template {name!r} placeholder {key!r} not supplied")
        return str(values[key])

    return _PLACEHOLDER.sub(replace, text)
