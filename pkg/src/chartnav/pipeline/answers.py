"""Non-tabular pipeline stages: refinement, contextual and navigation
answers, reactive suggestions, cold-start suggestions, justification."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from ..errors import GatewayError, UnknownAddressError
from ..gateway.core import Gateway, Prompt
from ..nav.engine import Cursor, auto_traverse, orient, shortest_path
from ..nav.speech import InstructionScript, coalesce
from ..tree.model import AccessTree
from .prompts import render_template
from .types import Answer, QueryType

NAV_FAILURE = (
    "The question was interpreted as involving navigation, but either no "
    "starting/ending point was provided, or the tree view was not activated. "
    "Please try again."
)

NAV_DISABLED = (
    "Navigation queries are disabled in the data table. Switch back to the "
    "tree view to navigate."
)

NO_WEB_RESULT = "I could not find any external information for this question."

GENERIC_FAILURE = "I am sorry but I cannot answer the question."

FALLBACK_SUGGESTIONS = (
    "What is the highest value in the chart?",
    "What colors are used in the chart?",
    "What is this chart about?",
    "How do I get to the first data group from the top of the tree?",
)

_SUGGESTION_LINE = re.compile(r"^\s*([12])[.)]\s*(.+?)\s*$", re.MULTILINE)
_ADDRESS = re.compile(r"^\s*(Starting|Ending) Address:\s*([\d.]+)\s*$", re.MULTILINE)
_COLD_LINE = re.compile(
    r"^\s*(Analytical|Visual|Contextual|Navigation):\s*(.+?)\s*$", re.MULTILINE
)

_JUSTIFICATION = {
    QueryType.ANALYTICAL: (
        "categorized as being analytical, and as such, has been answered "
        "based on the chart's underlying data"
    ),
    QueryType.VISUAL: (
        "categorized as being visual, and as such, has been answered based "
        "on the chart's data and color encoding"
    ),
    QueryType.CONTEXTUAL: (
        "categorized as being context-seeking, and as such, has been "
        "answered based on information found on the web"
    ),
    QueryType.NAVIGATION: (
        "categorized as being navigation-related, and as such, has been "
        "answered based on the tree view"
    ),
    QueryType.UNANSWERABLE: "not matched to a supported query type",
}


def refine_query(gateway: Gateway, query_text: str, tree_text: str):
    """Returns (refined_text, warning). Degrades to the raw text on failure."""
    prompt = Prompt(
        system=render_template("refine_v1", tree_text=tree_text),
        user=f"Question: {query_text}",
    )
    try:
        completion = gateway.complete(prompt)
    except GatewayError as exc:
        return query_text, f"query refinement unavailable: {exc}"
    refined = (completion.text or "").strip()
    if not refined:
        return query_text, "query refinement returned no text"
    return refined, None


def answer_contextual(gateway: Gateway, query_text: str, tree_text: str) -> str:
    snippet = gateway.web_lookup(query_text)
    if not snippet.strip():
        return NO_WEB_RESULT
    prompt = Prompt(
        system=render_template(
            "contextual_v1", tree_text=tree_text, snippet=snippet, query=query_text
        ),
        user=query_text,
    )
    return (gateway.complete(prompt).text or "").strip()


@dataclass(frozen=True)
class NavigationOutcome:
    body: str
    script: Optional[InstructionScript] = None
    start_address: Optional[str] = None
    end_address: Optional[str] = None
    cursor: Optional[Cursor] = None
    failed: bool = False


def answer_navigation(
    gateway: Gateway,
    query_text: str,
    tree: AccessTree,
    cursor: Cursor,
    auto: bool = False,
) -> NavigationOutcome:
    """Resolve endpoints via the model, then compute the key-press route."""
    cursor_label = tree.resolve(cursor.address).label
    prompt = Prompt(
        system=render_template(
            "navigation_v1",
            tree_text=tree.tree_text,
            cursor_label=cursor_label,
            cursor_address=cursor.address,
            query=query_text,
        ),
        user=query_text,
    )
    text = gateway.complete(prompt).text or ""
    if text.strip() == "ORIENTATION":
        return NavigationOutcome(body=orient(tree, cursor))
    if text.strip() == "NONE":
        return NavigationOutcome(body=NAV_FAILURE, failed=True)

    addresses = {kind: addr for kind, addr in _ADDRESS.findall(text)}
    end = addresses.get("Ending")
    start = addresses.get("Starting") or cursor.address
    if end is None:
        return NavigationOutcome(body=NAV_FAILURE, failed=True)
    try:
        tree.resolve(start)
        tree.resolve(end)
    except UnknownAddressError:
        return NavigationOutcome(body=NAV_FAILURE, failed=True)

    if auto:
        new_cursor, script = auto_traverse(tree, Cursor(cursor.session, start), end)
        body = (
            f"Moved you to: {tree.resolve(end).label} "
            f"(equivalent key presses: {script.spoken})"
        )
        return NavigationOutcome(
            body=body, script=script, start_address=start, end_address=end, cursor=new_cursor
        )

    script = coalesce(shortest_path(tree, start, end))
    return NavigationOutcome(
        body=script.spoken, script=script, start_address=start, end_address=end
    )


def suggest_alternatives(
    gateway: Gateway, query_text: str, error_text: str, tree_text: str
) -> list:
    """Two rephrasings of a failed query; empty list when unavailable."""
    prompt = Prompt(
        system=render_template(
            "suggest_v1", tree_text=tree_text, query=query_text, error_text=error_text
        ),
        user=query_text,
    )
    try:
        parsed = _parse_suggestions(gateway.complete(prompt).text or "")
        if parsed is not None:
            return parsed
        retry = Prompt(
            system=prompt.system
            + "\nYour previous response did not contain exactly two numbered questions.",
            user=prompt.user,
        )
        parsed = _parse_suggestions(gateway.complete(retry).text or "")
        return parsed if parsed is not None else []
    except GatewayError:
        return []


def _parse_suggestions(text: str) -> Optional[list]:
    found = {}
    for number, body in _SUGGESTION_LINE.findall(text):
        found.setdefault(number, body.strip())
    if set(found) == {"1", "2"} and found["1"] and found["2"] and found["1"] != found["2"]:
        return [found["1"], found["2"]]
    return None


def cold_start_suggestions(gateway: Gateway, tree_text: str) -> list:
    """Four starter queries, one per type; generic fallbacks on failure."""
    prompt = Prompt(
        system=render_template("cold_start_v1", tree_text=tree_text),
        user="Generate the four initial queries.",
    )
    try:
        text = gateway.complete(prompt).text or ""
    except GatewayError:
        return list(FALLBACK_SUGGESTIONS)
    found = {label: question for label, question in _COLD_LINE.findall(text)}
    expected = ("Analytical", "Visual", "Contextual", "Navigation")
    if all(found.get(label) for label in expected):
        return [found[label] for label in expected]
    return list(FALLBACK_SUGGESTIONS)


def justify(
    answer_body: str,
    kind: QueryType,
    query_echo: str,
    suggestions=(),
    instruction_script: Optional[InstructionScript] = None,
) -> Answer:
    justification = f"Your question '{query_echo}' was {_JUSTIFICATION[kind]}."
    return Answer(
        query_echo=query_echo,
        justification=justification,
        body=answer_body,
        kind=kind,
        suggestions=tuple(suggestions),
        instruction_script=instruction_script,
    )
