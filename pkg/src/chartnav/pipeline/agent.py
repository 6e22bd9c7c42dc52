"""Bounded tool-calling loop for analytical and visual queries.

Each turn the model emits Thought / Action / Action Input; the host runs
the action against the in-memory table and appends an Observation. The
loop ends at a line starting "Answer:" or when the step or wall-clock
budget runs out.
"""

from __future__ import annotations

import json
import re
import time
from typing import Optional

from ..errors import AgentLoopTimeout, FormatError, GatewayTimeout
from ..gateway.core import Gateway, Prompt
from .prompts import render_template
from .tools import TOOL_NAMES, TableFrame, observation_text, run_tool

MAX_STEPS = 15
WALL_CLOCK_SECONDS = 60.0

TERMINATION_MESSAGE = (
    "I'm sorry, but the process has been terminated because it took too long "
    "to arrive at an answer."
)

FORMAT_REMINDER = (
    "You must follow the structure of Observation, Thought, Action, "
    "Action Input, etc."
)

_ANSWER = re.compile(r"^Answer:\s*(.*)", re.MULTILINE | re.DOTALL)
_ACTION = re.compile(r"^Action:\s*(\S+)\s*$", re.MULTILINE)
_ACTION_INPUT = re.compile(r"^Action Input:\s*(.*)$", re.MULTILINE)


def run_tabular_agent(
    gateway: Gateway,
    query_text: str,
    csv_text: str,
    tree_text: str,
    cursor_label: str,
    table: TableFrame,
    max_steps: int = MAX_STEPS,
    wall_clock: float = WALL_CLOCK_SECONDS,
) -> str:
    """Answer a data/visual question; raises AgentLoopTimeout past budget."""
    started = time.monotonic()
    scratchpad = ""
    corrected = False

    for _ in range(max_steps):
        remaining = wall_clock - (time.monotonic() - started)
        if remaining <= 0:
            raise AgentLoopTimeout("wall clock budget exhausted")

        prompt = Prompt(
            system=render_template(
                "tabular_agent_v1",
                csv=csv_text,
                tree_text=tree_text,
                cursor_label=cursor_label,
                query=query_text,
                scratchpad=scratchpad,
            ),
            user=query_text,
        )
        try:
            completion = gateway.complete(prompt, timeout=remaining)
        except GatewayTimeout as exc:
            raise AgentLoopTimeout(str(exc)) from exc
        text = completion.text or ""

        answer = _ANSWER.search(text)
        if answer:
            return answer.group(1).strip()

        parsed = _parse_action(text)
        if parsed is None:
            if corrected:
                raise FormatError(f"malformed agent output after re-prompt: {text!r}")
            corrected = True
            scratchpad += f"\n{text}\nObservation: {FORMAT_REMINDER}\n"
            continue

        action, args = parsed
        try:
            result, table = run_tool(table, action, args)
            observation = observation_text(result)
        except Exception as exc:
            observation = f"error: {exc}"
        scratchpad += f"\n{text}\nObservation: {observation}\n"

    raise AgentLoopTimeout(f"no answer after {max_steps} steps")


def _parse_action(text: str) -> Optional[tuple]:
    action_match = _ACTION.search(text)
    input_match = _ACTION_INPUT.search(text)
    if not action_match or not input_match:
        return None
    action = action_match.group(1).strip().lower()
    if action not in TOOL_NAMES:
        return None
    raw = input_match.group(1).strip()
    if not raw:
        return action, {}
    try:
        args = json.loads(raw)
    except json.JSONDecodeError:
        # tolerate a bare expression for calc
        if action == "calc":
            return action, {"expression": raw}
        return None
    if not isinstance(args, dict):
        return None
    return action, args
