"""End-to-end query answering: refine, classify, dispatch, format, justify.

Every user query yields an Answer; failures become answer bodies with two
alternative-query suggestions attempted, never unhandled exceptions.
"""

from __future__ import annotations

from typing import Callable, Optional

from ..context import ChartContext
from ..errors import (
    AgentLoopTimeout,
    ChartNavError,
    FormatError,
    GatewayError,
    GatewayTimeout,
)
from ..gateway.core import Gateway
from ..nav.engine import Cursor
from .agent import TERMINATION_MESSAGE, run_tabular_agent
from .answers import (
    GENERIC_FAILURE,
    NAV_DISABLED,
    answer_contextual,
    answer_navigation,
    cold_start_suggestions,
    justify,
    refine_query,
    suggest_alternatives,
)
from .classify import APOLOGY, classify, select_examples
from .formatting import format_numbers
from .tools import TableFrame
from .types import Answer, ExampleBank, QueryType, UserQuery

FAILURE_MARKERS = (
    "has been terminated",
    "i am sorry",
    "i'm sorry",
    "cannot answer",
    "unable to answer",
    "no answer can be found",
    "does not contain any information",
    "no starting/ending point",
    "could not find any external information",
)


def looks_like_failure(body: str) -> bool:
    if not body.strip():
        return True
    lowered = body.lower()
    return any(marker in lowered for marker in FAILURE_MARKERS)


class QueryPipeline:
    def __init__(
        self,
        gateway: Gateway,
        context: ChartContext,
        bank: ExampleBank,
        examples_per_type: int = 4,
        auto_traverse: bool = False,
        agent_max_steps: int = 15,
        agent_wall_clock: float = 60.0,
        on_event: Optional[Callable] = None,
    ):
        self.gateway = gateway
        self.context = context
        self.bank = bank
        self.examples_per_type = examples_per_type
        self.auto_traverse = auto_traverse
        self.agent_max_steps = agent_max_steps
        self.agent_wall_clock = agent_wall_clock
        self.on_event = on_event
        self.last_cursor: Optional[Cursor] = None  # set by auto-traversed answers

    # -- public entry points ------------------------------------------------

    def run(self, query: UserQuery) -> Answer:
        try:
            return self._run(query)
        except ChartNavError as exc:
            self._emit("error", str(exc))
            suggestions = self._suggestions_for(query.text, str(exc))
            return justify(GENERIC_FAILURE, QueryType.UNANSWERABLE, query.text, suggestions)

    def suggestions(self) -> list:
        return cold_start_suggestions(self.gateway, self.context.prompt_tree_text())

    # -- stages ---------------------------------------------------------------

    def _run(self, query: UserQuery) -> Answer:
        tree_text = self.context.prompt_tree_text()
        self.last_cursor = None

        refined, warning = refine_query(self.gateway, query.text, tree_text)
        if warning:
            self._emit("warning", warning)

        try:
            examples = select_examples(refined, self.bank, self.examples_per_type, self.gateway)
            kind = classify(refined, examples, self.gateway)
        except (FormatError, GatewayError) as exc:
            self._emit("warning", f"classification failed: {exc}")
            kind = QueryType.UNANSWERABLE

        script = None
        if kind is QueryType.UNANSWERABLE:
            body = APOLOGY
        elif kind is QueryType.NAVIGATION:
            body, script = self._navigation(query, refined)
        elif kind is QueryType.CONTEXTUAL:
            body = self._contextual(refined, tree_text)
        else:
            body = self._tabular(query, refined, tree_text)

        body = format_numbers(body)
        suggestions = ()
        if looks_like_failure(body):
            suggestions = self._suggestions_for(query.text, body)
        return justify(body, kind, query.text, suggestions, script)

    def _navigation(self, query: UserQuery, refined: str):
        if query.table_mode:
            return NAV_DISABLED, None
        cursor = Cursor(session=query.session, address=query.cursor_address)
        outcome = answer_navigation(
            self.gateway, refined, self.context.tree, cursor, auto=self.auto_traverse
        )
        if outcome.cursor is not None:
            self.last_cursor = outcome.cursor
        return outcome.body, outcome.script

    def _contextual(self, refined: str, tree_text: str) -> str:
        try:
            return answer_contextual(self.gateway, refined, tree_text)
        except GatewayTimeout:
            return TERMINATION_MESSAGE
        except GatewayError as exc:
            self._emit("warning", f"contextual answer failed: {exc}")
            return GENERIC_FAILURE

    def _tabular(self, query: UserQuery, refined: str, tree_text: str) -> str:
        cursor_label = self.context.tree.resolve(query.cursor_address).label
        table = TableFrame.from_view(self.context.view, self.context.color_names)
        try:
            return run_tabular_agent(
                self.gateway,
                refined,
                self.context.csv,
                tree_text,
                cursor_label,
                table,
                max_steps=self.agent_max_steps,
                wall_clock=self.agent_wall_clock,
            )
        except AgentLoopTimeout:
            return TERMINATION_MESSAGE
        except FormatError as exc:
            self._emit("warning", f"agent format error: {exc}")
            return GENERIC_FAILURE

    def _suggestions_for(self, query_text: str, error_text: str) -> tuple:
        return tuple(
            suggest_alternatives(
                self.gateway, query_text, error_text, self.context.prompt_tree_text()
            )
        )

    def _emit(self, kind: str, message: str) -> None:
        if self.on_event is not None:
            self.on_event(kind, message)
