"""Classified, agent-routed query answering over a loaded chart."""

from .agent import TERMINATION_MESSAGE, run_tabular_agent
from .answers import (
    FALLBACK_SUGGESTIONS,
    GENERIC_FAILURE,
    NAV_DISABLED,
    NAV_FAILURE,
    answer_contextual,
    answer_navigation,
    cold_start_suggestions,
    justify,
    refine_query,
    suggest_alternatives,
)
from .classify import APOLOGY, classify, parse_query_type, select_examples
from .formatting import format_numbers
from .runner import QueryPipeline, looks_like_failure
from .tools import TableFrame
from .types import Answer, BankEntry, ExampleBank, QueryType, UserQuery

__all__ = [
    "APOLOGY",
    "Answer",
    "BankEntry",
    "ExampleBank",
    "FALLBACK_SUGGESTIONS",
    "GENERIC_FAILURE",
    "NAV_DISABLED",
    "NAV_FAILURE",
    "QueryPipeline",
    "QueryType",
    "TERMINATION_MESSAGE",
    "TableFrame",
    "UserQuery",
    "answer_contextual",
    "answer_navigation",
    "classify",
    "cold_start_suggestions",
    "format_numbers",
    "justify",
    "looks_like_failure",
    "parse_query_type",
    "refine_query",
    "run_tabular_agent",
    "select_examples",
    "suggest_alternatives",
]
