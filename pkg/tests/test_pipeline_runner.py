from __future__ import annotations

import pytest

from chartnav.context import ChartContext
from chartnav.gateway import FailingProvider, Gateway, HashedEmbedder, ScriptedProvider
from chartnav.pipeline import (
    APOLOGY,
    ExampleBank,
    NAV_DISABLED,
    QueryPipeline,
    QueryType,
    TERMINATION_MESSAGE,
    UserQuery,
    looks_like_failure,
)

from conftest import CHART_DIR


@pytest.fixture(scope="module")
def bank():
    from importlib import resources

    path = resources.files("chartnav.data").joinpath("example_bank.jsonl")
    return ExampleBank.load_jsonl(str(path), HashedEmbedder())


@pytest.fixture(scope="module")
def map_context():
    return ChartContext.load(str(CHART_DIR / "map.json"))


def pipeline_with(map_context, bank, rules, web_rules=None, **kwargs):
    provider = ScriptedProvider(rules, web_rules or [])
    gw = Gateway(mode="live", provider=provider)
    return QueryPipeline(gw, map_context, bank, **kwargs)


BASE_RULES = [
    ("Rewrite the user's question", lambda m: "refined question"),
]


def test_analytical_route_end_to_end(map_context, bank):
    rules = [
        ("Rewrite the user's question", "What is the vaccination rate of South Africa?"),
        ("Classify the user query", "Analytical Query"),
        (r"Observation: Country.*South Africa,Africa,36", "Answer: The vaccination rate for South Africa is 36%"),
        (
            "transformed data table",
            'Action: filter\nAction Input: {"column": "Country", "op": "==", "value": "South Africa"}',
        ),
    ]
    pipe = pipeline_with(map_context, bank, rules)
    answer = pipe.run(UserQuery(text="What is the vaccination rate of South Africa"))
    assert answer.kind is QueryType.ANALYTICAL
    assert answer.body == "The vaccination rate for South Africa is 36%"
    assert answer.query_echo == "What is the vaccination rate of South Africa"
    assert answer.suggestions == ()
    assert "underlying data" in answer.justification


def test_navigation_route_with_script(map_context, bank):
    rules = BASE_RULES + [
        ("Classify the user query", "Navigation Query"),
        (
            "Identify the starting and ending nodes",
            "Ending Point: Haiti\nEnding Address: 1.2.3\n",
        ),
    ]
    pipe = pipeline_with(map_context, bank, rules)
    answer = pipe.run(UserQuery(text="Take me to Haiti", cursor_address="1"))
    assert answer.kind is QueryType.NAVIGATION
    assert answer.instruction_script is not None
    assert answer.body == answer.instruction_script.spoken


def test_navigation_disabled_in_table_mode(map_context, bank):
    rules = BASE_RULES + [("Classify the user query", "Navigation Query")]
    pipe = pipeline_with(map_context, bank, rules)
    answer = pipe.run(UserQuery(text="Take me to Haiti", table_mode=True))
    assert answer.kind is QueryType.NAVIGATION
    assert answer.body == NAV_DISABLED
    assert answer.suggestions == ()


def test_unanswerable_gets_apology_and_suggestions(map_context, bank):
    rules = BASE_RULES + [
        ("Classify the user query", APOLOGY),
        ("Generate two new questions", "1. Option one?\n2. Option two?"),
    ]
    pipe = pipeline_with(map_context, bank, rules)
    answer = pipe.run(UserQuery(text="What kind of vaccine they used?"))
    assert answer.kind is QueryType.UNANSWERABLE
    assert answer.body == APOLOGY
    assert answer.suggestions == ("Option one?", "Option two?")


def test_agent_timeout_emits_termination_message(map_context, bank):
    rules = BASE_RULES + [
        ("Classify the user query", "Analytical Query"),
        ("transformed data table", 'Action: describe\nAction Input: {}'),
        ("Generate two new questions", "1. Simpler question?\n2. Another question?"),
    ]
    pipe = pipeline_with(map_context, bank, rules, agent_max_steps=2)
    answer = pipe.run(UserQuery(text="Impossible computation"))
    assert answer.body == TERMINATION_MESSAGE
    assert answer.suggestions == ("Simpler question?", "Another question?")


def test_contextual_route(map_context, bank):
    rules = BASE_RULES + [
        ("Classify the user query", "Contextual Query"),
        ("Answer the user's question using the web result", "Temperature anomalies are unusual temperatures."),
    ]
    web = [(".*", "anomaly: departure from normal")]
    pipe = pipeline_with(map_context, bank, rules, web_rules=web)
    answer = pipe.run(UserQuery(text="What do you mean by temperature anomalies"))
    assert answer.kind is QueryType.CONTEXTUAL
    assert "found on the web" in answer.justification


def test_refine_failure_degrades_and_warns(map_context, bank):
    events = []
    provider = ScriptedProvider(
        [
            ("Classify the user query", "Analytical Query"),
            ("transformed data table", "Answer: fine"),
        ]
    )
    original_complete = provider.complete

    def flaky(rendered, timeout):
        if "Rewrite the user's question" in rendered:
            raise RuntimeError("boom")
        return original_complete(rendered, timeout)

    provider.complete = flaky
    gw = Gateway(mode="live", provider=provider)
    pipe = QueryPipeline(gw, map_context, bank, on_event=lambda k, m: events.append((k, m)))
    answer = pipe.run(UserQuery(text="highest rate?"))
    assert answer.body == "fine"
    assert any(k == "warning" and "refinement" in m for k, m in events)


def test_total_failure_still_returns_answer(map_context, bank):
    gw = Gateway(mode="live", provider=FailingProvider())
    pipe = QueryPipeline(gw, map_context, bank)
    answer = pipe.run(UserQuery(text="anything at all"))
    assert answer.kind is QueryType.UNANSWERABLE
    assert looks_like_failure(answer.body)
    assert answer.suggestions == ()  # suggestion call also failed; no crash


def test_body_numbers_formatted(map_context, bank):
    rules = BASE_RULES + [
        ("Classify the user query", "Analytical Query"),
        ("transformed data table", "Answer: The total is 1400000 homes."),
    ]
    pipe = pipeline_with(map_context, bank, rules)
    answer = pipe.run(UserQuery(text="total homes?"))
    assert answer.body == "The total is 1,400,000 homes."


def test_routing_soundness(map_context, bank):
    for label, expected in [
        ("Analytical Query", QueryType.ANALYTICAL),
        ("Visual Query", QueryType.VISUAL),
        ("Contextual Query", QueryType.CONTEXTUAL),
        ("Navigation Query", QueryType.NAVIGATION),
    ]:
        rules = BASE_RULES + [
            ("Classify the user query", label),
            ("transformed data table", "Answer: data answer"),
            ("Answer the user's question using the web result", "web answer"),
            ("Identify the starting and ending nodes", "Ending Point: x\nEnding Address: 1.1\n"),
        ]
        pipe = pipeline_with(map_context, bank, rules, web_rules=[(".*", "snippet")])
        answer = pipe.run(UserQuery(text="anything"))
        assert answer.kind is expected


def test_cold_start_via_pipeline(map_context, bank):
    rules = BASE_RULES + [
        (
            "Pretend you are a blind/low vision user",
            "Analytical: A?\nVisual: B?\nContextual: C?\nNavigation: D?",
        ),
    ]
    pipe = pipeline_with(map_context, bank, rules)
    assert pipe.suggestions() == ["A?", "B?", "C?", "D?"]
