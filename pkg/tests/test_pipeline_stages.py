from __future__ import annotations

import pytest

from chartnav.context import ChartContext
from chartnav.errors import AgentLoopTimeout, FormatError, InsufficientBankError
from chartnav.gateway import FailingProvider, Gateway, HashedEmbedder, ScriptedProvider
from chartnav.nav import Cursor, Key
from chartnav.pipeline import (
    APOLOGY,
    FALLBACK_SUGGESTIONS,
    ExampleBank,
    QueryType,
    TableFrame,
    answer_contextual,
    answer_navigation,
    classify,
    cold_start_suggestions,
    justify,
    parse_query_type,
    refine_query,
    run_tabular_agent,
    select_examples,
    suggest_alternatives,
)
from chartnav.gateway.embeddings import cosine_similarity

from conftest import CHART_DIR


def live_gateway(rules=None, web_rules=None) -> Gateway:
    return Gateway(mode="live", provider=ScriptedProvider(rules or [], web_rules or []))


def failing_gateway() -> Gateway:
    return Gateway(mode="live", provider=FailingProvider())


@pytest.fixture(scope="module")
def bank():
    from importlib import resources

    path = resources.files("chartnav.data").joinpath("example_bank.jsonl")
    return ExampleBank.load_jsonl(str(path), HashedEmbedder())


@pytest.fixture(scope="module")
def map_context():
    return ChartContext.load(str(CHART_DIR / "map.json"))


# -- select_examples -----------------------------------------------------------

def test_identical_query_ranks_its_entry_first(bank):
    gw = live_gateway()
    query = "Take me to Haiti"
    selected = select_examples(query, bank, 4, gw)
    navigation = [e for e in selected if e.type_label is QueryType.NAVIGATION]
    assert navigation[0].question == query


def test_k4_yields_16_examples(bank):
    selected = select_examples("What is the highest value?", bank, 4, live_gateway())
    assert len(selected) == 16
    by_type: dict = {}
    for entry in selected:
        by_type.setdefault(entry.type_label, []).append(entry)
    assert all(len(entries) == 4 for entries in by_type.values())


def test_selection_matches_bruteforce_on_toy_bank():
    embedder = HashedEmbedder()
    pairs = [
        ("mean of value", "analytical"),
        ("sum of everything", "analytical"),
        ("what color is it", "visual"),
        ("how dark is the shade", "visual"),
        ("define anomaly", "contextual"),
        ("where does data come from", "contextual"),
        ("take me home", "navigation"),
        ("where am I", "navigation"),
    ]
    bank8 = ExampleBank.from_pairs(pairs, embedder)
    gw = live_gateway()
    query = "what is the mean value"
    selected = select_examples(query, bank8, 2, gw)

    # exhaustive scoring oracle
    qv = embedder.embed(query)
    expected = []
    for t in (QueryType.ANALYTICAL, QueryType.VISUAL, QueryType.CONTEXTUAL, QueryType.NAVIGATION):
        cands = bank8.of_type(t)
        ranked = sorted(
            range(len(cands)),
            key=lambda i: (-cosine_similarity(qv, cands[i].embedding), i),
        )
        expected.extend(cands[i].question for i in ranked[:2])
    assert [e.question for e in selected] == expected


def test_insufficient_bank_errors():
    bank2 = ExampleBank.from_pairs(
        [("q1", "analytical"), ("q2", "visual")], HashedEmbedder()
    )
    with pytest.raises(InsufficientBankError):
        select_examples("anything", bank2, 1, live_gateway())


# -- classify --------------------------------------------------------------------

def test_classify_paper_examples(bank):
    cases = [
        ("What's the correlation between GDP per capita and population?", "Analytical Query", QueryType.ANALYTICAL),
        ("Take me to Haiti", "Navigation Query", QueryType.NAVIGATION),
        ("What is a choropleth map?", "Contextual Query", QueryType.CONTEXTUAL),
        ("What color is North America?", "Visual Query", QueryType.VISUAL),
    ]
    for query, model_output, expected in cases:
        gw = live_gateway([("Classify the user query", model_output)])
        examples = select_examples(query, bank, 4, gw)
        assert classify(query, examples, gw) is expected


def test_apology_maps_to_unanswerable(bank):
    gw = live_gateway([("Classify the user query", APOLOGY)])
    examples = select_examples("What kind of vaccine they used?", bank, 4, gw)
    assert classify("What kind of vaccine they used?", examples, gw) is QueryType.UNANSWERABLE


def test_unparseable_then_reask(bank):
    provider = ScriptedProvider(
        [
            ("did not follow the required format", "Visual Query"),
            ("Classify the user query", "hmm, interesting question!"),
        ]
    )
    gw = Gateway(mode="live", provider=provider)
    examples = select_examples("q", bank, 4, gw)
    assert classify("q", examples, gw) is QueryType.VISUAL
    assert len([c for c in provider.calls if c[0] == "complete"]) == 2


def test_unparseable_after_reask_raises(bank):
    gw = live_gateway([("Classify the user query|required format", "no idea")])
    examples = select_examples("q", bank, 4, gw)
    with pytest.raises(FormatError):
        classify("q", examples, gw)


def test_parse_query_type_ambiguous_is_none():
    assert parse_query_type("Analytical Query or Visual Query") is None
    assert parse_query_type("Navigation Query") is QueryType.NAVIGATION


# -- refine_query ------------------------------------------------------------------

def test_refine_returns_model_text(map_context):
    refined_text = (
        "Which countries in North America have a percentage of fully "
        "vaccinated individuals below 80%"
    )
    gw = live_gateway([("Rewrite the user's question", refined_text)])
    refined, warning = refine_query(
        gw, "What parts of North America are not in the 80 to 100 percent range",
        map_context.prompt_tree_text(),
    )
    assert refined == refined_text
    assert warning is None


def test_refine_degrades_to_raw_on_failure(map_context):
    raw = "What parts of North America are not in the 80 to 100 percent range"
    refined, warning = refine_query(failing_gateway(), raw, map_context.prompt_tree_text())
    assert refined == raw
    assert warning is not None


# -- answer_contextual ----------------------------------------------------------------

def test_contextual_composes_web_snippet(map_context):
    gw = live_gateway(
        rules=[("Answer the user's question using the web result", "A choropleth map shades regions by value.")],
        web_rules=[("choropleth", "A choropleth map is a map with shaded regions.")],
    )
    body = answer_contextual(gw, "What is a choropleth map?", map_context.prompt_tree_text())
    assert body == "A choropleth map shades regions by value."


def test_contextual_empty_lookup(map_context):
    gw = live_gateway(web_rules=[(".*", "")])
    body = answer_contextual(gw, "What is X?", map_context.prompt_tree_text())
    assert "could not find any external information" in body


# -- answer_navigation ------------------------------------------------------------------

def test_navigation_with_explicit_endpoints(map_chart):
    _, _, _, tree = map_chart
    completion = (
        "Starting Point: A choropleth map\n"
        "Starting Address: 1\n"
        "Ending Point: 3 of 180. Country equals Haiti. 1 value. Press t to open table.\n"
        "Ending Address: 1.2.3\n"
    )
    gw = live_gateway([("Identify the starting and ending nodes", completion)])
    outcome = answer_navigation(gw, "path to Haiti", tree, Cursor(session="s", address="1"))
    assert not outcome.failed
    assert outcome.start_address == "1" and outcome.end_address == "1.2.3"
    assert outcome.script.expand()[0] in (Key.DOWN,)
    assert outcome.body == outcome.script.spoken


def test_navigation_absent_start_uses_cursor(map_chart):
    _, _, _, tree = map_chart
    completion = "Ending Point: Guam leaf\nEnding Address: 1.2.1.1\n"
    gw = live_gateway([("Identify the starting and ending nodes", completion)])
    outcome = answer_navigation(gw, "Take me to Guam", tree, Cursor(session="s", address="1.1"))
    assert outcome.start_address == "1.1"
    assert outcome.body == "Press the right arrow key. Press the down arrow key 2 times."


def test_navigation_unresolved_yields_failure_message(map_chart):
    _, _, _, tree = map_chart
    gw = live_gateway([("Identify the starting and ending nodes", "NONE")])
    outcome = answer_navigation(gw, "go somewhere", tree, Cursor(session="s"))
    assert outcome.failed
    assert "no starting/ending point was provided" in outcome.body


def test_navigation_same_endpoints_already_there(map_chart):
    _, _, _, tree = map_chart
    completion = (
        "Starting Point: x\nStarting Address: 1.2.3\n"
        "Ending Point: x\nEnding Address: 1.2.3\n"
    )
    gw = live_gateway([("Identify the starting and ending nodes", completion)])
    outcome = answer_navigation(gw, "go to Haiti", tree, Cursor(session="s", address="1.2.3"))
    assert outcome.body == "You are already there."


def test_navigation_auto_traverse_moves_cursor(map_chart):
    _, _, _, tree = map_chart
    completion = "Ending Point: Haiti\nEnding Address: 1.2.3\n"
    gw = live_gateway([("Identify the starting and ending nodes", completion)])
    outcome = answer_navigation(
        gw, "Take me to Haiti", tree, Cursor(session="s", address="1"), auto=True
    )
    assert outcome.cursor is not None and outcome.cursor.address == "1.2.3"
    assert "Country equals Haiti" in outcome.body


# -- agent loop ------------------------------------------------------------------------

AGENT_MARKER = "transformed data table"


def small_table():
    return TableFrame(columns=("Country", "Rate"), rows=(("A", 10.0), ("B", 20.0), ("C", 60.0)))


def test_agent_runs_action_then_answers(map_context):
    provider = ScriptedProvider(
        [
            (
                r"Observation: 30",
                "Thought: computed.\nAnswer: The mean rate is 30.",
            ),
            (
                AGENT_MARKER,
                'Thought: need the mean.\nAction: aggregate\nAction Input: {"op": "mean", "column": "Rate"}',
            ),
        ]
    )
    gw = Gateway(mode="live", provider=provider)
    body = run_tabular_agent(gw, "mean rate?", "csv", "tree", "root", small_table())
    assert body == "The mean rate is 30."


def test_agent_malformed_then_corrected():
    provider = ScriptedProvider(
        [
            ("must follow the structure", "Answer: Fixed."),
            (AGENT_MARKER, "I think the answer is three."),
        ]
    )
    gw = Gateway(mode="live", provider=provider)
    body = run_tabular_agent(gw, "q", "csv", "tree", "root", small_table())
    assert body == "Fixed."


def test_agent_malformed_twice_raises_format_error():
    provider = ScriptedProvider([(AGENT_MARKER, "still not following any format")])
    gw = Gateway(mode="live", provider=provider)
    with pytest.raises(FormatError):
        run_tabular_agent(gw, "q", "csv", "tree", "root", small_table())


def test_agent_step_budget_timeout():
    provider = ScriptedProvider(
        [(AGENT_MARKER, 'Thought: loop.\nAction: describe\nAction Input: {}')]
    )
    gw = Gateway(mode="live", provider=provider)
    with pytest.raises(AgentLoopTimeout):
        run_tabular_agent(gw, "q", "csv", "tree", "root", small_table(), max_steps=3)


def test_agent_wall_clock_timeout():
    provider = ScriptedProvider(
        [(AGENT_MARKER, 'Action: describe\nAction Input: {}')], delay=0.05
    )
    gw = Gateway(mode="live", provider=provider)
    with pytest.raises(AgentLoopTimeout):
        run_tabular_agent(gw, "q", "csv", "tree", "root", small_table(), wall_clock=0.08)


def test_agent_tool_error_becomes_observation():
    provider = ScriptedProvider(
        [
            ("error: unknown column", "Answer: recovered"),
            (AGENT_MARKER, 'Action: unique\nAction Input: {"column": "nope"}'),
        ]
    )
    gw = Gateway(mode="live", provider=provider)
    assert run_tabular_agent(gw, "q", "csv", "tree", "root", small_table()) == "recovered"


# -- suggestions ---------------------------------------------------------------------

def test_suggest_alternatives_two_questions(map_context):
    completion = "1. What fields does the dataset contain?\n2. What is the highest rate?"
    gw = live_gateway([("Generate two new questions", completion)])
    out = suggest_alternatives(gw, "Where are these houses sold?", "no info", map_context.prompt_tree_text())
    assert out == ["What fields does the dataset contain?", "What is the highest rate?"]


def test_suggest_alternatives_reask_then_empty(map_context):
    provider = ScriptedProvider([("Generate two new questions", "1. only one")])
    gw = Gateway(mode="live", provider=provider)
    out = suggest_alternatives(gw, "q", "err", map_context.prompt_tree_text())
    assert out == []
    assert len(provider.calls) == 2  # one corrective re-ask happened


def test_suggest_alternatives_gateway_failure(map_context):
    assert suggest_alternatives(failing_gateway(), "q", "err", map_context.prompt_tree_text()) == []


def test_suggestions_nonempty_distinct(map_context):
    completion = "1. Ask about A?\n2. Ask about B?"
    gw = live_gateway([("Generate two new questions", completion)])
    out = suggest_alternatives(gw, "q", "e", map_context.prompt_tree_text())
    assert len(out) == 2 and out[0] != out[1] and all(out)


def test_cold_start_four_one_per_type(map_context):
    completion = (
        "Analytical: What is the highest vaccination rate?\n"
        "Visual: What color is the highest range?\n"
        "Contextual: What does fully vaccinated mean?\n"
        "Navigation: How do I reach the country list?"
    )
    gw = live_gateway([("Pretend you are a blind/low vision user", completion)])
    out = cold_start_suggestions(gw, map_context.prompt_tree_text())
    assert len(out) == 4
    assert out[0] == "What is the highest vaccination rate?"


def test_cold_start_fallback_on_failure(map_context):
    out = cold_start_suggestions(failing_gateway(), map_context.prompt_tree_text())
    assert out == list(FALLBACK_SUGGESTIONS)
    assert len(out) == 4


# -- justify -----------------------------------------------------------------------

def test_contextual_justification_mentions_web():
    answer = justify("body", QueryType.CONTEXTUAL, "What is a choropleth map?")
    assert answer.justification == (
        "Your question 'What is a choropleth map?' was categorized as being "
        "context-seeking, and as such, has been answered based on information "
        "found on the web."
    )


def test_analytical_justification_mentions_data():
    answer = justify("body", QueryType.ANALYTICAL, "q")
    assert "chart's underlying data" in answer.justification


def test_navigation_answer_carries_script():
    from chartnav.nav import coalesce

    script = coalesce([Key.RIGHT, Key.RIGHT])
    answer = justify(script.spoken, QueryType.NAVIGATION, "q", instruction_script=script)
    assert answer.instruction_script is script
    assert answer.body == "Press the right arrow key 2 times."
    assert "tree view" in answer.justification
