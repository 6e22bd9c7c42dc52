from __future__ import annotations

import random

import pytest

from chartnav.errors import UnknownColumnError
from chartnav.pipeline.tools import (
    TableFrame,
    observation_text,
    run_tool,
    tool_aggregate,
    tool_calc,
    tool_describe,
    tool_filter,
    tool_head,
    tool_sort,
    tool_unique,
)

CATEGORIES = ("north", "south", "east", "west", "center")


@pytest.fixture(scope="module")
def table100():
    rng = random.Random(424242)
    columns = ("id", "region", "value", "score")
    rows = tuple(
        (i, rng.choice(CATEGORIES), round(rng.uniform(-50, 150), 2), rng.randint(0, 9))
        for i in range(100)
    )
    return TableFrame(columns=columns, rows=rows)


def test_filter_matches_bruteforce(table100):
    cases = [("value", ">", 100.0), ("value", "<=", 0.0), ("region", "==", "north"), ("score", "!=", 3)]
    for column, op, value in cases:
        result = tool_filter(table100, column, op, value)
        i = table100.index(column)

        def keep(cell):
            if op == ">":
                return cell > value
            if op == "<=":
                return cell <= value
            if op == "==":
                return cell == value
            return cell != value

        expected = tuple(r for r in table100.rows if keep(r[i]))
        assert result.rows == expected


def test_aggregate_matches_bruteforce(table100):
    values = [r[2] for r in table100.rows]
    assert tool_aggregate(table100, "count", "value") == len(values)
    assert tool_aggregate(table100, "sum", "value") == pytest.approx(sum(values))
    assert tool_aggregate(table100, "min", "value") == min(values)
    assert tool_aggregate(table100, "max", "value") == max(values)
    assert tool_aggregate(table100, "mean", "value") == pytest.approx(
        sum(values) / len(values), rel=1e-9
    )


def test_aggregate_by_group_matches_bruteforce(table100):
    result = tool_aggregate(table100, "mean", "value", by="region")
    groups: dict = {}
    for r in table100.rows:
        groups.setdefault(r[1], []).append(r[2])
    assert set(result) == set(groups)
    for region, values in groups.items():
        assert result[region] == pytest.approx(sum(values) / len(values), rel=1e-9)


def test_sort_matches_bruteforce(table100):
    result = tool_sort(table100, "value", "desc")
    assert [r[2] for r in result.rows] == sorted((r[2] for r in table100.rows), reverse=True)
    assert sorted(result.rows) == sorted(table100.rows)  # permutation


def test_head_matches_bruteforce(table100):
    assert tool_head(table100, 7).rows == table100.rows[:7]
    assert tool_head(table100, 0).rows == ()
    assert tool_head(table100, 1000).rows == table100.rows


def test_unique_matches_bruteforce(table100):
    result = tool_unique(table100, "region")
    seen: list = []
    for r in table100.rows:
        if r[1] not in seen:
            seen.append(r[1])
    assert result == seen


def test_describe_matches_bruteforce(table100):
    result = tool_describe(table100)
    values = [r[2] for r in table100.rows]
    assert result["rows"] == 100
    assert result["value"]["min"] == min(values)
    assert result["value"]["max"] == max(values)
    assert result["value"]["mean"] == pytest.approx(sum(values) / len(values), rel=1e-9)
    assert result["region"]["distinct"] == len(set(r[1] for r in table100.rows))


def test_mean_of_three_row_fixture():
    table = TableFrame(columns=("value",), rows=((2.0,), (3.0,), (10.0,)))
    # hand-computed mean oracle: (2 + 3 + 10) / 3 = 5
    assert tool_aggregate(table, "mean", "value") == pytest.approx(5.0)


def test_calc_arithmetic():
    assert tool_calc("(3 + 4) / 2") == pytest.approx(3.5)
    assert tool_calc("-2 ** 3") == pytest.approx(-8)
    with pytest.raises(ValueError):
        tool_calc("__import__('os')")
    with pytest.raises(ValueError):
        tool_calc("open('x')")


def test_unknown_column_errors(table100):
    with pytest.raises(UnknownColumnError):
        tool_filter(table100, "nope", "==", 1)


def test_run_tool_dispatch_and_observation(table100):
    result, next_table = run_tool(table100, "filter", {"column": "score", "op": "==", "value": 3})
    assert next_table is result
    text = observation_text(result)
    assert text.startswith("id,region,value,score")

    result, next_table = run_tool(table100, "aggregate", {"op": "count"})
    assert next_table is table100
    assert result == 100

    with pytest.raises(ValueError):
        run_tool(table100, "drop_table", {})


def test_frame_from_view_includes_color_column(map_chart):
    _, _, view, _ = map_chart
    from chartnav.naming import name_colors

    names = name_colors(view.row_color_hex)
    frame = TableFrame.from_view(view, names)
    assert frame.columns[-1] == "color"
    assert len(frame.rows) == len(view.rows)
    assert all(isinstance(r[-1], str) for r in frame.rows)
