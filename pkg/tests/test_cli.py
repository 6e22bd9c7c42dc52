from __future__ import annotations

import json

import pytest

from chartnav.bootstrap import packaged_transcript_path
from chartnav.cli import main

import scenarios


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_tree_command(capsys):
    code, out = run_cli(capsys, "tree", "line", "--max-level", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "1 A line chart. With axes Date and Number of Homes for Sale"
    assert len(lines) == 3  # root + two channels


def test_nav_command(capsys):
    code, out = run_cli(capsys, "nav", "map", "--from", "1.1", "--to", "1.2.1.1")
    assert code == 0
    assert out.strip() == "Press the right arrow key. Press the down arrow key 2 times."


def test_ask_command_replay(capsys):
    code, out = run_cli(
        capsys,
        "ask", "map", scenarios.GUAM_QUERY,
        "--replay", packaged_transcript_path("guam"),
        "--cursor", "1.1",
    )
    assert code == 0
    assert scenarios.GUAM_SPOKEN in out
    assert "navigation" in out


def test_ask_command_json_output(capsys):
    code, out = run_cli(
        capsys,
        "ask", "map", scenarios.GUAM_QUERY,
        "--replay", packaged_transcript_path("guam"),
        "--cursor", "1.1",
        "--json",
    )
    payload = json.loads(out)
    assert payload["body"] == scenarios.GUAM_SPOKEN
    assert payload["kind"] == "navigation"


def test_eval_command_replay(capsys, tmp_path):
    from importlib import resources

    corpus = str(resources.files("chartnav.data").joinpath("corpus/sample_corpus.jsonl"))
    report_path = tmp_path / "report.json"
    code, out = run_cli(
        capsys,
        "eval",
        "--corpus", corpus,
        "--chart", "map",
        "--replay", packaged_transcript_path("eval_demo"),
        "--report", str(report_path),
        "--partition", "type",
        "--answerable-only",
    )
    assert code == 0
    assert "answerable-only mean: 5.0" in out
    report = json.loads(report_path.read_text())
    assert report["mean"] == pytest.approx(11 / 3)
    assert set(report["partitions"]) == {"type", "chart", "answerable", "open_ended"}


def test_convert_corpus_command(capsys, tmp_path):
    src = tmp_path / "released.csv"
    src.write_text(
        "Chart,Query,Classification,Ground Truth,Answerable,Open-ended\n"
        'bar,"What is the highest anomaly?",Analytical,"The highest anomaly is 1.2",yes,no\n',
        encoding="utf-8",
    )
    out_path = tmp_path / "converted.jsonl"
    code, out = run_cli(capsys, "convert-corpus", str(src), "-o", str(out_path))
    assert code == 0
    assert "wrote 1 items" in out
    record = json.loads(out_path.read_text().strip())
    assert record["type"] == "analytical"


def test_no_subcommand_prints_help(capsys):
    code, out = run_cli(capsys)
    assert code == 2
    assert "usage" in out.lower()
