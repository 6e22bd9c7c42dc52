"""Command-line interface mirroring the HTTP API.

Subcommands: tree, ask, nav, eval, convert-corpus, serve. Charts are
packaged names (bar, line, scatter, map) or paths to chart documents.
Provider credentials come from the environment (CHARTNAV_API_KEY by
default); --replay answers from a recorded transcript instead of a live
provider.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bootstrap import (
    build_gateway,
    default_bank,
    load_config,
    load_packaged_charts,
    resolve_chart,
)
from .evalharness.corpus import convert_released_corpus, load_corpus
from .evalharness.runner import run_benchmark
from .nav.engine import Cursor, shortest_path
from .nav.speech import coalesce
from .pipeline.runner import QueryPipeline
from .pipeline.types import UserQuery
from .tree.labels import render_tree_text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    return args.func(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chartnav")
    parser.add_argument("--config", help="JSON config file for the model provider")
    sub = parser.add_subparsers()

    p_tree = sub.add_parser("tree", help="print a chart's accessibility tree")
    p_tree.add_argument("chart")
    p_tree.add_argument("--max-level", type=int, default=4)
    p_tree.set_defaults(func=cmd_tree)

    p_ask = sub.add_parser("ask", help="answer a question about a chart")
    p_ask.add_argument("chart")
    p_ask.add_argument("question")
    p_ask.add_argument("--replay", help="answer from a recorded transcript")
    p_ask.add_argument("--cursor", default="1", help="current tree address")
    p_ask.add_argument("--table-mode", action="store_true")
    p_ask.add_argument("--auto", action="store_true", help="auto-traverse navigation answers")
    p_ask.add_argument("--json", action="store_true", dest="as_json")
    p_ask.set_defaults(func=cmd_ask)

    p_nav = sub.add_parser("nav", help="shortest key-press path between two nodes")
    p_nav.add_argument("chart")
    p_nav.add_argument("--from", dest="from_addr", required=True)
    p_nav.add_argument("--to", dest="to_addr", required=True)
    p_nav.set_defaults(func=cmd_nav)

    p_eval = sub.add_parser("eval", help="run the benchmark harness over a corpus")
    p_eval.add_argument("--corpus", required=True)
    p_eval.add_argument("--chart", required=True)
    p_eval.add_argument("--replay", help="transcript for both pipeline and judge")
    p_eval.add_argument("--report", help="write the machine-readable report here")
    p_eval.add_argument("--partition", choices=["type", "chart", "answerable", "open_ended"])
    p_eval.add_argument("--answerable-only", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_conv = sub.add_parser("convert-corpus", help="ingest the released dataset layout")
    p_conv.add_argument("source")
    p_conv.add_argument("-o", "--output", required=True)
    p_conv.set_defaults(func=cmd_convert)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8001)
    p_serve.add_argument("--replay")
    p_serve.add_argument("--event-log")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def cmd_tree(args) -> int:
    context = resolve_chart(args.chart)
    print(render_tree_text(context.tree, args.max_level))
    return 0


def cmd_ask(args) -> int:
    config = load_config(args.config)
    context = resolve_chart(args.chart)
    gateway = build_gateway(config, replay=args.replay)
    pipeline = QueryPipeline(
        gateway, context, default_bank(), auto_traverse=args.auto,
        on_event=lambda kind, message: print(f"[{kind}] {message}", file=sys.stderr),
    )
    answer = pipeline.run(
        UserQuery(
            text=args.question,
            session="cli",
            cursor_address=args.cursor,
            table_mode=args.table_mode,
        )
    )
    if args.as_json:
        print(json.dumps(answer.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(answer.justification)
        print(answer.body)
        for suggestion in answer.suggestions:
            print(f"  try: {suggestion}")
    return 0


def cmd_nav(args) -> int:
    context = resolve_chart(args.chart)
    moves = shortest_path(context.tree, args.from_addr, args.to_addr)
    print(coalesce(moves).spoken)
    return 0


def cmd_eval(args) -> int:
    config = load_config(args.config)
    context = resolve_chart(args.chart)
    gateway = build_gateway(config, replay=args.replay)
    pipeline = QueryPipeline(gateway, context, default_bank())
    items = load_corpus(args.corpus)
    report = run_benchmark(items, pipeline, gateway)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            f.write(report.to_json())
    print(report.table_dump())
    if args.partition:
        print(json.dumps(report.partitions()[args.partition], indent=2))
    if args.answerable_only:
        print(f"answerable-only mean: {report.mean_score(answerable_only=True)}")
    return 0


def cmd_convert(args) -> int:
    n = convert_released_corpus(args.source, args.output)
    print(f"wrote {n} items to {args.output}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import ServiceConfig, create_app

    config = load_config(args.config)
    app = create_app(
        ServiceConfig(
            charts=load_packaged_charts(),
            gateway=build_gateway(config, replay=args.replay),
            bank=default_bank(),
            event_log_path=args.event_log,
        )
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
