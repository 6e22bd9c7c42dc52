"""Parse a declarative chart document (Vega-Lite-compatible subset).

Supported: single-view specs; marks bar, line, point, geoshape; channels
x, y, color, detail; transforms filter (comparison/equality), bin, and
aggregate (mean, sum, count, min, max); range-bound params. Anything else
is reported with the path to the offending node, never silently dropped.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Optional

from ..errors import (
    MissingDataError,
    MissingEncodingError,
    SpecParseError,
    UnsupportedMarkError,
)
from .model import (
    AggregateTransform,
    BinTransform,
    Channel,
    ChartKind,
    ChartSpec,
    DataType,
    EncodingChannel,
    FilterPredicate,
    InteractiveParam,
)

_MARK_KINDS = {
    "bar": ChartKind.BAR,
    "line": ChartKind.LINE,
    "point": ChartKind.SCATTER,
    "circle": ChartKind.SCATTER,
    "geoshape": ChartKind.CHOROPLETH,
}

_MULTI_VIEW_KEYS = ("layer", "facet", "hconcat", "vconcat", "repeat", "spec")

# datum.Field or datum['Field'] / datum["Field"], then an operator and a value
_FILTER_EXPR = re.compile(
    r"""^\s*datum(?:\.(?P<bare>\w+)|\[(?P<q>['"])(?P<quoted>.+?)(?P=q)\])\s*
        (?P<op>==|!=|<=|>=|<|>)\s*(?P<rhs>.+?)\s*$""",
    re.VERBOSE,
)


def parse_chart_spec(source_text: str) -> ChartSpec:
    """Parse and validate a chart document given as JSON text."""
    try:
        doc = json.loads(source_text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"not well-formed JSON: {exc}", "$") from exc
    if not isinstance(doc, dict):
        raise SpecParseError("top-level value must be an object", "$")
    return parse_chart_doc(doc)


def parse_chart_doc(doc: dict) -> ChartSpec:
    for key in _MULTI_VIEW_KEYS:
        if key in doc:
            raise SpecParseError(f"multi-view construct {key!r} is not supported", f"$.{key}")

    chart_kind = _parse_mark(doc)
    data_ref, inline_rows = _parse_data(doc)
    encodings = _parse_encodings(doc)
    transforms = _parse_transforms(doc.get("transform", []))
    params = _parse_params(doc.get("params", []))

    positional = {Channel.X, Channel.Y, Channel.DETAIL}
    if not any(enc.channel in positional for enc in encodings):
        raise MissingEncodingError(
            "at least one positional or detail encoding is required", "$.encoding"
        )

    if inline_rows is not None:
        schema = set()
        for row in inline_rows:
            schema.update(row.keys())
        for t in transforms:
            if isinstance(t, BinTransform):
                schema.update((t.as_field, f"{t.as_field}_end"))
            elif isinstance(t, AggregateTransform):
                schema.update(t.as_fields)
        for enc in encodings:
            if enc.field not in schema:
                raise SpecParseError(
                    f"encoding field {enc.field!r} not present in the dataset schema",
                    f"$.encoding.{enc.channel.value}.field",
                )

    return ChartSpec(
        chart_kind=chart_kind,
        description=str(doc.get("description", "")),
        data_ref=data_ref,
        encodings=tuple(encodings),
        transforms=tuple(transforms),
        params=tuple(params),
    )


def load_chart(path: str) -> tuple:
    """Load a chart document from disk, resolving a data file reference.

    Returns (spec, raw_rows). A ``data.url`` is resolved relative to the
    chart document's own directory.
    """
    p = Path(path)
    spec = parse_chart_spec(p.read_text(encoding="utf-8"))
    if isinstance(spec.data_ref, str):
        data_path = p.parent / spec.data_ref
        if not data_path.exists():
            raise MissingDataError(f"data file not found: {data_path}", "$.data.url")
        rows = json.loads(data_path.read_text(encoding="utf-8"))
    else:
        rows = spec.data_ref
    return spec, rows


def _parse_mark(doc: dict) -> ChartKind:
    if "mark" not in doc:
        raise SpecParseError("missing mark declaration", "$.mark")
    mark = doc["mark"]
    if isinstance(mark, dict):
        mark = mark.get("type")
    if not isinstance(mark, str) or mark not in _MARK_KINDS:
        raise UnsupportedMarkError(f"unsupported mark {mark!r}", "$.mark")
    return _MARK_KINDS[mark]


def _parse_data(doc: dict):
    data = doc.get("data")
    if not isinstance(data, dict):
        raise MissingDataError("missing data declaration", "$.data")
    if "values" in data:
        rows = data["values"]
        if not isinstance(rows, list) or not all(isinstance(r, dict) for r in rows):
            raise MissingDataError("data.values must be a list of records", "$.data.values")
        return rows, rows
    if "url" in data:
        return str(data["url"]), None
    raise MissingDataError("data must declare values or url", "$.data")


def _parse_encodings(doc: dict) -> list:
    encoding = doc.get("encoding")
    if not isinstance(encoding, dict) or not encoding:
        raise MissingEncodingError("missing encoding block", "$.encoding")
    out = []
    for name, body in encoding.items():
        path = f"$.encoding.{name}"
        try:
            channel = Channel(name)
        except ValueError:
            raise SpecParseError(f"unsupported encoding channel {name!r}", path) from None
        if not isinstance(body, dict) or "field" not in body:
            raise SpecParseError("channel must declare a field", path)
        dtype_raw = body.get("type")
        try:
            dtype = DataType(dtype_raw)
        except ValueError:
            raise SpecParseError(
                f"channel must declare a supported type, got {dtype_raw!r}", f"{path}.type"
            ) from None
        if channel is Channel.COLOR and dtype is DataType.TEMPORAL:
            raise SpecParseError("temporal color scales are not supported", f"{path}.type")
        scale = body.get("scale") or {}
        domain = scale.get("domain")
        srange = scale.get("range")
        try:
            out.append(
                EncodingChannel(
                    channel=channel,
                    field=str(body["field"]),
                    data_type=dtype,
                    binned=bool(body.get("bin", False)),
                    title=body.get("title"),
                    scale_domain=tuple(domain) if domain is not None else None,
                    scale_range=tuple(srange) if srange is not None else None,
                )
            )
        except ValueError as exc:
            raise SpecParseError(str(exc), path) from None
    return out


def _parse_transforms(raw: Any) -> list:
    if not isinstance(raw, list):
        raise SpecParseError("transform must be a list", "$.transform")
    out = []
    for i, t in enumerate(raw):
        path = f"$.transform[{i}]"
        if not isinstance(t, dict):
            raise SpecParseError("transform entries must be objects", path)
        if "filter" in t:
            out.append(_parse_filter(t["filter"], path))
        elif "bin" in t:
            field = t.get("field")
            if not field:
                raise SpecParseError("bin transform requires a field", path)
            out.append(
                BinTransform(
                    field=str(field),
                    as_field=str(t.get("as", f"{field}_bin")),
                    maxbins=int(t.get("maxbins", 10)),
                )
            )
        elif "aggregate" in t:
            entries = t["aggregate"]
            if not isinstance(entries, list) or not entries:
                raise SpecParseError("aggregate transform requires operations", path)
            ops, fields, as_fields = [], [], []
            for j, entry in enumerate(entries):
                op = entry.get("op")
                if op not in AggregateTransform.SUPPORTED_OPS:
                    raise SpecParseError(
                        f"unsupported aggregate op {op!r}", f"{path}.aggregate[{j}]"
                    )
                fld = entry.get("field")
                if fld is None and op != "count":
                    raise SpecParseError(
                        f"aggregate op {op!r} requires a field", f"{path}.aggregate[{j}]"
                    )
                ops.append(op)
                fields.append(fld)
                as_fields.append(str(entry.get("as", f"{op}_{fld or 'rows'}")))
            out.append(
                AggregateTransform(
                    ops=tuple(ops),
                    fields=tuple(fields),
                    as_fields=tuple(as_fields),
                    groupby=tuple(t.get("groupby", [])),
                )
            )
        else:
            raise SpecParseError("unsupported transform type", path)
    return out


def _parse_filter(body: Any, path: str) -> FilterPredicate:
    if isinstance(body, str):
        m = _FILTER_EXPR.match(body)
        if not m:
            raise SpecParseError(f"cannot parse filter expression {body!r}", path)
        field = m.group("bare") or m.group("quoted")
        value, is_param = _parse_rhs(m.group("rhs"), path)
        return FilterPredicate(field=field, op=m.group("op"), value=value, value_is_param=is_param)
    if isinstance(body, dict) and "field" in body:
        ops = {"equal": "==", "lt": "<", "lte": "<=", "gt": ">", "gte": ">="}
        for key, op in ops.items():
            if key in body:
                return FilterPredicate(field=str(body["field"]), op=op, value=body[key])
        raise SpecParseError("filter predicate missing a comparison key", path)
    raise SpecParseError("unsupported filter form", path)


def _parse_rhs(rhs: str, path: str):
    rhs = rhs.strip()
    if len(rhs) >= 2 and rhs[0] in "'\"" and rhs[-1] == rhs[0]:
        return rhs[1:-1], False
    try:
        return json.loads(rhs), False
    except json.JSONDecodeError:
        pass
    if re.fullmatch(r"\w+", rhs):
        return rhs, True  # param reference, resolved at materialization
    raise SpecParseError(f"cannot parse filter value {rhs!r}", path)


def _parse_params(raw: Any) -> list:
    if not isinstance(raw, list):
        raise SpecParseError("params must be a list", "$.params")
    out = []
    for i, p in enumerate(raw):
        path = f"$.params[{i}]"
        if not isinstance(p, dict) or "name" not in p:
            raise SpecParseError("param requires a name", path)
        bind = p.get("bind") or {}
        out.append(
            InteractiveParam(
                name=str(p["name"]),
                value=p.get("value"),
                minimum=bind.get("min"),
                maximum=bind.get("max"),
                step=bind.get("step"),
            )
        )
    return out
