"""CSV export of transformed views.

RFC-4180 style: comma delimiter, LF line endings, double-quote escaping,
mandatory header row. When a hex-to-name mapping is supplied and the view
carries resolved colors, a trailing "color" column holds English color
names instead of hex codes.
"""

from __future__ import annotations

from typing import Mapping, Optional

from .model import DataValue, Timestamp, TransformedView


def export_csv(view: TransformedView, color_names: Optional[Mapping] = None) -> str:
    header = list(view.column_names)
    with_color = color_names is not None and view.row_color_hex is not None
    if with_color:
        header.append("color")

    lines = [",".join(_escape(h) for h in header)]
    for i, row in enumerate(view.rows):
        cells = [format_cell(v) for v in row]
        if with_color:
            hex_color = view.row_color_hex[i]
            cells.append(color_names.get(hex_color, hex_color))
        lines.append(",".join(_escape(c) for c in cells))
    return "\n".join(lines) + "\n"


def format_cell(value: DataValue) -> str:
    if value is None:
        return ""
    if isinstance(value, Timestamp):
        return value.text
    if isinstance(value, float):
        if value.is_integer():
            return str(int(value))
        return repr(value)
    return str(value)


def _escape(cell: str) -> str:
    if any(ch in cell for ch in ',"\r\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell
