"""Deterministic output records for the command-line interface.

Every command emits one OutputRecord; serialization is byte-reproducible:
dictionary key order is fixed by construction, floats are printed with 15
significant digits, and no timestamps are embedded unless explicitly
requested by the caller.
"""

import csv
import io
from dataclasses import dataclass, field

__all__ = ["OutputRecord", "format_number", "to_json", "to_csv", "to_text"]

SCHEMA_VERSION = "1"


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    results: dict
    diagnostics: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def as_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "diagnostics": self.diagnostics,
        }


def format_number(x) -> str:
    """15-significant-digit formatting used in all machine outputs."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".15g")


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        out = format(value, ".15g")
        # bare "1e+20" and "inf" are fine for floats; keep integral floats
        # recognizable as numbers
        return out
    if isinstance(value, str):
        escaped = (
            value.replace("\\", "\\\\")
            .replace('"', '\\"')
            .replace("\n", "\\n")
            .replace("\r", "\\r")
            .replace("\t", "\\t")
        )
        return f'"{escaped}"'
    raise TypeError(f"cannot serialize {type(value)!r}")


def _json_value(value, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f'{inner}"{key}": {_json_value(val, indent + 1)}'
            for key, val in value.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        seq = list(value)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in seq):
            return "[" + ", ".join(_json_scalar(v) for v in seq) + "]"
        items = [f"{inner}{_json_value(v, indent + 1)}" for v in seq]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return _json_scalar(value)


def to_json(record: OutputRecord) -> str:
    return _json_value(record.as_dict(), 0) + "\n"


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for key, val in value.items():
            _flatten(f"{prefix}.{key}" if prefix else key, val, rows)
    elif isinstance(value, (list, tuple)):
        for i, val in enumerate(value):
            _flatten(f"{prefix}[{i}]", val, rows)
    else:
        rows.append((prefix, value))


def to_csv(record: OutputRecord) -> str:
    """RFC-4180 CSV with LF line endings.

    Results holding a ``rows`` list of uniform dicts become one CSV row per
    entry; anything else is flattened into key,value pairs.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = record.results.get("rows")
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        header = list(rows[0].keys())
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row.get(k)) for k in header])
    else:
        writer.writerow(["key", "value"])
        flat: list = []
        _flatten("", record.as_dict(), flat)
        for key, value in flat:
            writer.writerow([key, _csv_cell(value)])
    return buf.getvalue()


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, float, bool)):
        return format_number(value)
    return str(value)


def _fmt_human(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def to_text(record: OutputRecord) -> str:
    """Human-readable report: 4-decimal numbers, aligned key/value lines."""
    lines = [f"{record.command}"]
    for section in ("inputs", "results", "diagnostics"):
        payload = getattr(record, section)
        if not payload:
            continue
        lines.append(f"[{section}]")
        rows = payload.get("rows") if isinstance(payload, dict) else None
        if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
            header = list(rows[0].keys())
            widths = [
                max(len(h), max(len(_fmt_human(r.get(h))) for r in rows))
                for h in header
            ]
            lines.append("  " + "  ".join(h.ljust(w) for h, w in zip(header, widths)))
            for row in rows:
                lines.append(
                    "  "
                    + "  ".join(
                        _fmt_human(row.get(h)).rjust(w) for h, w in zip(header, widths)
                    )
                )
            extra = {k: v for k, v in payload.items() if k != "rows"}
            flat: list = []
            _flatten("", extra, flat)
            for key, value in flat:
                lines.append(f"  {key} = {_fmt_human(value)}")
        else:
            flat = []
            _flatten("", payload, flat)
            for key, value in flat:
                lines.append(f"  {key} = {_fmt_human(value)}")
    return "\n".join(lines) + "\n"
