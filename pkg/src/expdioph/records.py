"""Output records: JSON Lines and CSV writers plus the published schema.

Every number is written as a decimal string.  A file written with ``--out``
starts with a single manifest line.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, TextIO

from . import __version__

RECORD_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["record", "fields"],
    "additionalProperties": False,
    "properties": {
        "record": {"type": "string", "pattern": "^[a-z0-9_]+$"},
        "fields": {
            "type": "object",
            "additionalProperties": {
                "anyOf": [
                    {"type": "string"},
                    {"type": "array", "items": {"type": "string"}},
                    {"type": "object", "additionalProperties": {"type": "string"}},
                ]
            },
        },
    },
}

MANIFEST_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["manifest"],
    "additionalProperties": False,
    "properties": {
        "manifest": {
            "type": "object",
            "required": ["command", "parameters", "version", "seed"],
            "additionalProperties": False,
            "properties": {
                "command": {"type": "string"},
                "parameters": {"type": "object", "additionalProperties": {"type": "string"}},
                "version": {"type": "string"},
                "seed": {"type": "string"},
                "wall_time_ms": {"type": "string"},
            },
        }
    },
}


def _stringify(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "none found"
    if isinstance(value, Mapping):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return str(value)


@dataclass
class Record:
    kind: str
    fields: dict[str, Any]

    def to_json(self) -> dict[str, Any]:
        return {"record": self.kind, "fields": _stringify(self.fields)}


@dataclass
class RunManifest:
    command: str
    parameters: dict[str, Any]
    seed: int = 0
    version: str = __version__
    wall_time_ms: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        body = {
            "command": self.command,
            "parameters": _stringify(dict(sorted(self.parameters.items()))),
            "version": self.version,
            "seed": str(self.seed),
        }
        if self.wall_time_ms is not None:
            body["wall_time_ms"] = str(self.wall_time_ms)
        return {"manifest": body}


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def write_jsonl(out: TextIO, records: Iterable[Record], manifest: RunManifest | None) -> None:
    if manifest is not None:
        out.write(dumps(manifest.to_json()) + "\n")
    for rec in records:
        out.write(dumps(rec.to_json()) + "\n")


def write_csv(out: TextIO, records: Iterable[Record], manifest: RunManifest | None) -> None:
    if manifest is not None:
        out.write("# " + dumps(manifest.to_json()) + "\n")
    header: list[str] | None = None
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for rec in records:
        flat = {"record": rec.kind}
        for k, v in rec.to_json()["fields"].items():
            if isinstance(v, list):
                v = ";".join(v)
            elif isinstance(v, dict):
                v = ";".join(f"{kk}={vv}" for kk, vv in v.items())
            flat[k] = v
        # a new header row whenever the record shape changes
        if header != list(flat):
            header = list(flat)
            writer.writerow(header)
        writer.writerow([flat.get(h, "") for h in header])
    out.write(buf.getvalue())
