"""Text, JSON, DOT and CSV renderings of enumerated trees.

Labels are always written as their canonical strings, never as JSON
numbers, so arbitrarily large components survive a round trip.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .core import GenerativeSystem, enumerate_levels
from .labels import format_label


@dataclass
class ExportDocument:
    system: str
    depth: int
    levels: list[list[str]]
    edges: list[tuple[str, str]]

    def as_dict(self) -> dict:
        return {
            "system": self.system,
            "depth": self.depth,
            "levels": self.levels,
            "edges": [list(e) for e in self.edges],
        }


def build_document(system: GenerativeSystem, depth: int) -> ExportDocument:
    levels = enumerate_levels(system, depth)
    edges = []
    for level in levels[:-1]:
        for x in level:
            sx = format_label(x)
            edges.extend((sx, format_label(c)) for c in system.expand(x))
    return ExportDocument(
        system.id, depth, [[format_label(x) for x in level] for level in levels], edges
    )


def to_text(doc: ExportDocument) -> str:
    return " | ".join(" ".join(level) for level in doc.levels) + "\n"


def to_json(doc: ExportDocument) -> str:
    return json.dumps(doc.as_dict(), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> ExportDocument:
    raw = json.loads(text)
    return ExportDocument(
        raw["system"], raw["depth"], raw["levels"], [tuple(e) for e in raw["edges"]]
    )


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(doc: ExportDocument) -> str:
    lines = [f"digraph {_dot_id(doc.system)} {{"]
    for m, level in enumerate(doc.levels):
        lines.append(f"  // level {m}")
        lines.extend(f"  {_dot_id(s)};" for s in level)
    lines.extend(f"  {_dot_id(p)} -> {_dot_id(c)};" for p, c in doc.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def to_csv(doc: ExportDocument) -> str:
    """One row per node: ``level,node,parent`` (empty parent for the root)."""
    parent = {c: p for p, c in doc.edges}
    rows = [("level", "node", "parent")]
    for m, level in enumerate(doc.levels):
        rows.extend((m, s, parent.get(s, "")) for s in level)
    return _csv(rows)


def counts_to_csv(counts) -> str:
    return _csv([("m", "count")] + [(m, c) for m, c in enumerate(counts)])


RENDERERS = {"text": to_text, "json": to_json, "dot": to_dot, "csv": to_csv}


def render(doc: ExportDocument, fmt: str) -> str:
    return RENDERERS[fmt](doc)
