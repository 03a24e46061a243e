"""Graph JSON, DOT export and CSV verdict tables."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable

from .graph import BoundaryGraph, GraphError, build_graph

__all__ = ["graph_from_json", "read_graph", "graph_to_json", "write_graph", "to_dot", "rows_to_csv", "CSV_COLUMNS"]

CSV_COLUMNS = ["pi", "case", "n_classes", "best_lambda", "construction_lambda", "agree", "gap"]


def graph_from_json(data: dict) -> BoundaryGraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphError('graph JSON must be an object with keys "n" and "edges"')
    return build_graph(int(data["n"]), data["edges"])


def read_graph(path) -> BoundaryGraph:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: malformed JSON ({exc})") from exc
    return graph_from_json(data)


def graph_to_json(g: BoundaryGraph) -> str:
    return json.dumps(g.to_json())


def write_graph(g: BoundaryGraph, path) -> None:
    Path(path).write_text(graph_to_json(g) + "\n")


def to_dot(g: BoundaryGraph, name: str = "G", values=None) -> str:
    """Graphviz source; boundary vertices are drawn as small boxes.

    ``values`` (e.g. an eigenfunction) is appended to the vertex labels.
    """
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = str(v) if values is None else f"{v}\\n{values[v]:.4f}"
        shape = "box" if v in g.boundary else "circle"
        lines.append(f'  {v} [label="{label}", shape={shape}];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def rows_to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(
            [
                " ".join(map(str, r["pi"])),
                "" if r.get("case") is None else r["case"],
                r["n_classes"],
                f"{r['best_lambda']:.10f}",
                "" if r.get("construction_lambda") is None else f"{r['construction_lambda']:.10f}",
                r.get("agree", r.get("matches_construction")),
                "" if r.get("gap") is None else f"{r['gap']:.10f}",
            ]
        )
    return buf.getvalue()
