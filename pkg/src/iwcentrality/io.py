"""Readers and writers for edge lists, raw flow records, graph dumps and reports."""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, List, Optional, TextIO, Union

import numpy as np

from iwcentrality.centrality import CentralityReport, Measure
from iwcentrality.exceptions import IWNError, ParseError
from iwcentrality.graph import IWGraph, RawFlowRecord, build_graph
from iwcentrality.interval import Interval, format_number
from iwcentrality.oracle import SweepResult

PathLike = Union[str, Path]

EDGE_LIST_HEADER = ["u", "v", "lower", "upper"]
FLOW_HEADER = ["source", "target", "weight"]


def exact_number(x: float) -> str:
    """Shortest text that round-trips ``x``, never in scientific notation."""
    if float(x).is_integer():
        return str(int(x))
    return np.format_float_positional(x, trim="-")


def _number(text: str, what: str, row: int) -> float:
    try:
        return float(text)
    except (TypeError, ValueError):
        raise ParseError(f"row {row}: {what} {text!r} is not a number", row) from None


def _rows(path: PathLike, required: List[str], optional: Iterable[str] = ()):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(f"{path}: empty file, expected header {','.join(required)}") from None
        allowed = required + list(optional)
        if header[: len(required)] != required or any(h not in allowed for h in header):
            raise ParseError(f"{path}: header must be {','.join(required)}" + (f"[,{','.join(optional)}]" if optional else ""), 1)
        for lineno, fields in enumerate(reader, start=2):
            if not fields or all(not f.strip() for f in fields):
                continue
            if len(fields) != len(header):
                raise ParseError(f"row {lineno}: expected {len(header)} fields, got {len(fields)}", lineno)
            yield lineno, dict(zip(header, (f.strip() for f in fields)))


def read_edge_list(path: PathLike) -> IWGraph:
    """Read a ``u,v,lower,upper`` CSV. Vertices are ordered by first appearance."""
    vertices: dict = {}
    edges = []
    seen: dict = {}
    for lineno, row in _rows(path, EDGE_LIST_HEADER):
        u, v = row["u"], row["v"]
        if not u or not v:
            raise ParseError(f"row {lineno}: empty vertex label", lineno)
        if u == v:
            raise ParseError(f"row {lineno}: self-loop on {u}", lineno)
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"row {lineno}: duplicate edge {u},{v} (first seen on row {seen[key]})", lineno)
        seen[key] = lineno
        lo, hi = _number(row["lower"], "lower", lineno), _number(row["upper"], "upper", lineno)
        try:
            w = Interval(lo, hi)
        except IWNError as exc:
            raise ParseError(f"row {lineno}: {exc}", lineno) from None
        if w.lower < 0:
            raise ParseError(f"row {lineno}: negative lower bound {row['lower']}", lineno)
        vertices.setdefault(u, None)
        vertices.setdefault(v, None)
        edges.append((u, v, w))
    return build_graph(vertices, edges)


def read_flow_records(path: PathLike, require_period: bool = False) -> List[RawFlowRecord]:
    """Read a ``source,target,weight[,period]`` CSV."""
    records = []
    for lineno, row in _rows(path, FLOW_HEADER, optional=["period"]):
        if not row["source"] or not row["target"]:
            raise ParseError(f"row {lineno}: empty vertex label", lineno)
        period = row.get("period") or None
        if require_period and period is None:
            raise ParseError(f"row {lineno}: missing period", lineno)
        try:
            records.append(RawFlowRecord(row["source"], row["target"], _number(row["weight"], "weight", lineno), period))
        except IWNError as exc:
            raise ParseError(f"row {lineno}: {exc}", lineno) from None
    return records


def edge_list_csv(g: IWGraph) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(EDGE_LIST_HEADER)
    for u, v, w in g.sorted_edges():
        writer.writerow([u, v, exact_number(w.lower), exact_number(w.upper)])
    return buf.getvalue()


def _json_number(x: float):
    return int(x) if float(x).is_integer() else float(x)


def graph_json(g: IWGraph) -> str:
    """Adjacency dump: sorted vertex labels and label-sorted edges."""
    doc = {
        "vertices": sorted(g.vertices),
        "edges": [
            {"u": u, "v": v, "lower": _json_number(w.lower), "upper": _json_number(w.upper)}
            for u, v, w in g.sorted_edges()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_graph_json(path: PathLike) -> IWGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        edges = [(e["u"], e["v"], (e["lower"], e["upper"])) for e in doc["edges"]]
        return build_graph(doc["vertices"], edges)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"{path}: not a graph dump ({exc})") from None
    except IWNError as exc:
        raise ParseError(f"{path}: {exc}") from None


def read_graph(path: PathLike) -> IWGraph:
    """Edge-list CSV, or a JSON adjacency dump when the file ends in ``.json``."""
    if str(path).lower().endswith(".json"):
        return read_graph_json(path)
    return read_edge_list(path)


# reports ----------------------------------------------------------------------


def report_columns(report: CentralityReport) -> List[str]:
    cols = ["vertex", "lower", "upper", "rank"]
    if report.measure in (Measure.DEGREE, Measure.DEGREE_TUNED):
        cols.append("alpha")
    if report.measure is Measure.FLOW_BETWEENNESS:
        cols += ["maxflow_all_pairs_lower", "maxflow_all_pairs_upper"]
    return cols


def _report_rows(report: CentralityReport):
    alpha = 1.0 if report.alpha is None else report.alpha
    for v in report.ordered():
        s = report.scores[v]
        row = {"vertex": v, "lower": s.lower, "upper": s.upper, "rank": report.ranks[v]}
        if report.measure in (Measure.DEGREE, Measure.DEGREE_TUNED):
            row["alpha"] = alpha
        if report.aux is not None:
            row["maxflow_all_pairs_lower"] = report.aux[v].lower
            row["maxflow_all_pairs_upper"] = report.aux[v].upper
        yield row


def _cell(row, col, decimals):
    if col in ("vertex", "rank"):
        return row[col]
    if col == "alpha":
        return exact_number(row[col])
    return format_number(row[col], decimals)


def report_csv(report: CentralityReport, decimals: int = 2) -> str:
    """Ranked table, ascending rank then label."""
    cols = report_columns(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in _report_rows(report):
        writer.writerow([_cell(row, c, decimals) for c in cols])
    return buf.getvalue()


def report_json(report: CentralityReport, decimals: int = 2) -> str:
    rows = []
    for row in _report_rows(report):
        rows.append({k: (v if k in ("vertex", "rank") else _json_number(round(v, decimals))) for k, v in row.items()})
    doc = {"measure": report.measure.value, "rows": rows}
    if report.alpha is not None:
        doc["alpha"] = _json_number(report.alpha)
    return json.dumps(doc, indent=2) + "\n"


def sweep_csv(result: SweepResult) -> str:
    """One row per combination in lexicographic order: edge values, then the max flow."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"{u}-{v}" for u, v in result.edges] + ["max_flow"])
    for combo, value in result.rows:
        writer.writerow([exact_number(x) for x in combo] + [exact_number(value)])
    return buf.getvalue()


def sweep_json(result: SweepResult) -> str:
    num = lambda xs: [_json_number(x) for x in xs]  # noqa: E731
    doc = {
        "source": result.source,
        "sink": result.sink,
        "edges": [[u, v] for u, v in result.edges],
        "combinations": result.count,
        "min": {"value": _json_number(result.min_value), "combination": num(result.min_combination)},
        "max": {"value": _json_number(result.max_value), "combination": num(result.max_combination)},
        "monotone": result.monotone,
        "min_at_lower": result.min_at_lower,
        "max_at_upper": result.max_at_upper,
        "rows": [{"combination": num(c), "max_flow": _json_number(f)} for c, f in result.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_text(text: str, out: Optional[PathLike], stream: Optional[TextIO] = None) -> None:
    if out is None:
        (stream or sys.stdout).write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
