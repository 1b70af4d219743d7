"""Interval-weighted undirected graphs and how they are built.

An :class:`IWGraph` is a simple undirected graph on string labels whose
edges carry a positive :class:`~iwcentrality.interval.Interval` capacity.
Graphs are built either from an explicit edge list (:func:`build_graph`) or
from raw directed flow observations (:func:`aggregate_contemporary`,
:func:`aggregate_temporal`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from iwcentrality.exceptions import (
    DuplicateEdge,
    InvalidInterval,
    InvalidRecord,
    MissingPeriod,
    SelfLoop,
    UnknownVertex,
)
from iwcentrality.interval import Interval, as_interval

EdgeSpec = Tuple[str, str, Union[Interval, Tuple[float, float]]]


class Bound(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"

    def of(self, interval: Interval) -> float:
        return interval.lower if self is Bound.LOWER else interval.upper


class IWGraph:
    """Immutable undirected interval-weighted graph.

    Vertex order is the insertion order and is kept for presentation only:
    two graphs compare equal when they have the same vertex set and the same
    weighted edges. Absent edges stand for the zero interval.
    """

    __slots__ = ("_vertices", "_index", "_adj")

    def __init__(self, vertices: Sequence[str], adjacency: Mapping[str, Mapping[str, Interval]]):
        # Trusted constructor; use build_graph() for validated input.
        self._vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._adj = {v: dict(adjacency.get(v, {})) for v in self._vertices}

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    def number_of_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def weight(self, u: str, v: str) -> Optional[Interval]:
        """Interval on edge ``{u, v}``, or ``None`` when there is no edge."""
        self.index(u)
        self.index(v)
        return self._adj[u].get(v)

    def neighbors(self, v: str) -> Dict[str, Interval]:
        self.index(v)
        return dict(self._adj[v])

    def degree(self, v: str) -> int:
        """Number of incident edges (binary degree)."""
        self.index(v)
        return len(self._adj[v])

    def edges(self) -> Iterator[Tuple[str, str, Interval]]:
        """Each undirected edge once, as ``(u, v, w)`` with ``u`` before ``v`` in vertex order."""
        for u in self._vertices:
            iu = self._index[u]
            for v, w in self._adj[u].items():
                if self._index[v] > iu:
                    yield u, v, w

    def sorted_edges(self) -> List[Tuple[str, str, Interval]]:
        """Edges oriented and sorted by label, for byte-stable output."""
        out = []
        for u, v, w in self.edges():
            if v < u:
                u, v = v, u
            out.append((u, v, w))
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    def is_degenerate(self) -> bool:
        return all(w.is_degenerate for _, _, w in self.edges())

    def __eq__(self, other):
        if not isinstance(other, IWGraph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self._adj == other._adj

    def __repr__(self):
        return f"IWGraph(vertices={len(self)}, edges={self.number_of_edges()})"


def build_graph(vertex_labels: Iterable[str], interval_edges: Iterable[EdgeSpec]) -> IWGraph:
    """Validate and build an :class:`IWGraph`.

    Args:
        vertex_labels: unique labels; their order is kept.
        interval_edges: ``(u, v, weight)`` triples where ``weight`` is an
            Interval or a ``(lower, upper)`` pair. A ``[0, 0]`` weight is
            accepted and means "no edge".

    Raises:
        InvalidInterval: lower > upper, or a negative lower bound.
        UnknownVertex: an edge names a label not in ``vertex_labels``.
        DuplicateEdge: the same unordered pair appears twice.
        SelfLoop: ``u == v``.
    """
    vertices = list(vertex_labels)
    seen = set()
    for v in vertices:
        if v in seen:
            raise ValueError(f"duplicate vertex label {v!r}")
        seen.add(v)

    adjacency: Dict[str, Dict[str, Interval]] = {v: {} for v in vertices}
    pairs = set()
    for u, v, w in interval_edges:
        for x in (u, v):
            if x not in adjacency:
                raise UnknownVertex(f"edge ({u!r}, {v!r}) references unknown vertex {x!r}")
        if u == v:
            raise SelfLoop(f"self-loop on {u!r}")
        key = frozenset((u, v))
        if key in pairs:
            raise DuplicateEdge(f"duplicate edge {{{u!r}, {v!r}}}")
        pairs.add(key)
        w = as_interval(w)
        if w.lower < 0:
            raise InvalidInterval(f"edge ({u!r}, {v!r}) has negative lower bound {w.lower}")
        if w.upper == 0:
            continue
        adjacency[u][v] = w
        adjacency[v][u] = w
    return IWGraph(vertices, adjacency)


# aggregation ----------------------------------------------------------------


@dataclass(frozen=True)
class RawFlowRecord:
    """One directed observation, e.g. commuters from ``source`` to ``target``."""

    source: str
    target: str
    weight: float
    period: Optional[str] = None

    def __post_init__(self):
        try:
            weight = float(self.weight)
        except (TypeError, ValueError):
            raise InvalidRecord(f"weight must be a number, got {self.weight!r}") from None
        if not weight >= 0 or weight == float("inf"):
            raise InvalidRecord(f"weight must be finite and non-negative, got {self.weight!r}")
        object.__setattr__(self, "weight", weight)


def _aggregate(records, threshold, vertices):
    if threshold < 0:
        raise ValueError(f"threshold must be non-negative, got {threshold}")
    bounds: Dict[frozenset, List[float]] = {}
    labels = {}
    for v in vertices or ():
        labels.setdefault(v, None)
    for rec in records:
        if rec.source == rec.target or not rec.weight > threshold:
            continue
        labels.setdefault(rec.source, None)
        labels.setdefault(rec.target, None)
        key = frozenset((rec.source, rec.target))
        lo_hi = bounds.get(key)
        if lo_hi is None:
            bounds[key] = [rec.weight, rec.weight]
        else:
            lo_hi[0] = min(lo_hi[0], rec.weight)
            lo_hi[1] = max(lo_hi[1], rec.weight)

    ordered = list(vertices or ())
    explicit = set(ordered)
    ordered += sorted(v for v in labels if v not in explicit)
    edges = []
    for key, (lo, hi) in bounds.items():
        u, v = sorted(key)
        edges.append((u, v, Interval(lo, hi)))
    edges.sort(key=lambda e: (e[0], e[1]))
    return build_graph(ordered, edges)


def aggregate_contemporary(
    records: Iterable[RawFlowRecord],
    threshold: float = 0.0,
    vertices: Optional[Sequence[str]] = None,
) -> IWGraph:
    """Collapse bidirectional flows observed at one time point into intervals.

    Records with ``weight <= threshold`` and self-flows are dropped first.
    Each unordered pair with at least one surviving record, in either
    direction, becomes an edge ``[min, max]`` of its surviving weights.

    The vertex set is every label in a surviving record plus ``vertices``.
    Explicit vertices come first in the given order, the rest sorted.
    """
    return _aggregate(records, threshold, vertices)


def aggregate_temporal(
    records: Iterable[RawFlowRecord],
    threshold: float = 0.0,
    vertices: Optional[Sequence[str]] = None,
) -> IWGraph:
    """Collapse flows observed over several periods into ``[min, max]`` intervals.

    Same rule as :func:`aggregate_contemporary`, pooled over all periods and
    both directions; every record must carry a period label.

    Raises:
        MissingPeriod: a record has no period.
    """
    records = list(records)
    for n, rec in enumerate(records):
        if rec.period is None or str(rec.period).strip() == "":
            raise MissingPeriod(f"record {n} ({rec.source} -> {rec.target}) has no period")
    return _aggregate(records, threshold, vertices)


# directed expansion ------------------------------------------------------------


@dataclass(frozen=True)
class DirectedExpansion:
    """Two opposite arcs per undirected edge, all with the chosen endpoint as capacity."""

    vertices: Tuple[str, ...]
    arcs: Tuple[Tuple[str, str, float], ...]
    bound: Bound


def expand_directed(g: IWGraph, bound: Bound) -> DirectedExpansion:
    arcs = []
    for u, v, w in g.edges():
        c = bound.of(w)
        arcs.append((u, v, c))
        arcs.append((v, u, c))
    return DirectedExpansion(g.vertices, tuple(arcs), bound)
