"""Ford-Fulkerson max-flow on undirected networks with scalar capacities.

Each undirected edge ``{i, j}`` of capacity ``c`` is treated as two opposite
arcs sharing one skew-symmetric flow value ``f(i, j) = -f(j, i)``. The
residual capacity of arc ``(i, j)`` is ``c - f(i, j)``, which is ``c + f(j, i)``
in the backward direction, so pushing along one arc frees capacity on the
other. Augmenting paths are shortest paths found by breadth-first search
(the Edmonds-Karp rule), which terminates on real-valued capacities.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from iwcentrality.exceptions import SourceEqualsSink, UnknownVertex, VerticesNotDistinct
from iwcentrality.graph import Bound, DirectedExpansion, IWGraph, expand_directed

# Augmentation stops once the bottleneck falls to this value.
EPS = 1e-9


class ScalarFlowNetwork:
    """Undirected network with one non-negative real capacity per edge.

    The structure is read-only; every max-flow computation allocates its own
    flow state, so one instance can be shared between concurrent workers.
    """

    __slots__ = ("vertices", "_index", "_nbrs", "_cap", "_edges")

    def __init__(self, vertices: Sequence[str], edges: Iterable[Tuple[str, str, float]]):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        self._nbrs: List[List[int]] = [[] for _ in range(n)]
        self._cap: List[Dict[int, float]] = [{} for _ in range(n)]
        self._edges: List[Tuple[int, int]] = []
        for u, v, c in edges:
            iu, iv = self.index(u), self.index(v)
            if iu == iv:
                raise ValueError(f"self-loop on {u!r}")
            if c < 0:
                raise ValueError(f"capacity must be non-negative, got {c} on ({u!r}, {v!r})")
            if iv in self._cap[iu]:
                raise ValueError(f"duplicate edge ({u!r}, {v!r})")
            self._nbrs[iu].append(iv)
            self._nbrs[iv].append(iu)
            self._cap[iu][iv] = float(c)
            self._cap[iv][iu] = float(c)
            self._edges.append((iu, iv))

    @classmethod
    def from_expansion(cls, expansion: DirectedExpansion) -> "ScalarFlowNetwork":
        """Fold a pair-of-arcs expansion back into undirected edges."""
        arcs = {(u, v): c for u, v, c in expansion.arcs}
        edges = []
        seen = set()
        for (u, v), c in arcs.items():
            if arcs.get((v, u)) != c:
                raise ValueError(f"arc ({u!r}, {v!r}) has no matching reverse arc of equal capacity")
            if (v, u) not in seen:
                seen.add((u, v))
                edges.append((u, v, c))
        return cls(expansion.vertices, edges)

    @classmethod
    def from_graph(cls, g: IWGraph, bound: Bound) -> "ScalarFlowNetwork":
        """The all-lower or all-upper projection of an interval-weighted graph."""
        return cls.from_expansion(expand_directed(g, bound))

    def with_capacities(self, capacities: Sequence[float]) -> "ScalarFlowNetwork":
        """Same topology, new capacities given in :meth:`edges` order."""
        if len(capacities) != len(self._edges):
            raise ValueError(f"expected {len(self._edges)} capacities, got {len(capacities)}")
        return ScalarFlowNetwork(
            self.vertices,
            ((self.vertices[iu], self.vertices[iv], c) for (iu, iv), c in zip(self._edges, capacities)),
        )

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def edges(self) -> List[Tuple[str, str, float]]:
        return [(self.vertices[iu], self.vertices[iv], self._cap[iu][iv]) for iu, iv in self._edges]

    def capacity(self, u: str, v: str) -> float:
        return self._cap[self.index(u)].get(self.index(v), 0.0)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"ScalarFlowNetwork(vertices={len(self.vertices)}, edges={len(self._edges)})"


@dataclass(frozen=True)
class MaxFlowResult:
    value: float
    source: str
    sink: str
    # f(u, v) for every arc carrying non-zero flow; both orientations present.
    flow: Dict[Tuple[str, str], float] = field(repr=False)
    # Vertices reachable from the source in the final residual network.
    source_side: FrozenSet[str] = field(repr=False)

    def net_outflow(self, v: str) -> float:
        return sum(f for (a, _), f in self.flow.items() if a == v)


def _edmonds_karp(net: ScalarFlowNetwork, s: int, t: int, blocked: FrozenSet[int] = frozenset()):
    n = len(net.vertices)
    nbrs, cap = net._nbrs, net._cap
    flow: List[Dict[int, float]] = [{} for _ in range(n)]
    value = 0.0
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            fu, cu = flow[u], cap[u]
            for v in nbrs[u]:
                if parent[v] < 0 and v not in blocked and cu[v] - fu.get(v, 0.0) > EPS:
                    parent[v] = u
                    queue.append(v)
        if parent[t] < 0:
            reached = [v for v in range(n) if parent[v] >= 0]
            return value, flow, reached

        delta = float("inf")
        v = t
        while v != s:
            u = parent[v]
            delta = min(delta, cap[u][v] - flow[u].get(v, 0.0))
            v = u
        if delta <= EPS:
            reached = [v for v in range(n) if parent[v] >= 0]
            return value, flow, reached

        v = t
        while v != s:
            u = parent[v]
            f = flow[u].get(v, 0.0) + delta
            flow[u][v] = f
            flow[v][u] = -f
            v = u
        value += delta


def max_flow(net: ScalarFlowNetwork, source: str, sink: str, exclude: Iterable[str] = ()) -> MaxFlowResult:
    """Maximum ``source``-``sink`` flow, optionally with some vertices deleted.

    Raises:
        UnknownVertex: ``source``, ``sink`` or an excluded vertex is not in ``net``.
        SourceEqualsSink: ``source == sink``.
    """
    s, t = net.index(source), net.index(sink)
    if s == t:
        raise SourceEqualsSink(f"source and sink are both {source!r}")
    blocked = frozenset(net.index(v) for v in exclude)
    if s in blocked or t in blocked:
        raise ValueError("cannot delete the source or the sink")
    value, flow, reached = _edmonds_karp(net, s, t, blocked)
    names = net.vertices
    arcs = {(names[u], names[v]): f for u in range(len(names)) for v, f in flow[u].items() if f != 0.0}
    return MaxFlowResult(value, source, sink, arcs, frozenset(names[v] for v in reached))


def max_flow_value(net: ScalarFlowNetwork, source: str, sink: str, exclude: Iterable[str] = ()) -> float:
    s, t = net.index(source), net.index(sink)
    if s == t:
        raise SourceEqualsSink(f"source and sink are both {source!r}")
    return _edmonds_karp(net, s, t, frozenset(net.index(v) for v in exclude))[0]


def flow_dependency(
    net: ScalarFlowNetwork, source: str, sink: str, intermediary: str, base: Optional[float] = None
) -> float:
    """Part of the ``source``-``sink`` max flow that depends on ``intermediary``.

    Computed as the max flow minus the max flow once ``intermediary`` and its
    incident edges are removed. Pass ``base`` to reuse an already known
    full max-flow value.
    """
    if len({source, sink, intermediary}) < 3:
        raise VerticesNotDistinct(f"source, sink and intermediary must differ: {source!r}, {sink!r}, {intermediary!r}")
    if base is None:
        base = max_flow_value(net, source, sink)
    without = max_flow_value(net, source, sink, exclude=(intermediary,))
    # without <= base exactly in theory; clamp float noise.
    return max(base - without, 0.0)


def all_pairs_max_flow(net: ScalarFlowNetwork) -> np.ndarray:
    """Symmetric matrix of pairwise max-flow values, zero diagonal, in vertex order."""
    n = len(net.vertices)
    out = np.zeros((n, n))
    for a in range(n):
        for b in range(a + 1, n):
            out[a, b] = out[b, a] = _edmonds_karp(net, a, b)[0]
    return out
