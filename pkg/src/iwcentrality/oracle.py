"""Brute-force check that interval max-flows are attained at the endpoints.

Every edge interval is replaced by a finite grid of evenly spaced values
(five points give L, Q1, Q2, Q3, U). All combinations are enumerated in
lexicographic order, the scalar max flow is computed for each, and the
results are checked for coordinate-wise monotonicity and for extremes at
the all-lower and all-upper combinations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from iwcentrality.exceptions import BudgetExceeded, SourceEqualsSink
from iwcentrality.graph import Bound, IWGraph
from iwcentrality.maxflow import EPS, ScalarFlowNetwork, _edmonds_karp, all_pairs_max_flow

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class GridSpec:
    points_per_edge: int = 5
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.points_per_edge < 2:
            raise ValueError(f"points_per_edge must be at least 2, got {self.points_per_edge}")
        if self.budget < 1:
            raise ValueError(f"budget must be positive, got {self.budget}")

    def grid(self, lower: float, upper: float) -> List[float]:
        m = self.points_per_edge - 1
        return [lower + k * (upper - lower) / m for k in range(m)] + [upper]


@dataclass(frozen=True)
class SweepResult:
    source: str
    sink: str
    edges: Tuple[Tuple[str, str], ...]
    count: int
    min_value: float
    min_combination: Tuple[float, ...]
    max_value: float
    max_combination: Tuple[float, ...]
    monotone: bool
    min_at_lower: bool
    max_at_upper: bool
    rows: List[Tuple[Tuple[float, ...], float]] = field(repr=False, default_factory=list)


def _check_budget(g: IWGraph, spec: GridSpec) -> int:
    count = spec.points_per_edge ** g.number_of_edges()
    if count > spec.budget:
        raise BudgetExceeded(
            f"{spec.points_per_edge}^{g.number_of_edges()} = {count} combinations exceeds the budget of {spec.budget}"
        )
    return count


def _flow_table(g: IWGraph, spec: GridSpec, pairs):
    """Max flow for every grid combination and every requested (s, t) index pair.

    Returns the edge list, the per-edge grids and an array of shape
    ``(points,) * n_edges + (len(pairs),)`` indexed by grid positions.
    """
    _check_budget(g, spec)
    edges = list(g.edges())
    grids = [spec.grid(w.lower, w.upper) for _, _, w in edges]
    base = ScalarFlowNetwork.from_graph(g, Bound.LOWER)
    shape = (spec.points_per_edge,) * len(edges)
    table = np.zeros(shape + (len(pairs),))
    for pos in itertools.product(range(spec.points_per_edge), repeat=len(edges)):
        net = base.with_capacities([grids[e][p] for e, p in enumerate(pos)])
        table[pos] = [_edmonds_karp(net, s, t)[0] for s, t in pairs]
    return edges, grids, table


def _is_monotone(values: np.ndarray) -> bool:
    """Non-decreasing along every axis (every single-coordinate step up)."""
    return all(np.all(np.diff(values, axis=ax) >= -EPS) for ax in range(values.ndim))


def lexicographic_sweep(g: IWGraph, source: str, sink: str, spec: GridSpec = GridSpec()) -> SweepResult:
    """Enumerate all grid combinations of edge values for one source/sink pair.

    ``min_combination`` is the lexicographically first combination attaining
    the minimum flow, ``max_combination`` the last one attaining the maximum.

    Raises:
        BudgetExceeded: more combinations than ``spec.budget``.
    """
    s, t = g.index(source), g.index(sink)
    if s == t:
        raise SourceEqualsSink(f"source and sink are both {source!r}")
    edges, grids, table = _flow_table(g, spec, [(s, t)])
    values = table[..., 0]

    rows = []
    for pos in itertools.product(range(spec.points_per_edge), repeat=len(edges)):
        rows.append((tuple(grids[e][p] for e, p in enumerate(pos)), float(values[pos])))
    flows = [f for _, f in rows]
    lo, hi = min(flows), max(flows)
    first_min = next(c for c, f in rows if f == lo)
    last_max = next(c for c, f in reversed(rows) if f == hi)

    all_lower = tuple(grid[0] for grid in grids)
    all_upper = tuple(grid[-1] for grid in grids)
    return SweepResult(
        source=source,
        sink=sink,
        edges=tuple((u, v) for u, v, _ in edges),
        count=len(rows),
        min_value=lo,
        min_combination=first_min,
        max_value=hi,
        max_combination=last_max,
        monotone=_is_monotone(values),
        min_at_lower=abs(rows[0][1] - lo) <= EPS and rows[0][0] == all_lower,
        max_at_upper=abs(rows[-1][1] - hi) <= EPS and rows[-1][0] == all_upper,
        rows=rows,
    )


@dataclass(frozen=True)
class PairCheck:
    source: str
    sink: str
    sweep_min: float
    sweep_max: float
    lower_flow: float
    upper_flow: float
    monotone: bool

    @property
    def ok(self) -> bool:
        return self.monotone and abs(self.sweep_min - self.lower_flow) <= EPS and abs(self.sweep_max - self.upper_flow) <= EPS


def endpoint_decomposition_report(g: IWGraph, spec: GridSpec = GridSpec()) -> Dict[Tuple[str, str], PairCheck]:
    """Sweep extremes against the lower/upper-network max flows, for every vertex pair."""
    n = len(g)
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return {}
    _, _, table = _flow_table(g, spec, pairs)
    lower = all_pairs_max_flow(ScalarFlowNetwork.from_graph(g, Bound.LOWER))
    upper = all_pairs_max_flow(ScalarFlowNetwork.from_graph(g, Bound.UPPER))
    out = {}
    for col, (a, b) in enumerate(pairs):
        values = table[..., col]
        key = (g.vertices[a], g.vertices[b])
        out[key] = PairCheck(
            *key,
            sweep_min=float(values.min()),
            sweep_max=float(values.max()),
            lower_flow=float(lower[a, b]),
            upper_flow=float(upper[a, b]),
            monotone=_is_monotone(values),
        )
    return out


def verify_endpoint_decomposition(g: IWGraph, spec: GridSpec = GridSpec()) -> bool:
    """True iff, for every vertex pair, the brute-force sweep's min and max
    equal the max flows of the all-lower and all-upper networks.

    Raises:
        BudgetExceeded: more combinations than ``spec.budget``.
    """
    return all(check.ok for check in endpoint_decomposition_report(g, spec).values())
