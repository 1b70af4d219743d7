"""Degree, flow-closeness and flow-betweenness centrality for interval-weighted networks."""

from iwcentrality.centrality import (
    CentralityReport,
    Measure,
    iw_degree,
    iw_degree_tuned,
    iw_flow_betweenness,
    iw_flow_closeness,
    rank,
)
from iwcentrality.graph import (
    Bound,
    IWGraph,
    RawFlowRecord,
    aggregate_contemporary,
    aggregate_temporal,
    build_graph,
    expand_directed,
)
from iwcentrality.interval import Interval, OrderDecision, Relation, compare, hausdorff, inf_sup
from iwcentrality.maxflow import ScalarFlowNetwork, all_pairs_max_flow, flow_dependency, max_flow
from iwcentrality.oracle import GridSpec, lexicographic_sweep, verify_endpoint_decomposition

__version__ = "0.1.0"

__all__ = [
    "Bound",
    "CentralityReport",
    "GridSpec",
    "IWGraph",
    "Interval",
    "Measure",
    "OrderDecision",
    "RawFlowRecord",
    "Relation",
    "ScalarFlowNetwork",
    "aggregate_contemporary",
    "aggregate_temporal",
    "all_pairs_max_flow",
    "build_graph",
    "compare",
    "expand_directed",
    "flow_dependency",
    "hausdorff",
    "inf_sup",
    "iw_degree",
    "iw_degree_tuned",
    "iw_flow_betweenness",
    "iw_flow_closeness",
    "lexicographic_sweep",
    "max_flow",
    "rank",
    "verify_endpoint_decomposition",
]
