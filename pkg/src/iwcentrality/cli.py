"""Command-line interface.

    iwcentrality aggregate records.csv --mode contemporary --threshold 50
    iwcentrality degree edges.csv --alpha 0.5
    iwcentrality flow-closeness edges.csv --format json
    iwcentrality flow-betweenness edges.csv --workers 4
    iwcentrality oracle edges.csv --source v1 --sink v4 --grid-points 5

Exit status: 0 success, 1 input parse error, 2 invalid configuration,
3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import enum
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from iwcentrality import io as iwio
from iwcentrality.centrality import iw_degree_tuned, iw_flow_betweenness, iw_flow_closeness
from iwcentrality.exceptions import BudgetExceeded, IWNError, ParseError
from iwcentrality.graph import aggregate_contemporary, aggregate_temporal
from iwcentrality.oracle import DEFAULT_BUDGET, GridSpec, lexicographic_sweep

log = logging.getLogger("iwcentrality")

EXIT_OK, EXIT_PARSE, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3


class Command(enum.Enum):
    AGGREGATE = "aggregate"
    DEGREE = "degree"
    FLOW_CLOSENESS = "flow-closeness"
    FLOW_BETWEENNESS = "flow-betweenness"
    ORACLE = "oracle"


@dataclass(frozen=True)
class RunConfig:
    command: Command
    input: str
    out: Optional[str] = None
    alpha: float = 1.0
    threshold: float = 0.0
    mode: str = "contemporary"
    format: str = "csv"
    decimals: int = 2
    source: Optional[str] = None
    sink: Optional[str] = None
    grid_points: int = 5
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def validate(self) -> None:
        if self.alpha < 0:
            raise ValueError(f"--alpha must be non-negative, got {self.alpha}")
        if self.threshold < 0:
            raise ValueError(f"--threshold must be non-negative, got {self.threshold}")
        if self.mode not in ("contemporary", "temporal"):
            raise ValueError(f"--mode must be contemporary or temporal, got {self.mode}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"--format must be csv or json, got {self.format}")
        if self.decimals < 0:
            raise ValueError(f"--decimals must be non-negative, got {self.decimals}")
        if self.workers < 1:
            raise ValueError(f"--workers must be at least 1, got {self.workers}")
        if self.command is Command.ORACLE:
            if self.source is None or self.sink is None:
                raise ValueError("oracle needs --source and --sink")
            if self.source == self.sink:
                raise ValueError("--source and --sink must differ")
            if self.grid_points < 2:
                raise ValueError(f"--grid-points must be at least 2, got {self.grid_points}")
            if self.budget < 1:
                raise ValueError(f"--budget must be positive, got {self.budget}")


def _render(config: RunConfig) -> str:
    cmd = config.command
    if cmd is Command.AGGREGATE:
        temporal = config.mode == "temporal"
        records = iwio.read_flow_records(config.input, require_period=temporal)
        aggregate = aggregate_temporal if temporal else aggregate_contemporary
        g = aggregate(records, threshold=config.threshold)
        return iwio.graph_json(g) if config.format == "json" else iwio.edge_list_csv(g)

    g = iwio.read_graph(config.input)
    if cmd is Command.ORACLE:
        for v in (config.source, config.sink):
            if v not in g:
                raise ValueError(f"vertex {v!r} is not in the graph")
        spec = GridSpec(config.grid_points, config.budget)
        result = lexicographic_sweep(g, config.source, config.sink, spec)
        log.info(
            "%d combinations, min %s at %s, max %s at %s, monotone=%s",
            result.count, result.min_value, result.min_combination,
            result.max_value, result.max_combination, result.monotone,
        )
        return iwio.sweep_json(result) if config.format == "json" else iwio.sweep_csv(result)

    if cmd is Command.DEGREE:
        report = iw_degree_tuned(g, config.alpha)
    elif cmd is Command.FLOW_CLOSENESS:
        report = iw_flow_closeness(g)
    else:
        report = iw_flow_betweenness(g, workers=config.workers)
    if config.format == "json":
        return iwio.report_json(report, config.decimals)
    return iwio.report_csv(report, config.decimals)


def run(config: RunConfig) -> int:
    """Execute one command and return the process exit status."""
    try:
        config.validate()
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    try:
        text = _render(config)
    except ParseError as exc:
        log.error("%s: %s", config.input, exc)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        log.error("cannot read input: %s", exc)
        return EXIT_CONFIG
    except BudgetExceeded as exc:
        log.error("%s", exc)
        return EXIT_BUDGET
    except (IWNError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    iwio.write_text(text, config.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwcentrality",
        description="Centrality measures for networks with interval edge weights.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, decimals=True):
        p.add_argument("input", help="input file")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        if decimals:
            p.add_argument("--decimals", type=int, default=2, help="decimal places for non-integral values")

    p = sub.add_parser("aggregate", help="build an interval edge list from raw directed flow records")
    common(p, decimals=False)
    p.add_argument("--mode", choices=["contemporary", "temporal"], default="contemporary")
    p.add_argument("--threshold", type=float, default=0.0, help="keep records with weight strictly above this")

    p = sub.add_parser("degree", help="interval-weighted degree with tuning parameter")
    common(p)
    p.add_argument("--alpha", type=float, default=1.0)

    p = sub.add_parser("flow-closeness", help="interval-weighted flow closeness")
    common(p)

    p = sub.add_parser("flow-betweenness", help="interval-weighted flow betweenness")
    common(p)
    p.add_argument("--workers", type=int, default=1, help="worker processes")

    p = sub.add_parser("oracle", help="lexicographic sweep of edge values for one source/sink pair")
    common(p, decimals=False)
    p.add_argument("--source", required=True)
    p.add_argument("--sink", required=True)
    p.add_argument("--grid-points", type=int, default=5)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and k != "command"}
    config = RunConfig(command=Command(args.command), **fields)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
