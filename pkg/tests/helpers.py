"""Independent reference computations used as test oracles."""

import itertools

import networkx as nx

from iwcentrality.graph import build_graph

FIGURE3_EDGES = [
    ("v1", "v2", (4, 6)),
    ("v1", "v3", (1, 1)),
    ("v2", "v3", (2, 4)),
    ("v3", "v4", (1, 3)),
]


def figure3():
    return build_graph(["v1", "v2", "v3", "v4"], FIGURE3_EDGES)


def brute_min_cut(vertices, edges, s, t):
    """Smallest total capacity of edges crossing any s/t bipartition."""
    others = [v for v in vertices if v not in (s, t)]
    best = float("inf")
    for r in range(len(others) + 1):
        for chosen in itertools.combinations(others, r):
            side = {s, *chosen}
            cut = sum(c for u, v, c in edges if (u in side) != (v in side))
            best = min(best, cut)
    return best


def nx_max_flow(vertices, edges, s, t, removed=()):
    """Max flow via networkx on the two-arcs-per-edge directed graph."""
    d = nx.DiGraph()
    d.add_nodes_from(v for v in vertices if v not in removed)
    for u, v, c in edges:
        if u in removed or v in removed:
            continue
        d.add_edge(u, v, capacity=c)
        d.add_edge(v, u, capacity=c)
    return nx.maximum_flow_value(d, s, t)


def classical_strength(vertices, edges):
    out = {v: 0.0 for v in vertices}
    for u, v, c in edges:
        out[u] += c
        out[v] += c
    return out


def classical_flow_closeness(vertices, edges):
    return {i: sum(nx_max_flow(vertices, edges, i, j) for j in vertices if j != i) for i in vertices}


def classical_flow_betweenness(vertices, edges):
    out = {}
    for i in vertices:
        rest = [v for v in vertices if v != i]
        out[i] = sum(
            nx_max_flow(vertices, edges, j, k) - nx_max_flow(vertices, edges, j, k, removed=(i,))
            for j, k in itertools.combinations(rest, 2)
        )
    return out


def random_connected_spec(rng, n_min=4, n_max=6, extra_max=2, hi=10, degenerate=False):
    """Vertices and interval edges of a random connected graph (spanning tree plus extras)."""
    n = rng.randint(n_min, n_max)
    vs = [f"v{i}" for i in range(n)]
    perm = vs[:]
    rng.shuffle(perm)
    pairs = {frozenset((perm[i], perm[rng.randrange(i)])) for i in range(1, n)}
    every = [frozenset(p) for p in itertools.combinations(vs, 2)]
    target = min(n - 1 + rng.randint(0, extra_max), len(every))
    while len(pairs) < target:
        pairs.add(rng.choice(every))
    edges = []
    for p in sorted(pairs, key=sorted):
        a, b = sorted(p)
        lo = rng.randint(1 if degenerate else 0, hi)
        up = lo if degenerate else rng.randint(max(lo, 1), hi)
        edges.append((a, b, (lo, up)))
    return vs, edges


def random_scalar_network(rng, n_max=8, cap_max=10):
    n = rng.randint(2, n_max)
    vs = [f"n{i}" for i in range(n)]
    edges = [(a, b, rng.randint(1, cap_max)) for a, b in itertools.combinations(vs, 2) if rng.random() < 0.45]
    return vs, edges

