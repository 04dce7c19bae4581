"""Shared test utilities: family lists, cached graphs, random graphs, naive cross-checks.

The naive checkers here are deliberately dumb (full enumeration, no pruning)
so they share no code path with the library's oracles.
"""

from functools import lru_cache
from itertools import combinations, product

from commgraph import (
    CommutingGraph,
    all_abelian_specs,
    build_commuting_graph,
    is_resolving,
    parse_group_spec,
)

# Named members of the order <= 16 non-abelian family; the generated family
# (every direct-product spelling) is a superset of this.
FAMILY14 = [
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z2xZ4",
    "Z3xZ3",
    "Z2xZ6",
    "Z4xZ3",
    "Z2xZ2xZ3",
    "Z4xZ4",
    "Z2xZ8",
]


def non_abelian_specs(max_order: int = 16) -> list[str]:
    """Every spelling of order <= max_order whose D(G) is non-abelian."""
    return [
        s
        for s in all_abelian_specs(max_order)
        if not parse_group_spec(s).is_elementary_abelian_2()
    ]


def members_with_at_most(specs, max_vertices: int) -> list[str]:
    return [s for s in specs if 2 * parse_group_spec(s).n <= max_vertices]


@lru_cache(maxsize=None)
def brute(spec: str) -> CommutingGraph:
    """Measured commuting graph for a spec; cached, graphs are immutable."""
    return build_commuting_graph(parse_group_spec(spec), "all")


def is_connected(graph: CommutingGraph) -> bool:
    nv = graph.n_vertices
    if nv <= 1:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= graph.rows[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << nv) - 1


def random_graph(rng, nv: int, p: float = 0.5, connected: bool = True) -> CommutingGraph:
    """Erdos-Renyi style graph; resamples until connected when asked."""
    while True:
        edges = [
            (i, j) for i in range(nv) for j in range(i + 1, nv) if rng.random() < p
        ]
        g = CommutingGraph.from_edges(nv, edges)
        if not connected or is_connected(g):
            return g


def chromatic_brute(graph: CommutingGraph) -> int:
    """Smallest k admitting a proper coloring, by trying every assignment."""
    nv = graph.n_vertices
    if nv == 0:
        return 0
    edges = list(graph.edges())
    for k in range(1, nv + 1):
        for colors in product(range(k), repeat=nv):
            if all(colors[i] != colors[j] for i, j in edges):
                return k
    raise AssertionError("unreachable: nv colors always suffice")


def detour_distance_brute(graph: CommutingGraph, u: int, v: int) -> int:
    """Longest simple u-v path by enumerating every path; -1 if none exists."""
    if u == v:
        return 0
    best = -1

    def dfs(x: int, visited: int, length: int) -> None:
        nonlocal best
        if x == v:
            if length > best:
                best = length
            return
        for w in range(graph.n_vertices):
            if graph.is_adjacent(x, w) and not visited >> w & 1:
                dfs(w, visited | (1 << w), length + 1)

    dfs(u, 1 << u, 0)
    return best


def metric_dimension_naive(graph: CommutingGraph) -> int:
    """Smallest resolving-set size, scanning sizes from zero with no lower bound."""
    nv = graph.n_vertices
    for size in range(nv + 1):
        if any(is_resolving(graph, c) for c in combinations(range(nv), size)):
            return size
    raise AssertionError("unreachable: the full vertex set resolves")


def resolving_counts_naive(graph: CommutingGraph) -> dict[int, int]:
    """Number of resolving subsets of each size, by testing every subset."""
    nv = graph.n_vertices
    counts = {}
    for size in range(nv + 1):
        c = sum(1 for combo in combinations(range(nv), size) if is_resolving(graph, combo))
        if c:
            counts[size] = c
    return counts
