from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from chipbn.families import build
from chipbn.graphcore import Multigraph, is_connected, new_graph

DIAMOND = new_graph(4, [(0, 1), (1, 3), (0, 3), (2, 3), (1, 2)])


@st.composite
def connected_multigraphs(draw, min_n=1, max_n=6, max_extra=6, loops=True):
    """Random spanning tree plus extra edges (parallel edges and, optionally, loops)."""
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    k = draw(st.integers(0, max_extra))
    for _ in range(k):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u == v and not loops:
            continue
        edges.append((u, v))
    return Multigraph(n, edges)


def graph_with_divisor(graphs, lo=-4, hi=6):
    return graphs.flatmap(lambda G: st.tuples(st.just(G), st.tuples(*[st.integers(lo, hi)] * G.n)))


def small_connected_simple_graphs(max_n=5, max_edges=8):
    """Every labelled connected simple graph on 1..max_n vertices with <= max_edges edges."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            if bin(mask).count("1") > max_edges:
                continue
            G = Multigraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if is_connected(G):
                out.append(G)
    return out


LOOP_FREE_SUITE = [
    "tetrahedron", "k33", "cube", "petersen", "heawood", "genus7max", "cone", "k23",
    "c12_double_prime", "loop_of_loops(3)", "loop_of_loops(4)", "loop_of_loops(5)",
    "loop_of_loops(7)", "graph_C_prime(6)", "graph_C_prime(7)", "graph_C_prime(8)",
    "graph_C_prime(9)", "a_graph(1)", "b_graph(3)", "case_join(Triangle, a_graph(0), 3)",
    "case_join(TwoTriangles, a_graph(0), 2)", "case_join(K23Shape, a_graph(0), 3)",
]

LOOPFUL_SUITE = [f"graph_C({g})" for g in range(3, 10)]


@pytest.fixture
def diamond():
    return DIAMOND


def named(spec: str) -> Multigraph:
    return build(spec).graph
