import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chipbn import divisor as dv
from chipbn.families import build
from chipbn.graphcore import GraphError, Multigraph, genus, new_graph, strip_loops

from conftest import DIAMOND, connected_multigraphs, graph_with_divisor, small_connected_simple_graphs
from oracles import brute_unburnt, jacobian_order, lattice_equivalent, naive_rank

PATH2 = new_graph(2, [(0, 1)])
BANANA = new_graph(2, [(0, 1), (0, 1)])


# -- frozen examples --------------------------------------------------------


def test_degree_and_effectiveness():
    assert dv.deg((4, -1, 0, 5)) == 8 and not dv.is_effective((4, -1, 0, 5))
    assert dv.deg((5, 0, 1, 2)) == 8 and dv.is_effective((5, 0, 1, 2))
    assert dv.is_effective(dv.zero(DIAMOND)) and dv.deg(dv.zero(DIAMOND)) == 0


def test_fire_diamond_graph():
    assert dv.chip_fire(DIAMOND, (4, -1, 0, 5), 3) == (5, 0, 1, 2)


def test_fire_on_loop_is_noop():
    assert dv.chip_fire(new_graph(1, [(0, 0)]), (7,), 0) == (7,)


def test_fire_set_across_bridge():
    G = new_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert dv.fire_set(DIAMOND, (1, 2, 3, 4), range(4)) == (1, 2, 3, 4)
    assert dv.fire_set(G, dv.point(G, 2), [0, 1, 2]) == dv.point(G, 3)


def test_dhar_examples():
    assert dv.dhar_unburnt(PATH2, (0, 1), 0) == {1}
    assert dv.dhar_unburnt(DIAMOND, (0, 0, 0, 3), 0) == {3}
    assert brute_unburnt(DIAMOND, (0, 0, 0, 3), 0) == {3}
    with pytest.raises(dv.DivisorError):
        dv.dhar_unburnt(DIAMOND, (0, -1, 0, 0), 0)


def test_reduce_diamond_graph():
    res = dv.q_reduce(DIAMOND, (4, -1, 0, 5), 0)
    assert res.reduced == (6, 2, 0, 0)
    assert res.script == (1, 1, 2, 3)
    assert dv.apply_script(DIAMOND, (4, -1, 0, 5), res.script) == res.reduced
    assert lattice_equivalent(DIAMOND, (4, -1, 0, 5), res.reduced)
    assert dv.dhar_unburnt(DIAMOND, res.reduced, 0) == frozenset()


@given(connected_multigraphs(max_n=8, max_extra=8), st.data())
def test_reduce_handles_huge_chip_counts(G, data):
    D = data.draw(st.tuples(*[st.integers(-10**12, 10**12)] * G.n))
    q = data.draw(st.integers(0, G.n - 1))
    res = dv.q_reduce(G, D, q)
    assert dv.apply_script(G, D, res.script) == res.reduced
    assert all(res.reduced[v] >= 0 for v in range(G.n) if v != q)
    assert dv.dhar_unburnt(G, res.reduced, q) == frozenset()
    assert lattice_equivalent(G, D, res.reduced)


def test_reduce_on_tree_moves_chip_to_base():
    T = build("tree_T(5)").graph
    for v in range(T.n):
        assert dv.q_reduce(T, dv.point(T, v), 7).reduced == dv.point(T, 7)


def test_equivalence_examples():
    assert dv.is_equivalent(DIAMOND, (1, 0, 2, 0), dv.chip_fire(DIAMOND, (1, 0, 2, 0), 2))
    assert not dv.is_equivalent(DIAMOND, (1, 0, 0, 0), (0, 0, 0, 0))
    assert not dv.is_equivalent(BANANA, (1, 0), (0, 1))


def test_effective_representative():
    assert dv.has_effective_representative(DIAMOND, (1, 0, 0, 2))
    assert not dv.has_effective_representative(DIAMOND, (1, 0, 0, -2))
    E, script = dv.effective_representative(DIAMOND, (4, -1, 0, 5))
    assert dv.is_effective(E) and dv.apply_script(DIAMOND, (4, -1, 0, 5), script) == E
    assert dv.effective_representative(DIAMOND, (0, 0, 0, -1)) is None


def test_canonical_divisor():
    assert dv.canonical_divisor(DIAMOND) == (0, 1, 0, 1)
    P = build("petersen").graph
    K = dv.canonical_divisor(P)
    assert set(K) == {1} and dv.deg(K) == 2 * genus(P) - 2
    with pytest.raises(GraphError):
        dv.canonical_divisor(new_graph(1, [(0, 0)]))


def test_enumeration_small():
    assert list(dv.enumerate_effective(DIAMOND, 0)) == [dv.zero(DIAMOND)]
    assert list(dv.enumerate_effective(BANANA, 1)) == [(1, 0), (0, 1)]
    assert len(list(dv.enumerate_classes_with_effective(BANANA, 1))) == 2
    assert sum(1 for _ in dv.enumerate_effective(DIAMOND, 3)) == math.comb(4 + 3 - 1, 3)


def test_rank_examples():
    assert dv.rank(DIAMOND, dv.zero(DIAMOND)) == 0
    assert dv.rank(DIAMOND, (0, 0, 0, -1)) == -1
    assert dv.rank(DIAMOND, dv.canonical_divisor(DIAMOND)) == genus(DIAMOND) - 1
    # Figure graph is hyperelliptic: 1+3 is a pencil of degree 2
    assert dv.rank(DIAMOND, (0, 1, 0, 1)) == 1


def test_length_mismatch():
    with pytest.raises(dv.DivisorError):
        dv.chip_fire(DIAMOND, (1, 2), 0)
    with pytest.raises(dv.DivisorError):
        dv.apply_script(DIAMOND, (0, 0, 0, 0), (1,))


def test_divisor_json_round_trip():
    assert dv.from_dict({"values": [1, -2, 3]}) == (1, -2, 3)
    assert dv.from_dict({"counts": [0, 1]}, "counts") == (0, 1)
    with pytest.raises(dv.DivisorError):
        dv.from_dict({"vals": []})


# -- properties -------------------------------------------------------------


@given(graph_with_divisor(connected_multigraphs()), st.data())
def test_fire_preserves_degree_and_inverts(GD, data):
    G, D = GD
    v = data.draw(st.integers(0, G.n - 1))
    F = dv.chip_fire(G, D, v)
    assert dv.deg(F) == dv.deg(D)
    assert dv.fire_set(G, F, [w for w in range(G.n) if w != v]) == D


@given(graph_with_divisor(connected_multigraphs(max_n=7)), st.data())
def test_reduction_is_idempotent_and_reduced(GD, data):
    G, D = GD
    q = data.draw(st.integers(0, G.n - 1))
    res = dv.q_reduce(G, D, q)
    R = res.reduced
    assert dv.apply_script(G, D, res.script) == R
    assert all(R[v] >= 0 for v in range(G.n) if v != q)
    assert brute_unburnt(G, R, q) == frozenset()
    again = dv.q_reduce(G, R, q)
    assert again.reduced == R and not any(again.script)


@settings(max_examples=1000)
@given(graph_with_divisor(connected_multigraphs(max_n=7)), st.data())
def test_class_invariance_under_random_scripts(GD, data):
    G, D = GD
    s = data.draw(st.tuples(*[st.integers(-5, 5)] * G.n))
    assert dv.q_reduce(G, dv.apply_script(G, D, s), 0).reduced == dv.q_reduce(G, D, 0).reduced


@given(graph_with_divisor(connected_multigraphs(max_n=6)), st.data())
def test_dhar_matches_brute_force(GD, data):
    G, D = GD
    q = data.draw(st.integers(0, G.n - 1))
    D = tuple(abs(x) if v != q else x for v, x in enumerate(D))
    assert dv.dhar_unburnt(G, D, q) == brute_unburnt(G, D, q)


@given(connected_multigraphs(max_n=6), st.data())
def test_equivalence_is_base_independent(G, data):
    D1 = data.draw(st.tuples(*[st.integers(-3, 4)] * G.n))
    D2 = data.draw(st.tuples(*[st.integers(-3, 4)] * G.n))
    D2 = (D2[0] + dv.deg(D1) - dv.deg(D2),) + D2[1:]
    verdicts = {dv.is_equivalent(G, D1, D2, q) for q in range(G.n)}
    assert len(verdicts) == 1
    assert verdicts.pop() == lattice_equivalent(G, D1, D2)


SMALL = small_connected_simple_graphs()


def test_lattice_oracle_on_all_small_graphs():
    rng = random.Random(7)
    for G in SMALL:
        for _ in range(6):
            d = rng.randint(0, 6)
            D1 = _random_of_degree(rng, G.n, d)
            D2 = _random_of_degree(rng, G.n, d)
            assert dv.is_equivalent(G, D1, D2) == lattice_equivalent(G, D1, D2), (G, D1, D2)
        # a shifted copy is always equivalent
        D1 = _random_of_degree(rng, G.n, 3)
        s = [rng.randint(-2, 2) for _ in range(G.n)]
        assert dv.is_equivalent(G, D1, dv.apply_script(G, D1, s))


def _random_of_degree(rng, n, d):
    D = [rng.randint(-2, 3) for _ in range(n)]
    D[rng.randrange(n)] += d - sum(D)
    return tuple(D)


@given(connected_multigraphs(max_n=5, max_extra=5, loops=False))
def test_class_count_matches_spanning_tree_count(G):
    # degree-g classes are all effective, and there are |Jac| of them
    g = genus(G)
    assert sum(1 for _ in dv.enumerate_classes_with_effective(G, g)) == jacobian_order(G)


@given(connected_multigraphs(max_n=5, max_extra=4), st.integers(0, 4))
def test_class_stream_matches_reduced_effective_divisors(G, d):
    expected = {dv.reduced_form(G, E) for E in dv.enumerate_effective(G, d)}
    got = list(dv.enumerate_classes_with_effective(G, d))
    assert len(got) == len(set(got)) and set(got) == expected


RR_GRAPHS = [DIAMOND] + [build(s).graph for s in ("tetrahedron", "k33", "cube", "loop_of_loops(5)")]


@pytest.mark.parametrize("G", RR_GRAPHS, ids=["fig", "tetrahedron", "k33", "cube", "loop_of_loops5"])
def test_riemann_roch(G):
    rng = random.Random(11)
    g = genus(G)
    K = dv.canonical_divisor(G)
    for _ in range(200):
        d = rng.randint(-2 * g, 2 * g)
        D = _random_of_degree(rng, G.n, d)
        KD = tuple(k - x for k, x in zip(K, D))
        assert dv.rank(G, D) - dv.rank(G, KD) == d - g + 1


@given(graph_with_divisor(connected_multigraphs(max_n=5, max_extra=4), lo=-2, hi=3), st.data())
def test_rank_monotone_in_one_chip(GD, data):
    G, D = GD
    v = data.draw(st.integers(0, G.n - 1))
    r = dv.rank(G, D)
    E = list(D)
    E[v] += 1
    assert dv.rank(G, E) in (r, r + 1)


@settings(max_examples=60)
@given(graph_with_divisor(connected_multigraphs(max_n=4, max_extra=3, loops=False), lo=-1, hi=3))
def test_rank_matches_definition(GD):
    G, D = GD
    assert dv.rank(G, D) == naive_rank(G, D, lambda E: dv.has_effective_representative(G, E))


@given(graph_with_divisor(connected_multigraphs(max_n=5, max_extra=5), lo=-2, hi=4))
def test_loops_are_inert(GD):
    G, D = GD
    assert dv.rank(G, D, subdivide=False) == dv.rank(strip_loops(G), D, subdivide=False)
    assert dv.reduced_form(G, D) == dv.reduced_form(strip_loops(G), D)


def test_rank_on_loopful_graph_subdivides_by_default():
    G = new_graph(1, [(0, 0)])
    # a single loop is a genus-1 graph: 1*v has rank 0 after subdividing,
    # while a bare vertex gives rank 1
    assert dv.rank(G, (1,)) == 0
    assert dv.rank(G, (1,), subdivide=False) == 1
