"""Vertex automorphisms of multigraphs, involutions and quotients.

Automorphisms act on vertices only: a permutation is an automorphism when it
preserves every edge multiplicity, loops included. Parallel edges are never
permuted among themselves, so |Aut| here is the vertex-action count.

The search is individualization-refinement: colour refinement on edge
multiplicities, run in lockstep on the two sides of a partial map, with
branching on the smallest non-singleton cell.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .graphcore import GraphError, Multigraph, is_loop_free, is_tree, require_connected

MAX_VERTICES = 64

Perm = tuple[int, ...]


class SizeBoundExceeded(GraphError):
    pass


def _check_size(G: Multigraph, bound: int) -> None:
    if G.n > bound:
        raise SizeBoundExceeded(f"graph has {G.n} vertices, bound is {bound}")


def _initial(G: Multigraph, marks: dict[int, int] | None = None) -> list:
    return [(G.loops[v], G.degrees[v], (marks or {}).get(v, -1)) for v in range(G.n)]


def _refine(G1: Multigraph, c1: list, G2: Multigraph, c2: list) -> tuple[list, list] | None:
    """Refine both colourings with shared colour names; None if they diverge."""
    while True:
        s1 = [(c1[v], tuple(sorted((c1[w], m) for w, m in G1.neighbors[v]))) for v in range(G1.n)]
        s2 = [(c2[v], tuple(sorted((c2[w], m) for w, m in G2.neighbors[v]))) for v in range(G2.n)]
        if Counter(s1) != Counter(s2):
            return None
        names = {s: i for i, s in enumerate(sorted(set(s1)))}
        n1 = [names[s] for s in s1]
        n2 = [names[s] for s in s2]
        if len(names) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def _is_iso_map(G1: Multigraph, G2: Multigraph, sigma: Sequence[int]) -> bool:
    if G1.num_edges != G2.num_edges:
        return False
    return all(G2.mult(sigma[u], sigma[v]) == m for (u, v), m in G1.multiplicity.items())


def _search(G1, c1, G2, c2, involutive: bool) -> Iterator[Perm]:
    ref = _refine(G1, c1, G2, c2)
    if ref is None:
        return
    c1, c2 = ref
    cells1: dict[int, list[int]] = {}
    cells2: dict[int, list[int]] = {}
    for v, c in enumerate(c1):
        cells1.setdefault(c, []).append(v)
    for v, c in enumerate(c2):
        cells2.setdefault(c, []).append(v)
    if len(cells1) == G1.n:
        sigma = [0] * G1.n
        for c, (v,) in cells1.items():
            sigma[v] = cells2[c][0]
        if _is_iso_map(G1, G2, sigma) and (not involutive or all(sigma[sigma[v]] == v for v in range(G1.n))):
            yield tuple(sigma)
        return
    target = min((c for c in cells1 if len(cells1[c]) > 1), key=lambda c: (len(cells1[c]), c))
    x = cells1[target][0]
    fresh = max(c1) + 1
    for y in cells2[target]:
        n1, n2 = list(c1), list(c2)
        n1[x] = fresh
        n2[y] = fresh
        if involutive and x != y:
            # x -> y forces y -> x
            n1[y] = fresh + 1
            n2[x] = fresh + 1
        yield from _search(G1, n1, G2, n2, involutive)


def automorphisms(G: Multigraph, bound: int = MAX_VERTICES) -> Iterator[Perm]:
    """All automorphisms in search order (identity first)."""
    _check_size(G, bound)
    c = _initial(G)
    yield from _search(G, c, G, list(c), False)


def involutions(G: Multigraph, bound: int = MAX_VERTICES) -> Iterator[Perm]:
    """All automorphisms of order at most two."""
    _check_size(G, bound)
    c = _initial(G)
    yield from _search(G, c, G, list(c), True)


def aut_order(G: Multigraph, bound: int = MAX_VERTICES) -> int:
    """|Aut(G)| by orbit-stabilizer along an individualization chain."""
    _check_size(G, bound)
    c = _initial(G)
    order = 1
    while True:
        c, _ = _refine(G, c, G, c)
        cells: dict[int, list[int]] = {}
        for v, col in enumerate(c):
            cells.setdefault(col, []).append(v)
        if len(cells) == G.n:
            return order
        target = min((k for k in cells if len(cells[k]) > 1), key=lambda k: (len(cells[k]), k))
        x = cells[target][0]
        fresh = max(c) + 1
        orbit = 0
        for y in cells[target]:
            n1, n2 = list(c), list(c)
            n1[x] = fresh
            n2[y] = fresh
            if next(_search(G, n1, G, n2, False), None) is not None:
                orbit += 1
        order *= orbit
        c = list(c)
        c[x] = fresh


def isomorphism(G1: Multigraph, G2: Multigraph, root1: int | None = None, root2: int | None = None) -> Perm | None:
    """A vertex map G1 -> G2 preserving multiplicities (and root1 -> root2), or None."""
    if G1.n != G2.n or G1.num_edges != G2.num_edges:
        return None
    m1 = {root1: 0} if root1 is not None else None
    m2 = {root2: 0} if root2 is not None else None
    return next(_search(G1, _initial(G1, m1), G2, _initial(G2, m2), False), None)


def is_automorphism(G: Multigraph, sigma: Sequence[int]) -> bool:
    return sorted(sigma) == list(range(G.n)) and _is_iso_map(G, G, sigma)


def quotient(G: Multigraph, sigma: Sequence[int], flip_parallel: bool = False) -> Multigraph:
    """Quotient of a loop-free G by an involutive automorphism.

    Vertices become orbits, numbered by smallest member. Each orbit of edges
    leaves one edge; an edge whose endpoints fall into one orbit becomes a
    loop and is dropped. With ``flip_parallel`` the involution also swaps
    parallel edges pairwise between two fixed vertices, so a bundle of m such
    edges leaves ceil(m/2).
    """
    if not is_loop_free(G):
        raise GraphError("quotient needs a loop-free graph")
    if not is_automorphism(G, sigma) or any(sigma[sigma[v]] != v for v in range(G.n)):
        raise GraphError("sigma is not an involutive automorphism")
    reps = sorted({min(v, sigma[v]) for v in range(G.n)})
    index = {r: i for i, r in enumerate(reps)}
    orb = [index[min(v, sigma[v])] for v in range(G.n)]
    edges = []
    for (u, v), m in G.multiplicity.items():
        image = tuple(sorted((sigma[u], sigma[v])))
        if image == (u, v):
            if orb[u] == orb[v]:
                continue
            k = (m + 1) // 2 if flip_parallel else m
            edges += [(orb[u], orb[v])] * k
        elif (u, v) < image:
            edges += [(orb[u], orb[v])] * m
    return Multigraph(len(reps), edges)


def find_tree_quotient_involution(G: Multigraph, bound: int = MAX_VERTICES) -> Perm | None:
    """An involution whose quotient (parallel edges flipped) is a tree, or None."""
    require_connected(G)
    if not is_loop_free(G):
        raise GraphError("find_tree_quotient_involution needs a loop-free graph")
    for sigma in involutions(G, bound):
        if is_tree(quotient(G, sigma, flip_parallel=True)):
            return sigma
    return None
