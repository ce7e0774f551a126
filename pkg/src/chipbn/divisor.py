"""Divisors, chip-firing, q-reduction and Baker-Norine rank.

A divisor is a tuple of ints indexed by vertex. Loops never move chips
(firing a looped vertex sends two chips round the loop and gets them back),
so every kernel works on the loop-free adjacency. Rank computations on a
graph with loops run on its loop-subdivision by default; pass
``subdivide=False`` to work on the graph as given.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Iterator, Sequence

from . import _backend
from .graphcore import GraphError, Multigraph, is_loop_free, require_connected, subdivide_loops

Divisor = tuple[int, ...]
FiringScript = tuple[int, ...]


class DivisorError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionResult:
    reduced: Divisor
    script: FiringScript
    base: int


def kernel(G: Multigraph, pure: bool = False):
    """The chip-firing kernel for G, built once per graph object."""
    attr = "_pykernel" if pure else "_kernel"
    K = G.__dict__.get(attr)
    if K is None:
        cls = _backend.PyKernel if pure else _backend.Kernel
        valence = [sum(m for _, m in a) for a in G.neighbors]
        K = cls(G.n, G.neighbors, valence)
        G.__dict__[attr] = K
    return K


def working_graph(G: Multigraph, subdivide: bool = True) -> Multigraph:
    """G itself, or its loop-subdivision (cached) when it has loops."""
    if not subdivide or is_loop_free(G):
        return G
    H = G.__dict__.get("_subdivided")
    if H is None:
        H = subdivide_loops(G)
        G.__dict__["_subdivided"] = H
    return H


def _lift(G: Multigraph, H: Multigraph, D: Sequence[int]) -> list[int]:
    # subdivision keeps original labels and appends the new vertices
    return list(D) + [0] * (H.n - G.n)


def _check(G: Multigraph, D: Sequence[int]) -> None:
    if len(D) != G.n:
        raise DivisorError(f"divisor has length {len(D)}, graph has {G.n} vertices")


def deg(D: Sequence[int]) -> int:
    return sum(D)


def is_effective(D: Sequence[int]) -> bool:
    return all(x >= 0 for x in D)


def zero(G: Multigraph) -> Divisor:
    return (0,) * G.n


def point(G: Multigraph, v: int, k: int = 1) -> Divisor:
    """The divisor k*v."""
    G._check_vertex(v)
    D = [0] * G.n
    D[v] = k
    return tuple(D)


def from_dict(data: dict, key: str = "values") -> Divisor:
    try:
        return tuple(int(x) for x in data[key])
    except (KeyError, TypeError, ValueError) as exc:
        raise DivisorError(f"malformed divisor document: {exc}") from exc


def to_json(D: Sequence[int], key: str = "values") -> str:
    return json.dumps({key: list(D)})


# -- firing ---------------------------------------------------------------


def chip_fire(G: Multigraph, D: Sequence[int], v: int) -> Divisor:
    _check(G, D)
    G._check_vertex(v)
    out = list(D)
    for w, m in G.neighbors[v]:
        out[v] -= m
        out[w] += m
    return tuple(out)


def apply_script(G: Multigraph, D: Sequence[int], script: Sequence[int]) -> Divisor:
    """Fire each vertex ``script[v]`` times (negative = reverse-fire)."""
    _check(G, D)
    if len(script) != G.n:
        raise DivisorError("firing script length does not match the graph")
    out = list(D)
    for v in range(G.n):
        s = script[v]
        if s:
            for w, m in G.neighbors[v]:
                out[v] -= s * m
                out[w] += s * m
    return tuple(out)


def fire_set(G: Multigraph, D: Sequence[int], S: Iterable[int]) -> Divisor:
    script = [0] * G.n
    for v in set(S):
        G._check_vertex(v)
        script[v] = 1
    return apply_script(G, D, script)


# -- reduction ------------------------------------------------------------


def dhar_unburnt(G: Multigraph, D: Sequence[int], q: int) -> frozenset[int]:
    """Maximal set avoiding q in which every vertex can afford to fire."""
    _check(G, D)
    G._check_vertex(q)
    require_connected(G)
    if any(D[v] < 0 for v in range(G.n) if v != q):
        raise DivisorError("dhar_unburnt needs D(v) >= 0 away from q")
    return frozenset(kernel(G).unburnt(D, q))


def _reduced_laplacian_inverse(G: Multigraph, q: int) -> list[list[Fraction]]:
    cache = G.__dict__.setdefault("_lq_inverse", {})
    if q in cache:
        return cache[q]
    idx = [v for v in range(G.n) if v != q]
    pos = {v: i for i, v in enumerate(idx)}
    k = len(idx)
    M = [[Fraction(0)] * k + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for v in idx:
        for w, m in G.neighbors[v]:
            M[pos[v]][pos[v]] += m
            if w != q:
                M[pos[v]][pos[w]] -= m
    for c in range(k):
        piv = next(r for r in range(c, k) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for r in range(k):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    cache[q] = [row[k:] for row in M]
    return cache[q]


def _presolve(G: Multigraph, D: Sequence[int], q: int) -> tuple[list[int], list[int] | None]:
    """Bring huge chip counts near the reduced form in one linear-algebra step.

    The burning loop moves chips a few at a time, so its running time grows
    with the magnitudes. Firing floor(L_q^-1 D) first leaves every entry off
    q bounded by twice its valence.
    """
    bound = 2 * G.num_edges
    if G.n == 1 or all(abs(D[v]) <= bound for v in range(G.n) if v != q):
        return list(D), None
    inv = _reduced_laplacian_inverse(G, q)
    rest = [D[v] for v in range(G.n) if v != q]
    y = [floor(sum(a * b for a, b in zip(row, rest) if b)) for row in inv]
    script = y[:q] + [0] + y[q:]
    return list(apply_script(G, D, script)), script


def q_reduce(G: Multigraph, D: Sequence[int], q: int = 0) -> ReductionResult:
    _check(G, D)
    G._check_vertex(q)
    require_connected(G)
    D, pre = _presolve(G, D, q)
    red, script = kernel(G).reduce(D, q)
    if pre is not None:
        script = tuple(a + b for a, b in zip(pre, script))
    return ReductionResult(red, script, q)


def reduced_form(G: Multigraph, D: Sequence[int], q: int = 0) -> Divisor:
    _check(G, D)
    G._check_vertex(q)
    require_connected(G)
    return kernel(G).reduced(_presolve(G, D, q)[0], q)


def is_equivalent(G: Multigraph, D1: Sequence[int], D2: Sequence[int], q: int = 0) -> bool:
    _check(G, D1)
    _check(G, D2)
    if deg(D1) != deg(D2):
        return False
    return reduced_form(G, D1, q) == reduced_form(G, D2, q)


def effective_representative(G: Multigraph, D: Sequence[int]) -> tuple[Divisor, FiringScript] | None:
    """An effective divisor equivalent to D with the script reaching it, or None."""
    res = q_reduce(G, D, 0)
    if res.reduced[0] < 0:
        return None
    return res.reduced, res.script


def has_effective_representative(G: Multigraph, D: Sequence[int]) -> bool:
    _check(G, D)
    require_connected(G)
    return kernel(G).reduced(_presolve(G, D, 0)[0], 0)[0] >= 0


# -- rank -----------------------------------------------------------------


def rank_at_least(G: Multigraph, D: Sequence[int], r: int, subdivide: bool = True) -> bool:
    _check(G, D)
    require_connected(G)
    H = working_graph(G, subdivide)
    return kernel(H).rank_at_least(_lift(G, H, D), r)


def rank(G: Multigraph, D: Sequence[int], subdivide: bool = True) -> int:
    """Baker-Norine rank: -1 without an effective representative."""
    _check(G, D)
    require_connected(G)
    H = working_graph(G, subdivide)
    K = kernel(H)
    D = _lift(G, H, D)
    if not K.rank_at_least(D, 0):
        return -1
    r = 0
    while K.rank_at_least(D, r + 1):
        r += 1
    return r


def canonical_divisor(G: Multigraph) -> Divisor:
    if not is_loop_free(G):
        raise GraphError("canonical_divisor needs a loop-free graph; subdivide or strip loops first")
    return tuple(d - 2 for d in G.degrees)


# -- enumeration ----------------------------------------------------------


def _multisets(n: int, d: int, top: int) -> Iterator[tuple[int, ...]]:
    # colex: the largest element is the most significant
    if d == 0:
        yield ()
        return
    for t in range(top + 1):
        for rest in _multisets(n, d - 1, t):
            yield rest + (t,)


def enumerate_effective(G: Multigraph, d: int) -> Iterator[Divisor]:
    """Every effective degree-d divisor once, colex on the vertex multiset."""
    if d < 0:
        raise DivisorError("degree must be nonnegative")
    if G.n == 0:
        return
    for ms in _multisets(G.n, d, G.n - 1):
        D = [0] * G.n
        for v in ms:
            D[v] += 1
        yield tuple(D)


def enumerate_classes_with_effective(G: Multigraph, d: int, q: int = 0) -> Iterator[Divisor]:
    """One q-reduced representative per class of degree d containing an effective divisor.

    Reduced effective divisors are exactly c + k*q for superstable c, so the
    stream walks superstables of degree <= d.
    """
    if d < 0:
        raise DivisorError("degree must be nonnegative")
    require_connected(G)
    for c in kernel(G).superstables(q, d):
        D = list(c)
        D[q] = d - sum(c)
        yield tuple(D)
