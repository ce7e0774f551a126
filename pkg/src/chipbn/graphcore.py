"""Finite multigraphs with loops and parallel edges.

Vertices are dense integers ``0..n-1``. Edges are an unordered multiset of
pairs; a loop is stored as ``(v, v)``. Graph values are immutable, and two
graphs compare equal when they have the same vertex count and the same edge
multiset, independent of the order edges were supplied in.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or violated structural preconditions."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


class Multigraph:
    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        norm = []
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            norm.append(_norm(u, v))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        """Edge multiplicities keyed by normalized pair."""
        return dict(Counter(self.edges))

    @cached_property
    def loops(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.edges:
            if u == v:
                out[u] += 1
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.edges:
            out[u] += 1
            out[v] += 1
        return tuple(out)

    @cached_property
    def neighbors(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(neighbor, multiplicity)`` pairs excluding loops, sorted."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for (u, v), m in self.multiplicity.items():
            if u != v:
                adj[u][v] = adj[u].get(v, 0) + m
                adj[v][u] = adj[v].get(u, 0) + m
        return tuple(tuple(sorted(a.items())) for a in adj)

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get(_norm(u, v), 0)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    # serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"num_vertices": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "Multigraph":
        try:
            n = int(data["num_vertices"])
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph document: {exc}") from exc
        return cls(n, edges)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"graph file is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    # relabeling ------------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        return Multigraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Multigraph:
    return Multigraph(n, edges)


def components(G: Multigraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w, _ in G.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Multigraph) -> bool:
    return G.n > 0 and len(components(G)) == 1


def require_connected(G: Multigraph) -> None:
    if not is_connected(G):
        raise GraphError("operation requires a connected graph")


def genus(G: Multigraph) -> int:
    """First Betti number |E| - |V| + 1; loops count as edges."""
    require_connected(G)
    return G.num_edges - G.n + 1


def degree(G: Multigraph, v: int) -> int:
    return G.degree(v)


def is_simple(G: Multigraph) -> bool:
    return all(u != v and m == 1 for (u, v), m in G.multiplicity.items())


def is_loop_free(G: Multigraph) -> bool:
    return not any(G.loops)


def is_trivalent(G: Multigraph, allowed_exceptions: Iterable[int] = ()) -> bool:
    allowed = set(allowed_exceptions) | {3}
    return all(d in allowed for d in G.degrees)


def is_tree(G: Multigraph) -> bool:
    return is_connected(G) and G.num_edges == G.n - 1


def strip_loops(G: Multigraph) -> Multigraph:
    return Multigraph(G.n, [e for e in G.edges if e[0] != e[1]])


def subdivide_loops(G: Multigraph) -> Multigraph:
    """Replace every loop at v by a new vertex w joined to v by two edges.

    Original vertices keep their indices; new vertices are appended in the
    order of the loops in the sorted edge list.
    """
    edges = []
    n = G.n
    for u, v in G.edges:
        if u == v:
            edges += [(u, n), (u, n)]
            n += 1
        else:
            edges.append((u, v))
    return Multigraph(n, edges)


def disjoint_union(*graphs: Multigraph) -> tuple[Multigraph, list[int]]:
    """Union of graphs; also returns the index offset of each input."""
    offsets, edges, n = [], [], 0
    for G in graphs:
        offsets.append(n)
        edges += [(u + n, v + n) for u, v in G.edges]
        n += G.n
    return Multigraph(n, edges), offsets


def identify(G: Multigraph, keep: int, drop: int) -> tuple[Multigraph, list[int]]:
    """Fuse vertex ``drop`` into ``keep``.

    Returns the fused graph and the old-to-new vertex index map. Vertices
    after ``drop`` shift down by one.
    """
    G._check_vertex(keep)
    G._check_vertex(drop)
    if keep == drop:
        return G, list(range(G.n))
    mapping = []
    for v in range(G.n):
        if v == drop:
            mapping.append(-1)
        else:
            mapping.append(v - (v > drop))
    mapping[drop] = mapping[keep]
    return Multigraph(G.n - 1, [(mapping[u], mapping[v]) for u, v in G.edges]), mapping


def attach_identify(G1: Multigraph, v1: int, G2: Multigraph, v2: int) -> tuple[Multigraph, list[int]]:
    """Glue G2 onto G1 by fusing v2 with v1.

    G1 keeps its labels. Returns the glued graph and the map from G2's
    vertices to their new indices.
    """
    G1._check_vertex(v1)
    G2._check_vertex(v2)
    U, (_, off) = disjoint_union(G1, G2)
    H, mapping = identify(U, v1, off + v2)
    return H, [mapping[off + v] for v in range(G2.n)]


def attach_edge(G1: Multigraph, v1: int, G2: Multigraph, v2: int) -> tuple[Multigraph, list[int]]:
    """Join G1 and G2 by a new bridge v1 -- v2; returns the map of G2's vertices."""
    G1._check_vertex(v1)
    G2._check_vertex(v2)
    U, (_, off) = disjoint_union(G1, G2)
    H = Multigraph(U.n, list(U.edges) + [(v1, off + v2)])
    return H, [off + v for v in range(G2.n)]


def cycle_join(pieces: Sequence[tuple[Multigraph, int]], length: int | None = None) -> tuple[Multigraph, list[int], list[list[int]]]:
    """Cycle of ``len(pieces)`` new vertices, piece i hung by an edge from vertex i.

    Returns ``(graph, cycle_vertices, piece_maps)``; the cycle occupies indices
    ``0..k-1``.
    """
    k = len(pieces)
    if length is not None and length != k:
        raise GraphError(f"cycle length {length} does not match {k} pieces")
    if k < 3:
        raise GraphError("cycle_join needs at least 3 pieces")
    H = Multigraph(k, [(i, (i + 1) % k) for i in range(k)])
    maps = []
    for i, (P, mark) in enumerate(pieces):
        H, m = attach_edge(H, i, P, mark)
        maps.append(m)
    return H, list(range(k)), maps


def star_join(pieces: Sequence[tuple[Multigraph, int]]) -> tuple[Multigraph, int, list[list[int]]]:
    """New centre vertex 0 with one edge to each piece's marked vertex."""
    H = Multigraph(1)
    maps = []
    for P, mark in pieces:
        H, m = attach_edge(H, 0, P, mark)
        maps.append(m)
    return H, 0, maps
