"""Generators for the trivalent graph families.

Every generator returns a :class:`LabeledGraph`: the multigraph plus named
vertex sets ("marks") that certificates refer to, such as the leaves of a
tree, the central triangle of C_7 or the pinch vertex of a pinched
tetrahedron.

Labeling conventions
--------------------
* tree_T: leaves are 0..n-1 in row order; internal vertices follow in the
  order the construction rules create them.
* cone: apex 0, doubled edge 1=2.
* pinched pieces: the pinch is the last vertex.
* Attaching a piece never renumbers existing vertices; new ones are appended.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Sequence

from .graphcore import GraphError, Multigraph, attach_edge, components, strip_loops
from . import symmetry


class FamilyError(GraphError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Multigraph
    marks: dict[str, tuple[int, ...]] = field(default_factory=dict)
    name: str = ""
    flags: tuple[str, ...] = ()

    def mark(self, key: str) -> tuple[int, ...]:
        try:
            return self.marks[key]
        except KeyError:
            raise FamilyError(f"{self.name or 'graph'} has no mark {key!r}") from None

    def one(self, key: str) -> int:
        vs = self.mark(key)
        if not vs:
            raise FamilyError(f"mark {key!r} is empty")
        return vs[0]


class _Builder:
    def __init__(self, n: int = 0, edges: Sequence[tuple[int, int]] = ()):
        self.n = n
        self.edges = list(edges)

    def add(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int, k: int = 1) -> None:
        self.edges += [(u, v)] * k

    def remove_edge(self, u: int, v: int) -> None:
        for i, e in enumerate(self.edges):
            if e in ((u, v), (v, u)):
                del self.edges[i]
                return
        raise FamilyError(f"no edge ({u}, {v})")

    def graft(self, G: Multigraph, at: dict[int, int] | None = None) -> list[int]:
        """Copy G in, fusing G-vertex k onto existing vertex at[k]."""
        at = at or {}
        mapping = [at[v] if v in at else self.add() for v in range(G.n)]
        self.edges += [(mapping[u], mapping[v]) for u, v in G.edges]
        return mapping

    def graph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)


def _is_pow2(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def _bits(k: int) -> list[int]:
    return [i for i in range(k.bit_length()) if k >> i & 1]


# -- trees ----------------------------------------------------------------


def _build_tree(b: _Builder, n: int, final: str = "hub") -> dict[str, tuple[int, ...]]:
    """Unrooted T_n into builder b.

    ``final`` controls the last step when three vertices remain unpaired:
    "hub" joins them to a new vertex, "triangle" joins them to the three
    corners of a new triangle.
    """
    leaves = [b.add() for _ in range(n)]
    marks: dict[str, tuple[int, ...]] = {"leaves": tuple(leaves)}
    level = list(leaves)
    pending: list[int] = []
    while True:
        unpaired = pending + level
        if len(unpaired) <= 1:
            break
        if len(unpaired) == 2:
            b.edge(*unpaired)
            marks["last-edge"] = tuple(unpaired)
            break
        if len(unpaired) == 3:
            if final == "triangle":
                tri = [b.add() for _ in range(3)]
                for t, u in zip(tri, unpaired):
                    b.edge(t, u)
                b.edge(tri[0], tri[1])
                b.edge(tri[1], tri[2])
                b.edge(tri[0], tri[2])
                marks["central-triangle"] = tuple(tri)
            else:
                hub = b.add()
                for u in unpaired:
                    b.edge(hub, u)
                marks["hub"] = (hub,)
            marks["branches"] = tuple(unpaired)
            break
        nxt = []
        for i in range(len(level) // 2):
            p = b.add()
            b.edge(p, level[2 * i])
            b.edge(p, level[2 * i + 1])
            nxt.append(p)
        if len(level) % 2:
            odd = level[-1]
            if pending:
                x = b.add()
                b.edge(x, odd)
                b.edge(x, pending.pop())
                nxt.append(x)
            else:
                pending.append(odd)
        level = nxt
    return marks


def _build_rooted_tree(b: _Builder, n: int) -> dict[str, tuple[int, ...]]:
    if not _is_pow2(n):
        raise FamilyError(f"rooted tree_T needs a power of two, got {n}")
    leaves = [b.add() for _ in range(n)]
    level = list(leaves)
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level), 2):
            p = b.add()
            b.edge(p, level[i])
            b.edge(p, level[i + 1])
            nxt.append(p)
        level = nxt
    return {"leaves": tuple(leaves), "root": (level[0],)}


def tree_T(n: int, rooted: bool = False) -> LabeledGraph:
    """The tree T_n.

    Unrooted: n >= 3 (n = 1, 2 give the single vertex and the single edge).
    Rooted: n a power of two, pairing continued up to a bivalent root.
    """
    b = _Builder()
    if rooted:
        marks = _build_rooted_tree(b, n)
    else:
        if n < 1:
            raise FamilyError(f"tree_T needs n >= 1, got {n}")
        marks = _build_tree(b, n)
    marks["tree"] = tuple(range(b.n))
    return LabeledGraph(b.graph(), marks, f"T_{n}{'_rooted' if rooted else ''}")


# -- small pieces ---------------------------------------------------------


def cone() -> LabeledGraph:
    return LabeledGraph(Multigraph(3, [(0, 1), (0, 2), (1, 2), (1, 2)]),
                        {"cone-apex": (0,), "base": (1, 2)}, "cone")


def k23() -> LabeledGraph:
    edges = [(t, b) for t in (0, 1) for b in (2, 3, 4)]
    return LabeledGraph(Multigraph(5, edges), {"trivalent": (0, 1), "bivalent": (2, 3, 4)}, "K_{2,3}")


def pinched_tetrahedron() -> LabeledGraph:
    edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    return LabeledGraph(Multigraph(5, edges), {"pinch": (4,), "root": (4,), "tree": (4,)},
                        "pinched tetrahedron")


def pinched_k33() -> LabeledGraph:
    edges = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (0, 3)]
    edges += [(0, 6), (3, 6)]
    return LabeledGraph(Multigraph(7, edges), {"pinch": (6,), "root": (6,), "tree": (6,)},
                        "pinched K_{3,3}")


def tetrahedron() -> LabeledGraph:
    return LabeledGraph(Multigraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]), {}, "tetrahedron")


def k33() -> LabeledGraph:
    return LabeledGraph(Multigraph(6, [(a, b) for a in range(3) for b in range(3, 6)]), {}, "K_{3,3}")


def cube() -> LabeledGraph:
    edges = [(v, v ^ (1 << i)) for v in range(8) for i in range(3) if v < v ^ (1 << i)]
    return LabeledGraph(Multigraph(8, edges), {}, "cube")


def petersen() -> LabeledGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return LabeledGraph(Multigraph(10, edges), {}, "Petersen")


def heawood() -> LabeledGraph:
    # LCF notation [5, -5]^7
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return LabeledGraph(Multigraph(14, edges), {}, "Heawood")


def genus7max() -> LabeledGraph:
    """The 12-vertex genus-7 graph: an 8-cycle with a ladder on each side."""
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(1, 8), (8, 9), (9, 4), (2, 9), (3, 8)]
    edges += [(5, 10), (10, 11), (11, 0), (7, 10), (6, 11)]
    return LabeledGraph(Multigraph(12, edges), {"outer-cycle": tuple(range(8))}, "Genus7Max")


def loop_of_loops(g: int) -> LabeledGraph:
    """The 2(g-1)-gon with every other edge doubled."""
    if g < 3:
        raise FamilyError(f"loop_of_loops needs g >= 3, got {g}")
    k = 2 * (g - 1)
    edges = []
    for i in range(k):
        edges += [(i, (i + 1) % k)] * (2 if i % 2 == 0 else 1)
    pairs = tuple(v for i in range(0, k, 2) for v in (i, i + 1))
    return LabeledGraph(Multigraph(k, edges), {"doubled-pairs": pairs}, f"loop_of_loops({g})")


# -- loops and cones on trees -------------------------------------------


def _add_loops(b: _Builder, sites: Sequence[int]) -> None:
    for v in sites:
        b.edge(v, v)


def _add_cones(b: _Builder, sites: Sequence[int]) -> tuple[int, ...]:
    for v in sites:
        b.graft(cone().graph, {0: v})
    return tuple(sites)


def _double_in_middle(b: _Builder, u: int, w: int) -> tuple[int, int]:
    b.remove_edge(u, w)
    a, c = b.add(), b.add()
    b.edge(u, a)
    b.edge(a, c, 2)
    b.edge(c, w)
    return a, c


def _star_of_pieces(b: _Builder, pieces: Sequence[tuple[Multigraph, int]]) -> tuple[int, list[list[int]]]:
    centre = b.add()
    maps = []
    for P, root in pieces:
        m = b.graft(P)
        b.edge(centre, m[root])
        maps.append(m)
    return centre, maps


def _line_piece(m_size: int, p_size: int) -> LabeledGraph:
    """Path b0-b1-b2 with rooted trees of the given sizes fused at b0 and b2."""
    b = _Builder(3, [(0, 1), (1, 2)])
    leaves = []
    for end, size in ((0, m_size), (2, p_size)):
        tb = _Builder()
        tm = _build_rooted_tree(tb, size)
        mapping = b.graft(tb.graph(), {tm["root"][0]: end})
        leaves += [mapping[x] for x in tm["leaves"]]
    return LabeledGraph(b.graph(), {"root": (1,), "leaves": tuple(leaves)}, "line piece")


def _three_star(piece: LabeledGraph) -> tuple[_Builder, dict[str, tuple[int, ...]]]:
    b = _Builder()
    centre, maps = _star_of_pieces(b, [(piece.graph, piece.one("root"))] * 3)
    leaves = tuple(m[x] for m in maps for x in piece.mark("leaves"))
    joints = tuple(m[piece.one("root")] for m in maps)
    return b, {"star-centre": (centre,), "leaves": leaves, "star-ends": joints}


def _classify_c(g: int) -> str:
    if g >= 4 and (g - 1) % 3 == 0 and _is_pow2((g - 1) // 3) and (g - 1) // 3 >= 2:
        return "triangle"
    if g % 3 == 0 and len(_bits(g // 3)) == 2:
        p, m = _bits(g // 3)
        return "star" if m > p + 1 else "gap"
    return "tree"


def _c_skeleton(g: int) -> tuple[_Builder, dict[str, tuple[int, ...]], tuple[str, ...]]:
    """C_g without its loops; ``marks['leaves']`` are the loop sites."""
    kind = _classify_c(g)
    if kind == "triangle":
        b = _Builder()
        marks = _build_tree(b, g - 1, final="triangle")
        return b, marks, ()
    if kind == "star":
        p, m = _bits(g // 3)
        b, marks = _three_star(_line_piece(2 ** m, 2 ** p))
        return b, marks, ()
    b = _Builder()
    marks = _build_tree(b, g)
    return b, marks, (("gap case",) if kind == "gap" else ())


def graph_C(g: int) -> LabeledGraph:
    """C_g: the maximally symmetric trivalent genus-g multigraph with loops."""
    if g < 3:
        raise FamilyError(f"graph_C needs g >= 3, got {g}")
    b, marks, flags = _c_skeleton(g)
    _add_loops(b, marks["leaves"])
    marks["loops"] = marks["leaves"]
    return LabeledGraph(b.graph(), marks, f"C_{g}", flags)


# -- C'_g -------------------------------------------------------------------


def _expand(b: _Builder, v: int, shape: str) -> tuple[int, ...]:
    """Replace trivalent v by a triangle or K_{2,3}; v is reused as one corner."""
    nbrs = [w if u == v else u for u, w in b.edges if v in (u, w)]
    if len(nbrs) != 3 or v in nbrs:
        raise FamilyError(f"vertex {v} is not a loop-free trivalent vertex")
    for w in nbrs[1:]:
        b.remove_edge(v, w)
    if shape == "triangle":
        t1, t2 = b.add(), b.add()
        b.edge(t1, nbrs[1])
        b.edge(t2, nbrs[2])
        b.edge(v, t1)
        b.edge(t1, t2)
        b.edge(v, t2)
        return (v, t1, t2)
    x2, x3 = b.add(), b.add()
    b.edge(x2, nbrs[1])
    b.edge(x3, nbrs[2])
    w1, w2 = b.add(), b.add()
    for x in (v, x2, x3):
        b.edge(w1, x)
        b.edge(w2, x)
    return (v, x2, x3, w1, w2)


def _cprime_star(m: int) -> tuple[_Builder, dict[str, tuple[int, ...]]]:
    """Three rooted T_{2^(m-1)} on a 3-star, cones on the leaves: C'_{3*2^m}."""
    tb = _Builder()
    tm = _build_rooted_tree(tb, 2 ** (m - 1))
    piece = LabeledGraph(tb.graph(), {"root": tm["root"], "leaves": tm["leaves"]})
    b, marks = _three_star(piece)
    marks["cone-apex"] = _add_cones(b, marks["leaves"])
    return b, marks


def _odd_branch(G: Multigraph, hub: int, branches: Sequence[int]) -> int:
    """The branch root whose subtree is not isomorphic to the other two."""
    cut = Multigraph(G.n, [e for e in G.edges if hub not in e])
    comp_of = {}
    for comp in components(cut):
        for v in comp:
            comp_of[v] = comp
    subs = []
    for r in branches:
        vs = comp_of[r]
        idx = {v: i for i, v in enumerate(vs)}
        sub = Multigraph(len(vs), [(idx[u], idx[w]) for u, w in cut.edges if u in idx])
        subs.append((sub, idx[r]))
    votes = []
    for i, (S, r) in enumerate(subs):
        same = sum(symmetry.isomorphism(S, T, r, t) is not None for j, (T, t) in enumerate(subs) if j != i)
        votes.append(same)
    return branches[min(range(3), key=lambda i: (votes[i], -i))]


def graph_C_prime(g: int) -> LabeledGraph:
    """C'_g: the maximally symmetric trivalent genus-g multigraph without loops."""
    if g < 3:
        raise FamilyError(f"graph_C_prime needs g >= 3, got {g}")
    name = f"C'_{g}"
    if g == 3:
        t = tetrahedron()
        return LabeledGraph(t.graph, {}, name, ("tetrahedron",))
    s, r = divmod(g, 3)
    if r == 0 and _is_pow2(s) and s >= 2:
        b, marks = _cprime_star(s.bit_length() - 1)
        return LabeledGraph(b.graph(), marks, name)
    if r == 1 and _is_pow2(s) and s >= 2:
        b, marks = _cprime_star(s.bit_length() - 1)
        marks["central-triangle"] = _expand(b, marks["star-centre"][0], "triangle")
        return LabeledGraph(b.graph(), marks, name)
    if r == 2 and _is_pow2(s) and s >= 2:
        b, marks = _cprime_star(s.bit_length() - 1)
        marks["k23"] = _expand(b, marks["star-centre"][0], "k23")
        return LabeledGraph(b.graph(), marks, name)
    if r == 0:
        bits = _bits(s)
        if len(bits) == 2 and bits[0] == 0 and bits[1] > 1:
            return _with_star_doubles(graph_C_prime(g - 3), name)
        if len(bits) == 2 and bits[0] > 0 and bits[1] > bits[0] + 1:
            p, m = bits
            b, marks = _three_star(_line_piece(2 ** (m - 1), 2 ** (p - 1)))
            marks["cone-apex"] = _add_cones(b, marks["leaves"])
            return LabeledGraph(b.graph(), marks, name)
        if len(bits) == 3 and bits[0] == 0 and bits[1] > 0 and bits[2] > bits[1] + 1:
            return _with_star_doubles(graph_C_prime(g - 3), name)
    if g % 2 == 0:
        b, marks, flags = _c_skeleton(g // 2)
        marks["cone-apex"] = _add_cones(b, marks["leaves"])
        return LabeledGraph(b.graph(), marks, name, flags)
    b = _Builder()
    marks = _build_tree(b, g // 2)
    marks["cone-apex"] = _add_cones(b, marks["leaves"])
    if "last-edge" in marks:
        u, w = marks["last-edge"]
    else:
        u = marks["hub"][0]
        w = _odd_branch(b.graph(), u, marks["branches"])
    marks["doubled"] = _double_in_middle(b, u, w)
    return LabeledGraph(b.graph(), marks, name)


def _with_star_doubles(base: LabeledGraph, name: str) -> LabeledGraph:
    b = _Builder(base.graph.n, base.graph.edges)
    marks = dict(base.marks)
    centre = marks["star-centre"][0]
    doubled = []
    for end in marks["star-ends"]:
        doubled += _double_in_middle(b, centre, end)
    marks["doubled"] = tuple(doubled)
    return LabeledGraph(b.graph(), marks, name, base.flags)


# -- A_m, B_m and the simple-graph shapes -------------------------------


def _tree_with_pieces(tree_leaves: int, piece: LabeledGraph, name: str) -> LabeledGraph:
    b = _Builder()
    tm = _build_rooted_tree(b, tree_leaves)
    tree = tuple(range(b.n))
    pinch = piece.one("pinch")
    marks: dict[str, tuple[int, ...]] = {"root": tm["root"], "tree": tree, "junctions": tm["leaves"]}
    for i, leaf in enumerate(tm["leaves"]):
        mapping = b.graft(piece.graph, {pinch: leaf})
        marks[f"piece{i}"] = tuple(mapping)
    return LabeledGraph(b.graph(), marks, name)


def a_graph(m: int) -> LabeledGraph:
    """Pinched tetrahedra fused onto the leaves of the rooted T_{2^m}."""
    if m < 0:
        raise FamilyError(f"a_graph needs m >= 0, got {m}")
    return _tree_with_pieces(2 ** m, pinched_tetrahedron(), f"A_{m}")


def b_graph(m: int) -> LabeledGraph:
    """Pinched K_{3,3}'s fused onto the leaves of the rooted T_{2^(m-2)}."""
    if m < 2:
        raise FamilyError(f"b_graph needs m >= 2, got {m}")
    return _tree_with_pieces(2 ** (m - 2), pinched_k33(), f"B_{m}")


SHAPES = ("CommonRoot", "Edge", "Path", "K23Shape", "Square", "TwoTriangles", "Triangle", "Pentagon")


def _shape_core(shape: str, k: int | None) -> tuple[Multigraph, list[int], dict[str, tuple[int, ...]]]:
    """Core graph, attachment list (one entry per piece) and marks."""
    if shape == "CommonRoot":
        return Multigraph(1), [0, 0, 0], {"core": (0,)}
    if shape in ("Edge", "Path"):
        k = 2 if shape == "Edge" else k
        if k is None or k < 2:
            raise FamilyError("Path shape needs a length >= 2")
        attach = [0, 0] + list(range(1, k - 1)) + [k - 1, k - 1]
        return Multigraph(k, [(i, i + 1) for i in range(k - 1)]), attach, {"core": tuple(range(k))}
    if shape == "K23Shape":
        K = k23()
        return K.graph, list(K.mark("bivalent")), {"core": tuple(range(5)), "k23-bivalent": K.mark("bivalent")}
    if shape == "TwoTriangles":
        # w1=0, w2=1 shared edge; v1=2, v2=3 tips
        G = Multigraph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        return G, [2, 3], {"core": (0, 1, 2, 3), "tips": (2, 3), "shared-edge": (0, 1)}
    sizes = {"Square": 4, "Triangle": 3, "Pentagon": 5}
    if shape in sizes:
        c = sizes[shape]
        return Multigraph(c, [(i, (i + 1) % c) for i in range(c)]), list(range(c)), {"core": tuple(range(c)), "cycle": tuple(range(c))}
    raise FamilyError(f"unknown shape {shape!r}")


def case_join(shape: str, piece: LabeledGraph, count: int, length: int | None = None) -> LabeledGraph:
    """Copies of a rooted piece hung by edges from the attachment vertices of a shape.

    Attachment vertices: CommonRoot (3 pieces on one vertex), Edge (2 pieces
    on each end), Path(k) (2 on each end, 1 on each interior vertex), K23Shape
    (its 3 bivalent vertices), TwoTriangles (the 2 tips), Triangle, Square and
    Pentagon (every cycle vertex).
    """
    core, attach, marks = _shape_core(shape, length)
    if count != len(attach):
        raise FamilyError(f"{shape} takes {len(attach)} pieces, got {count}")
    root = piece.one("root")
    G = core
    roots, trees = [], []
    for i, a in enumerate(attach):
        G, mapping = attach_edge(G, a, piece.graph, root)
        marks[f"piece{i}"] = tuple(mapping)
        roots.append(mapping[root])
        trees += [mapping[v] for v in piece.marks.get("tree", (root,))]
    marks["piece-roots"] = tuple(roots)
    marks["tree"] = tuple(trees)
    marks["attach"] = tuple(attach)
    label = shape if length is None else f"{shape}({length})"
    return LabeledGraph(G, marks, f"case_join({label}, {piece.name}, {count})")


def c12_double_prime() -> LabeledGraph:
    """Edge x=0 -- y=1 with two pinched tetrahedra hung from each end."""
    lg = case_join("Edge", a_graph(0), 4)
    return LabeledGraph(lg.graph, lg.marks, "C''_12")


# -- spec parsing -----------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(str(p) for p in self.params)})"


_GENERATORS = {
    "tree_T": tree_T,
    "graph_C": graph_C,
    "graph_C_prime": graph_C_prime,
    "loop_of_loops": loop_of_loops,
    "a_graph": a_graph,
    "b_graph": b_graph,
    "cone": cone,
    "k23": k23,
    "pinched_tetrahedron": pinched_tetrahedron,
    "pinched_k33": pinched_k33,
    "tetrahedron": tetrahedron,
    "k33": k33,
    "cube": cube,
    "petersen": petersen,
    "heawood": heawood,
    "genus7max": genus7max,
    "c12_double_prime": c12_double_prime,
}

FAMILY_NAMES = tuple(sorted(_GENERATORS)) + ("case_join",)


def _convert(node: ast.AST):
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub) and isinstance(node.operand, ast.Constant):
        return -node.operand.value
    if isinstance(node, ast.Name):
        return FamilySpec(node.id)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        return FamilySpec(node.func.id, tuple(_convert(a) for a in node.args))
    raise FamilyError(f"cannot parse {ast.dump(node)}")


def parse_spec(text: str) -> FamilySpec:
    """Parse e.g. ``graph_C(7)`` or ``case_join(Path(3), a_graph(1), 5)``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise FamilyError(f"bad family spec {text!r}") from exc
    spec = _convert(tree.body)
    if not isinstance(spec, FamilySpec):
        raise FamilyError(f"bad family spec {text!r}")
    return spec


def build(spec: FamilySpec | str) -> LabeledGraph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.kind == "case_join":
        if len(spec.params) != 3 or not isinstance(spec.params[0], FamilySpec):
            raise FamilyError("case_join takes (shape, piece, count)")
        shape, piece, count = spec.params
        length = shape.params[0] if shape.params else None
        return case_join(shape.kind, build(piece), count, length)
    gen = _GENERATORS.get(spec.kind)
    if gen is None:
        raise FamilyError(f"unknown family {spec.kind!r}; choose from {', '.join(FAMILY_NAMES)}")
    try:
        lg = gen(*spec.params)
    except TypeError as exc:
        raise FamilyError(f"bad parameters for {spec.kind}: {exc}") from exc
    return lg


def loop_free_core(lg: LabeledGraph) -> Multigraph:
    return strip_loops(lg.graph)
