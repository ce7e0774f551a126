"""Registry of reproducible claims for ``paper-verify``.

Each claim regenerates its graph from a family spec string, runs one check
and returns ``(ok, detail)``. Claims are independent and ordered by id.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import divisor as dv
from .brillnoether import exists_rank_at_least, gonality, is_bn_general, is_hyperelliptic, rank, rho, verify_certificate
from .families import LabeledGraph, build
from .graphcore import Multigraph, genus, is_tree, new_graph
from .symmetry import involutions, quotient

DIAMOND_EDGES = [(0, 1), (1, 3), (0, 3), (2, 3), (1, 2)]


@dataclass(frozen=True)
class Claim:
    id: str
    spec: str
    check: Callable[[LabeledGraph], tuple[bool, str]]

    @property
    def genus(self) -> int:
        G = build(self.spec).graph if self.spec else new_graph(4, DIAMOND_EDGES)
        return genus(G)

    def run(self) -> "ClaimResult":
        t0 = time.perf_counter()
        try:
            lg = build(self.spec) if self.spec else None
            ok, detail = self.check(lg)
        except Exception as exc:  # a crashing claim is a failed claim
            ok, detail = False, f"error: {type(exc).__name__}: {exc}"
        return ClaimResult(self.id, ok, detail, time.perf_counter() - t0)


@dataclass(frozen=True)
class ClaimResult:
    id: str
    ok: bool
    detail: str
    seconds: float


def _point(G: Multigraph, *terms: tuple[int, int]) -> tuple[int, ...]:
    D = [0] * G.n
    for v, k in terms:
        D[v] += k
    return tuple(D)


# -- individual checks ------------------------------------------------------


def _small_fire_example(_):
    G = new_graph(4, DIAMOND_EDGES)
    out = dv.chip_fire(G, (4, -1, 0, 5), 3)
    return out == (5, 0, 1, 2), f"fire(3) -> {list(out)}"


def _triangle_or_hyperelliptic(g: int, prime: bool):
    def check(lg: LabeledGraph):
        G = lg.graph
        h = is_hyperelliptic(G)
        if g not in (7, 13):
            return h is not None, f"hyperelliptic witness {list(h) if h else None}"
        # the non-hyperelliptic members carry a degree-3 pencil
        v = lg.one("cone-apex") if prime else lg.one("central-triangle")
        ok = h is None and verify_certificate(G, _point(G, (v, 3)), 1) and rho(g, 1, 3) < 0
        return ok, f"not hyperelliptic; 3*v{v} rank>=1; rho^1_3={rho(g, 1, 3)}"
    return check


def _bn_verdict(expected: str):
    def check(lg: LabeledGraph):
        rep = is_bn_general(lg.graph, lg.name)
        bad = [f"({p.r},{p.d})" for p in rep.pairs if p.violated]
        return rep.verdict == expected, f"{rep.verdict}; violated {' '.join(bad) or 'none'}"
    return check


def _doubled_pair_witness(lg: LabeledGraph):
    G = lg.graph
    v, w = lg.marks["doubled-pairs"][:2]
    D = _point(G, (v, 2), (w, 2))
    g = genus(G)
    ok = verify_certificate(G, D, 1) and rho(g, 1, 4) < 0 and is_bn_general(G).verdict == "special"
    return ok, f"2*v{v}+2*v{w} rank>=1, rho^1_4={rho(g, 1, 4)}"


def _hyperelliptic(expected: bool):
    def check(lg: LabeledGraph):
        h = is_hyperelliptic(lg.graph)
        return (h is not None) == expected, f"witness {list(h) if h else None}"
    return check


def _genus7_certificate(lg: LabeledGraph):
    G = lg.graph
    D = _point(G, (11, 3), (1, 1))
    ok = verify_certificate(G, D, 1) and rank(G, D) == 1 and is_bn_general(G).verdict == "special"
    return ok, "3*v11+v1 has rank 1; special"


def _heawood_7v(lg: LabeledGraph):
    G = lg.graph
    ranks = {rank(G, _point(G, (v, 7))) for v in range(G.n)}
    return ranks == {2}, f"rank(7v) over all v: {sorted(ranks)}; rho^2_7(8)={rho(8, 2, 7)}"


def _heawood_gonality(lg: LabeledGraph):
    k = gonality(lg.graph)
    return k == 5, f"gonality {k}"


def _case_cert(kind: str):
    def check(lg: LabeledGraph):
        G = lg.graph
        g = genus(G)
        if kind == "4v":
            v = lg.marks["tree"][0]
            D = _point(G, (v, 4))
        elif kind == "5v":
            v = lg.marks["tree"][0]
            D = _point(G, (v, 5))
        else:
            a, b = lg.marks["cycle"][:2]
            D = _point(G, (a, 3), (b, 2))
        d = dv.deg(D)
        ok = verify_certificate(G, D, 1) and rho(g, 1, d) < 0
        return ok, f"{kind} rank>=1 on genus {g}; rho^1_{d}={rho(g, 1, d)}"
    return check


def _tree_points_equivalent(lg: LabeledGraph):
    G = lg.graph
    T = lg.marks["tree"]
    ok = all(dv.is_equivalent(G, _point(G, (v, n)), _point(G, (w, n)))
             for n in (1, 2, 3) for v in T for w in T)
    return ok, f"n*v ~ n*w over {len(T)} tree vertices, n<=3"


def _junction_step_effective(lg: LabeledGraph):
    G = lg.graph
    checked = 0
    for key, piece in lg.marks.items():
        if not key.startswith("piece"):
            continue
        v = lg.marks["junctions"][int(key[5:])]
        for w in piece:
            if not dv.has_effective_representative(G, _point(G, (v, 4), (w, -1))):
                return False, f"4*v{v} - v{w} has no effective representative"
            checked += 1
    return checked > 0, f"4v - w effective-equivalent for {checked} choices of w"


def _pendant_script_values(lg: LabeledGraph):
    G = lg.graph
    cyc = lg.marks["cycle"]
    n = len(cyc)
    script = [0] * G.n
    for ell, v in enumerate(cyc, start=1):
        # v_ell fires with its pendant piece so the bridge edge carries nothing
        for u in (v,) + lg.marks[f"piece{ell - 1}"]:
            script[u] = 2 * n - ell + 1
    out = dv.apply_script(G, _point(G, (cyc[0], n)), script)
    return out == _point(G, (cyc[-1], n)), f"n={n}: n*v_1 -> n*v_n by script (2n-l+1)"


def _two_n_equiv(key: str):
    def check(lg: LabeledGraph):
        G = lg.graph
        vs = lg.marks[key]
        ok = all(dv.is_equivalent(G, _point(G, (v, 2 * n)), _point(G, (w, 2 * n)))
                 for n in (1, 2, 3) for v in vs for w in vs)
        return ok, f"(2n)v ~ (2n)w on {key}, n<=3"
    return check


def _tree_quotient_exists(lg: LabeledGraph):
    G = lg.graph
    for sigma in involutions(G):
        if sigma != tuple(range(G.n)) and is_tree(quotient(G, sigma)):
            return True, f"involution {list(sigma)} with tree quotient"
    return False, "no involution with tree quotient"


# -- registry -----------------------------------------------------------------


def all_claims() -> list[Claim]:
    claims = [Claim("fig1-fire", "", _small_fire_example)]
    for g in range(3, 15):
        claims.append(Claim(f"thm1-g{g}", f"graph_C({g})", _triangle_or_hyperelliptic(g, False)))
    for g in range(6, 15):
        claims.append(Claim(f"thm2-g{g}", f"graph_C_prime({g})", _triangle_or_hyperelliptic(g, True)))
    claims += [
        Claim("multi-g3-tetrahedron", "tetrahedron", _bn_verdict("general")),
        Claim("multi-g4-k33", "k33", _bn_verdict("general")),
        Claim("multi-g5-loop-of-loops", "loop_of_loops(5)", _bn_verdict("general")),
        Claim("multi-g6-cprime", "graph_C_prime(6)", _hyperelliptic(True)),
        Claim("multi-g7-loop-of-loops", "loop_of_loops(7)", _doubled_pair_witness),
        Claim("multi-g8-cprime", "graph_C_prime(8)", _hyperelliptic(True)),
        Claim("multi-g9-cprime", "graph_C_prime(9)", _hyperelliptic(True)),
        Claim("multi-g9-loop-of-loops", "loop_of_loops(9)", _doubled_pair_witness),
        Claim("fig4-ctilde4-not-hyperelliptic", "loop_of_loops(4)", _hyperelliptic(False)),
        Claim("fig5-cone", "cone", _tree_quotient_exists),
        Claim("fig5-k23", "k23", _tree_quotient_exists),
        Claim("simple-g3-tetrahedron", "tetrahedron", _bn_verdict("general")),
        Claim("simple-g4-k33", "k33", _bn_verdict("general")),
        Claim("simple-g5-cube", "cube", _bn_verdict("general")),
        Claim("simple-g6-petersen", "petersen", _bn_verdict("general")),
        Claim("simple-g7-fig6", "genus7max", _genus7_certificate),
        Claim("heawood-special", "heawood", _bn_verdict("special")),
        Claim("heawood-7v", "heawood", _heawood_7v),
        Claim("heawood-gonality", "heawood", _heawood_gonality),
        Claim("fig8-c12", "c12_double_prime", _case_cert("4v")),
    ]
    for m in (0, 1):
        for shape, count in (("CommonRoot", 3), ("Edge", 4), ("K23Shape", 3), ("Square", 4), ("TwoTriangles", 2)):
            spec = f"case_join({shape}, a_graph({m}), {count})"
            claims.append(Claim(f"thm3-case1-{shape.lower()}-a{m}", spec, _case_cert("4v")))
        claims.append(Claim(f"thm3-case2-triangle-a{m}", f"case_join(Triangle, a_graph({m}), 3)", _case_cert("3v+2w")))
        claims.append(Claim(f"thm3-case3-pentagon-a{m}", f"case_join(Pentagon, a_graph({m}), 5)", _case_cert("5v")))
    claims.append(Claim("thm3-case1-path3-a0", "case_join(Path(3), a_graph(0), 5)", _case_cert("4v")))
    for spec in ("a_graph(1)", "a_graph(2)", "b_graph(2)", "b_graph(3)"):
        tag = spec.replace("_graph(", "").rstrip(")")
        claims.append(Claim(f"lemma1-{tag}", spec, _tree_points_equivalent))
        claims.append(Claim(f"lemma2-{tag}", spec, _junction_step_effective))
    for shape, n in (("Triangle", 3), ("Square", 4), ("Pentagon", 5)):
        for piece in ("a_graph(0)", "b_graph(2)"):
            tag = piece.replace("_graph(", "").rstrip(")")
            claims.append(Claim(f"lemma3-n{n}-{tag}", f"case_join({shape}, {piece}, {n})", _pendant_script_values))
    for piece in ("a_graph(0)", "a_graph(1)", "b_graph(2)"):
        tag = piece.replace("_graph(", "").rstrip(")")
        claims.append(Claim(f"lemma4-{tag}", f"case_join(K23Shape, {piece}, 3)", _two_n_equiv("k23-bivalent")))
        claims.append(Claim(f"lemma5-{tag}", f"case_join(TwoTriangles, {piece}, 2)", _two_n_equiv("tips")))
    return sorted(claims, key=lambda c: c.id)


def select(claims: list[Claim], prefix: str | None = None,
           genus_range: tuple[int, int] | None = None) -> list[Claim]:
    """Filter by id (exact, or a dash-separated prefix such as ``lemma3``) and genus."""
    out = []
    for c in claims:
        if prefix and not (c.id == prefix or c.id.startswith(prefix + "-")):
            continue
        if genus_range and not genus_range[0] <= c.genus <= genus_range[1]:
            continue
        out.append(c)
    return out


def run_claims(claims: list[Claim]) -> list[ClaimResult]:
    return [c.run() for c in claims]


def format_results(results: list[ClaimResult], timings: bool = True) -> str:
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.id}: {r.detail}" for r in results]
    passed = sum(r.ok for r in results)
    lines.append(f"summary: {passed}/{len(results)} claims pass")
    if timings:
        lines.append("timings:")
        lines += [f"  {r.id} {r.seconds:.3f}s" for r in results]
        lines.append(f"  total {sum(r.seconds for r in results):.3f}s")
    return "\n".join(lines) + "\n"
