"""``chipbn`` command line.

Exit status: 0 when the computation ran, 1 when a verification or claim
failed, 2 on bad usage, unreadable input or an exhausted search budget.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import claims as claim_registry
from . import divisor as dv
from .brillnoether import BudgetExceeded, gonality, is_bn_general, is_hyperelliptic, verify_certificate
from .families import FAMILY_NAMES, FamilyError, build
from .graphcore import GraphError, Multigraph, genus, is_loop_free, is_tree
from .symmetry import aut_order, automorphisms, involutions, quotient

OK, FAILED, USAGE = 0, 1, 2


class InputError(Exception):
    pass


# -- input helpers ----------------------------------------------------------


def load_graph(arg: str) -> tuple[Multigraph, str]:
    """A graph file path, or a family spec such as ``petersen`` or ``graph_C(7)``."""
    path = Path(arg)
    if path.is_file():
        try:
            return Multigraph.from_json(path.read_text()), path.stem
        except GraphError as exc:
            raise InputError(f"{arg}: {exc}") from exc
    try:
        lg = build(arg)
    except FamilyError as exc:
        raise InputError(f"{arg!r} is neither a graph file nor a family spec ({exc})") from exc
    return lg.graph, lg.name


def load_divisor(arg: str, G: Multigraph, key: str = "values") -> dv.Divisor:
    """A divisor file path or an inline comma-separated list like ``4,-1,0,5``."""
    path = Path(arg)
    if path.is_file():
        try:
            D = dv.from_dict(json.loads(path.read_text()), key)
        except (json.JSONDecodeError, dv.DivisorError) as exc:
            raise InputError(f"{arg}: {exc}") from exc
    else:
        try:
            D = tuple(int(x) for x in arg.replace(" ", "").split(","))
        except ValueError as exc:
            raise InputError(f"{arg!r} is neither a divisor file nor a comma-separated list") from exc
    if len(D) != G.n:
        raise InputError(f"divisor has {len(D)} entries, graph has {G.n} vertices")
    return D


def parse_genus_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..")
            return int(a), int(b)
        g = int(text)
        return g, g
    except ValueError:
        raise argparse.ArgumentTypeError(f"genus range must look like 3..14, got {text!r}")


def emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.format == "machine":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _fmt(D) -> str:
    return "[" + ", ".join(str(x) for x in D) + "]"


# -- commands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = args.family
    if args.params:
        spec = f"{spec}({', '.join(args.params)})"
    try:
        lg = build(spec)
    except FamilyError as exc:
        raise InputError(str(exc)) from exc
    out = Path(args.output)
    out.write_text(lg.graph.to_json() + "\n")
    marks_path = out.with_suffix(".marks.json")
    marks_path.write_text(json.dumps({k: list(v) for k, v in sorted(lg.marks.items())}, indent=2) + "\n")
    G = lg.graph
    emit(args,
         {"name": lg.name, "graph": str(out), "marks": str(marks_path), "vertices": G.n,
          "edges": G.num_edges, "genus": genus(G), "flags": list(lg.flags)},
         [f"name: {lg.name}", f"graph: {out}", f"marks: {marks_path}", f"vertices: {G.n}",
          f"edges: {G.num_edges}", f"genus: {genus(G)}"] + [f"flag: {f}" for f in lg.flags])
    return OK


def cmd_fire(args) -> int:
    G, _ = load_graph(args.graph)
    D = load_divisor(args.divisor, G)
    out = dv.chip_fire(G, D, args.vertex)
    emit(args, {"values": list(out)}, [f"divisor: {_fmt(out)}"])
    return OK


def cmd_reduce(args) -> int:
    G, _ = load_graph(args.graph)
    D = load_divisor(args.divisor, G)
    res = dv.q_reduce(G, D, args.base)
    emit(args, {"base": res.base, "values": list(res.reduced), "counts": list(res.script)},
         [f"base: {res.base}", f"reduced: {_fmt(res.reduced)}", f"script: {_fmt(res.script)}"])
    return OK


def cmd_equiv(args) -> int:
    G, _ = load_graph(args.graph)
    D1 = load_divisor(args.divisor1, G)
    D2 = load_divisor(args.divisor2, G)
    same = dv.is_equivalent(G, D1, D2, args.base)
    emit(args, {"equivalent": same}, [f"equivalent: {'yes' if same else 'no'}"])
    return OK


def cmd_rank(args) -> int:
    G, _ = load_graph(args.graph)
    D = load_divisor(args.divisor, G)
    r = dv.rank(G, D, subdivide=not args.no_subdivide)
    sub = not args.no_subdivide and not is_loop_free(G)
    emit(args, {"rank": r, "degree": dv.deg(D), "subdivided": sub},
         [f"degree: {dv.deg(D)}", f"subdivided: {'yes' if sub else 'no'}", f"rank: {r}"])
    return OK


def cmd_bn_check(args) -> int:
    G, name = load_graph(args.graph)
    report = is_bn_general(G, name, exhaustive=args.exhaustive, max_classes=args.max_classes,
                           subdivide=not args.no_subdivide)
    timings = not args.no_timings
    sys.stdout.write(report.to_machine(timings) if args.format == "machine" else report.to_text(timings))
    return OK


def cmd_hyperelliptic(args) -> int:
    G, _ = load_graph(args.graph)
    w = is_hyperelliptic(G)
    emit(args, {"hyperelliptic": w is not None, "witness": list(w) if w else None},
         [f"hyperelliptic: {'yes' if w else 'no'}"] + ([f"witness: {_fmt(w)}"] if w else []))
    return OK


def cmd_gonality(args) -> int:
    G, _ = load_graph(args.graph)
    k = gonality(G)
    emit(args, {"gonality": k}, [f"gonality: {k}"])
    return OK


def cmd_verify(args) -> int:
    G, _ = load_graph(args.graph)
    D = load_divisor(args.divisor, G)
    ok = verify_certificate(G, D, args.rank, subdivide=not args.no_subdivide)
    emit(args, {"rank_at_least": args.rank, "verified": ok},
         [f"rank >= {args.rank}: {'verified' if ok else 'refuted'}"])
    return OK if ok else FAILED


def cmd_aut(args) -> int:
    G, _ = load_graph(args.graph)
    order = aut_order(G)
    doc: dict = {"order": order}
    lines = [f"order: {order}"]
    if args.list:
        perms = [list(p) for p in automorphisms(G)]
        doc["automorphisms"] = perms
        lines += [f"  {_fmt(p)}" for p in perms]
    if args.involutions:
        invs = []
        for sigma in involutions(G):
            tq = is_loop_free(G) and is_tree(quotient(G, sigma, flip_parallel=True))
            invs.append({"perm": list(sigma), "tree_quotient": tq})
        doc["involutions"] = invs
        lines.append(f"involutions: {len(invs)}")
        lines += [f"  {_fmt(i['perm'])}{' tree-quotient' if i['tree_quotient'] else ''}" for i in invs]
    emit(args, doc, lines)
    return OK


def cmd_export_dot(args) -> int:
    G, _ = load_graph(args.graph)
    dot = G.to_dot()
    if args.output:
        Path(args.output).write_text(dot)
    else:
        sys.stdout.write(dot)
    return OK


def cmd_paper_verify(args) -> int:
    selected = claim_registry.select(claim_registry.all_claims(), args.claim, args.genus)
    if not selected:
        raise InputError("no claim matches the filter")
    results = claim_registry.run_claims(selected)
    timings = not args.no_timings
    if args.format == "machine":
        doc = {"claims": [{"id": r.id, "pass": r.ok, "detail": r.detail} for r in results],
               "passed": sum(r.ok for r in results), "total": len(results)}
        if timings:
            doc["timings"] = {r.id: round(r.seconds, 6) for r in results}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(claim_registry.format_results(results, timings))
    return OK if all(r.ok for r in results) else FAILED


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")

    p = argparse.ArgumentParser(prog="chipbn", description="Chip-firing and Brill-Noether workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="build a family graph and its marks file")
    s.add_argument("family", help=f"family name or full spec; names: {', '.join(FAMILY_NAMES)}")
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("fire", parents=[common], help="fire one vertex")
    s.add_argument("graph")
    s.add_argument("divisor")
    s.add_argument("vertex", type=int)
    s.set_defaults(func=cmd_fire)

    s = sub.add_parser("reduce", parents=[common], help="q-reduce a divisor")
    s.add_argument("graph")
    s.add_argument("divisor")
    s.add_argument("--base", type=int, default=0)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("equiv", parents=[common], help="decide linear equivalence")
    s.add_argument("graph")
    s.add_argument("divisor1")
    s.add_argument("divisor2")
    s.add_argument("--base", type=int, default=0)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("rank", parents=[common], help="Baker-Norine rank")
    s.add_argument("graph")
    s.add_argument("divisor")
    s.add_argument("--base", type=int, default=0, help="accepted for symmetry; rank does not depend on it")
    s.add_argument("--no-subdivide", action="store_true", help="keep loops instead of subdividing them")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("bn-check", parents=[common], help="Brill-Noether generality report")
    s.add_argument("graph")
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--max-classes", type=int)
    s.add_argument("--no-subdivide", action="store_true")
    s.add_argument("--no-timings", action="store_true")
    s.set_defaults(func=cmd_bn_check)

    s = sub.add_parser("hyperelliptic", parents=[common], help="search for a degree-2 rank-1 divisor")
    s.add_argument("graph")
    s.set_defaults(func=cmd_hyperelliptic)

    s = sub.add_parser("gonality", parents=[common], help="divisorial gonality")
    s.add_argument("graph")
    s.set_defaults(func=cmd_gonality)

    s = sub.add_parser("verify", parents=[common], help="check rank(D) >= r")
    s.add_argument("graph")
    s.add_argument("divisor")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--no-subdivide", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("aut", parents=[common], help="automorphism group order")
    s.add_argument("graph")
    s.add_argument("--list", action="store_true")
    s.add_argument("--involutions", action="store_true")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("export-dot", help="write Graphviz DOT")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("paper-verify", parents=[common], help="run the claim reproduction suite")
    s.add_argument("--genus", type=parse_genus_range)
    s.add_argument("--claim")
    s.add_argument("--no-timings", action="store_true")
    s.set_defaults(func=cmd_paper_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"chipbn: budget exceeded: {exc}", file=sys.stderr)
        return USAGE
    except (InputError, GraphError, dv.DivisorError, OSError) as exc:
        print(f"chipbn: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
