"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain or parse error, 3 failed
verification or cross-check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, export
from .core import compose, enumerate_levels, path_to_root, verify_system
from .errors import BrokenSystem, TreeError
from .labels import Rational, format_label, parse_label
from .pythagorean import PT_SYSTEMS, pair_to_triple, triple_path, triple_to_pair
from .rational import matrix_to_mediant, sb_locate, sb_path
from .typed import (
    char_polynomial,
    format_polynomial,
    generating_function,
    level_counts_matrix,
    recurrence_coefficients,
)
from .universal import embed_tree, format_factorization, universal_system

EXIT_USAGE, EXIT_DOMAIN, EXIT_CHECK = 1, 2, 3
DEFAULT_MAX_EXPONENT = 3


class CheckFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve(system_id, max_exponent=None):
    entry = catalog.get_system(system_id)
    if not entry.system.bounded_degree:
        return entry, universal_system(max_exponent or DEFAULT_MAX_EXPONENT)
    return entry, entry.system


def cmd_list(args, out):
    for sid in catalog.list_systems():
        e = catalog.get_system(sid)
        tag = " [typed]" if e.typed else ""
        out.write(f"{sid}\t{e.system.description}{tag}\n")


def cmd_enumerate(args, out):
    _, system = _resolve(args.system, args.max_exponent)
    out.write(export.render(export.build_document(system, args.depth), args.format))


def cmd_path(args, out):
    _, system = _resolve(args.system, args.max_exponent)
    node = parse_label(args.node)
    if args.system == "stern-brocot" and isinstance(node, Rational):
        path = [matrix_to_mediant(m) for m in path_to_root(system, sb_locate(node))]
    else:
        path = path_to_root(system, node)
    out.write(" ".join(format_label(x) for x in path) + "\n")


def cmd_locate(args, out):
    r = parse_label(args.rational, Rational)
    m = sb_locate(r)
    out.write(f"matrix {m}\n")
    out.write(f"bounds {m.a}/{m.c} {m.b}/{m.d}\n")
    out.write("path " + " ".join(map(str, sb_path(r))) + "\n")


def cmd_levels(args, out):
    entry, system = _resolve(args.system, args.max_exponent)
    typed = entry.typed
    method = args.method or ("both" if typed else "bfs")
    if method in ("matrix", "both") and typed is None:
        raise TreeError(f"system {args.system!r} has no matrix of types")
    bfs = matrix = None
    if method in ("bfs", "both"):
        bfs = [len(level) for level in enumerate_levels(system, args.depth, check=False)]
    if method in ("matrix", "both"):
        matrix = level_counts_matrix(typed.matrix, typed.root_distribution, args.depth)
    if bfs is not None and matrix is not None and bfs != matrix:
        raise CheckFailed(f"bfs counts {bfs} disagree with matrix counts {matrix}")
    counts = matrix if matrix is not None else bfs

    if args.format == "csv":
        out.write(export.counts_to_csv(counts))
    elif args.format == "json":
        doc = {"system": entry.id, "depth": args.depth, "method": method, "counts": counts}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for m, c in enumerate(counts):
            out.write(f"{m} {c}\n")
        if typed is not None:
            poly = char_polynomial(typed.matrix)
            out.write(f"# types {' '.join(typed.assignment.names)}\n")
            out.write(f"# matrix {[list(row) for row in typed.matrix]}\n")
            out.write(f"# characteristic polynomial {format_polynomial(poly)}\n")
            h = recurrence_coefficients(poly)
            if len(counts) >= len(h):
                gf = generating_function(h, counts[: len(h)])
                out.write(f"# generating function {gf}\n")


def cmd_verify(args, out):
    _, system = _resolve(args.system, args.max_exponent)
    report = verify_system(system, args.depth)
    out.write("\n".join(report.lines()) + "\n")
    if not report.ok:
        raise CheckFailed(f"{system.id} failed verification")


def cmd_compose(args, out):
    first = catalog.get_system(args.first).system
    second = catalog.get_system(args.second).system
    rule = catalog.get_rule(args.rule)
    if args.order == "BA":
        rule = rule.swapped()
    system = compose(first, second, rule)
    out.write(export.render(export.build_document(system, args.depth), args.format))


def _parse_triple(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        raise TreeError(f"cannot parse triple {text!r}; expected x,y,z")
    return tuple(int(p) for p in parts)


def cmd_triple(args, out):
    text = args.value.strip()
    if text.startswith("("):
        pair = parse_label(text)
        PT_SYSTEMS[args.tree]().validate(pair)
        triple = pair_to_triple(pair)
    else:
        pair = triple_to_pair(_parse_triple(text))
        triple = pair_to_triple(pair)
    out.write(f"pair {pair}\n")
    out.write(f"triple {triple}\n")
    out.write("path " + " ".join(map(str, triple_path(triple, args.tree))) + "\n")


def cmd_embed(args, out):
    entry, system = _resolve(args.system, args.max_exponent)
    for node, image in embed_tree(system, args.depth).items():
        line = f"{format_label(node)} ↦ {image}"
        if args.factor:
            line += f" = {format_factorization(image)}"
        out.write(line + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="descent-trees", description="Generative tree systems built from descent functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def depth_arg(sp, default=None):
        sp.add_argument("--depth", type=int, default=default, required=default is None)

    def maxexp_arg(sp):
        sp.add_argument("--max-exponent", type=int, default=None,
                        help=f"child bound for the universal tree (default {DEFAULT_MAX_EXPONENT})")

    sp = sub.add_parser("list", help="list built-in systems")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("enumerate", help="enumerate levels of a system")
    sp.add_argument("--system", required=True)
    depth_arg(sp)
    sp.add_argument("--format", choices=sorted(export.RENDERERS), default="text")
    maxexp_arg(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("path", help="path from a node to the root")
    sp.add_argument("--system", required=True)
    sp.add_argument("--node", required=True)
    maxexp_arg(sp)
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("locate", help="locate a fraction in the Stern-Brocot tree")
    sp.add_argument("--rational", required=True)
    sp.set_defaults(func=cmd_locate)

    sp = sub.add_parser("levels", help="level sizes by breadth-first search or matrix of types")
    sp.add_argument("--system", required=True)
    depth_arg(sp)
    sp.add_argument("--method", choices=["bfs", "matrix"], default=None,
                    help="default: both, cross-checked, when the system is typed")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    maxexp_arg(sp)
    sp.set_defaults(func=cmd_levels)

    sp = sub.add_parser("verify", help="check descent, consistency and uniqueness")
    sp.add_argument("--system", required=True)
    depth_arg(sp)
    maxexp_arg(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("compose", help="compose two systems along a named partition")
    sp.add_argument("--first", required=True)
    sp.add_argument("--second", required=True)
    sp.add_argument("--rule", required=True)
    sp.add_argument("--order", choices=["AB", "BA"], default="AB")
    depth_arg(sp)
    sp.add_argument("--format", choices=sorted(export.RENDERERS), default="text")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("triple", help="convert between odd pairs and primitive triples")
    sp.add_argument("value", help="a pair like (5,3) or a triple like 15,8,17")
    sp.add_argument("--tree", choices=sorted(PT_SYSTEMS), default="pt1")
    sp.set_defaults(func=cmd_triple)

    sp = sub.add_parser("embed", help="embed a system into the universal tree")
    sp.add_argument("--system", required=True)
    depth_arg(sp)
    sp.add_argument("--factor", action="store_true", help="also print prime factorizations")
    maxexp_arg(sp)
    sp.set_defaults(func=cmd_embed)
    return p


def main(argv=None, out=None) -> int:
    if out is None:
        out = sys.stdout
        if hasattr(out, "reconfigure"):
            out.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    if getattr(args, "depth", None) is not None and args.depth < 0:
        print("descent-trees: error: --depth must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        args.func(args, out)
    except (CheckFailed, BrokenSystem) as exc:
        print(f"descent-trees: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except TreeError as exc:
        print(f"descent-trees: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
