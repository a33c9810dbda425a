"""Command-line entry point: ``signed-spectra <command> ...``.

Graph inputs use the ``.sg`` text format; ``-`` reads standard input.
Exit status is 0 on success, 1 on a domain error (reported by class name on
stderr) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import os
import sys

from .bicyclic import base, construct_family, family_index
from .enumerate_verify import (
    enumerate_unbalanced_bicyclic,
    f4_at_f5_root,
    f5_bound,
    format_matches,
    match_table1,
    verify_exclusions,
    verify_ordering,
)
from .errors import SignedGraphError
from .graph import dumps, loads
from .spectra import charpoly_exact, charpoly_schwenk, eigenvalues, index
from .switching import format_switching, is_balanced, normalize_signature
from .perturb import perturb

SEED_ENV = "SIGNED_SPECTRA_SEED"


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _read_graph(path: str):
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _pair(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}")
    if not 1 <= len(parts) <= 2:
        raise argparse.ArgumentTypeError("expected 'u' or 'u,v'")
    return parts


def _targets(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}")


def cmd_index(args, out):
    g = _read_graph(args.file)
    iv = index(g)
    out.write(fmt(iv.value) + "\n")
    if args.vector:
        out.write(" ".join(fmt(float(c)) for c in iv.vector) + "\n")
    if iv.multiple:
        print("warning: index eigenvalue is multiple", file=sys.stderr)


def cmd_spectrum(args, out):
    g = _read_graph(args.file)
    vals = eigenvalues(g).values
    sep = "\t" if args.tsv else "\n"
    out.write(sep.join(fmt(v) for v in vals) + "\n")


def cmd_charpoly(args, out):
    g = _read_graph(args.file)
    p = charpoly_schwenk(g) if args.schwenk else charpoly_exact(g)
    out.write(p.to_line() + "\n")


def cmd_balance(args, out):
    cert = is_balanced(_read_graph(args.file))
    if cert.balanced:
        out.write("balanced\n" + format_switching(cert.switching) + "\n")
    else:
        out.write("unbalanced\n" + " ".join(map(str, cert.cycle.vertices)) + "\n")


def cmd_canon(args, out):
    out.write(dumps(normalize_signature(_read_graph(args.file))))


def cmd_classify(args, out):
    g = _read_graph(args.file)
    _, shape = base(g)
    rows = [
        ("type", shape.kind),
        ("base", shape.label),
        ("params", " ".join(map(str, shape.params))),
        ("base_vertices", " ".join(map(str, sorted(shape.base_vertices)))),
        ("cycle_signs", " ".join("+" if s > 0 else "-" for s in shape.cycle_signs)),
        ("balanced", "true" if is_balanced(g) else "false"),
    ]
    sep = "\t" if args.tsv else ": "
    out.write("".join(f"{k}{sep}{v}\n" for k, v in rows))


def cmd_family(args, out):
    g = construct_family(args.which, args.n)
    if args.charpoly:
        out.write(charpoly_exact(g).to_line() + "\n")
    elif args.index:
        out.write(fmt(family_index(args.which, args.n)) + "\n")
    elif args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(dumps(g))
    else:
        out.write(dumps(g))


def cmd_perturb(args, out):
    g = _read_graph(args.file)
    u = args.edge[0]
    v = args.edge[1] if len(args.edge) > 1 else None
    if args.op != "collapse" and v is None:
        raise argparse.ArgumentTypeError(f"--op {args.op} needs --edge u,v")
    report = perturb(g, args.op, u, v, args.targets)
    out.write(report.as_text())


def cmd_enumerate(args, out):
    rep = enumerate_unbalanced_bicyclic(args.n)
    if args.tsv:
        for r, e in enumerate(rep.top(args.top), 1):
            out.write(f"{r}\t{fmt(e.lam)}\t{charpoly_exact(e.graph).to_line()}\n")
    else:
        out.write(rep.as_text(args.top))


def cmd_verify_ordering(args, out):
    rep = verify_ordering(args.n_min, args.n_max)
    if args.tsv:
        for n, lams, _ in rep.rows:
            for i, lam in enumerate(lams, 1):
                out.write(f"G{i}\t{n}\t{fmt(lam)}\n")
        return
    out.write(rep.as_text())
    lo = args.n_min
    out.write(f"f5_root_bound_n{lo}: {fmt(family_index(5, lo))} < {fmt(f5_bound(lo))}\n")
    out.write(f"f4_at_f5_root_n{lo}: {fmt(f4_at_f5_root(lo))}\n")


def cmd_verify_exclusions(args, out):
    rep = verify_exclusions(args.n, args.samples, args.seed)
    out.write(rep.as_text())


def cmd_match_table1(args, out):
    matches = match_table1(args.n)
    if args.tsv:
        for m in matches:
            out.write(f"{m.label}\t{m.status}\t{m.target.to_line()}\n")
    else:
        out.write(format_matches(matches, args.n))


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signed-spectra", description="Spectral tools for signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help=".sg file or - for stdin")
        p.add_argument("--tsv", action="store_true", help="tab-separated output")
        p.set_defaults(func=func)
        return p

    graph_cmd("index", cmd_index, "largest adjacency eigenvalue").add_argument(
        "--vector", action="store_true", help="also print the unit eigenvector"
    )
    graph_cmd("spectrum", cmd_spectrum, "all eigenvalues, descending")
    graph_cmd("charpoly", cmd_charpoly, "exact characteristic polynomial, constant term first").add_argument(
        "--schwenk", action="store_true", help="use the Schwenk vertex recursion"
    )
    graph_cmd("balance", cmd_balance, "balance test with certificate")
    graph_cmd("canon", cmd_canon, "one-negative-edge normal form of a bicyclic graph")
    graph_cmd("classify", cmd_classify, "bicyclic base and shape")

    p = sub.add_parser("family", help="members of the five extremal families")
    p.add_argument("--which", type=int, required=True, choices=range(1, 6))
    p.add_argument("--n", type=int, required=True)
    what = p.add_mutually_exclusive_group()
    what.add_argument("--emit", metavar="FILE")
    what.add_argument("--charpoly", action="store_true")
    what.add_argument("--index", action="store_true")
    p.set_defaults(func=cmd_family)

    p = graph_cmd("perturb", cmd_perturb, "apply a perturbation and compare indices")
    p.add_argument("--op", required=True, choices=("relocate", "alpha", "collapse", "add-neg-edge"))
    p.add_argument("--edge", type=_pair, required=True, help="u,v (collapse takes the root u)")
    p.add_argument("--targets", type=_targets, default=[], help="a,b,c for relocate")

    p = sub.add_parser("enumerate", help="rank all unbalanced bicyclic graphs of order n <= 9")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-ordering", help="index chain of the five families")
    p.add_argument("--n-min", type=int, default=36)
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_verify_ordering)

    p = sub.add_parser("verify-exclusions", help="random unbalanced bicyclic graphs vs the fifth family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=cmd_verify_exclusions)

    p = sub.add_parser("match-table1", help="match the stored polynomial table against the search space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_match_table1)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except argparse.ArgumentTypeError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SignedGraphError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
