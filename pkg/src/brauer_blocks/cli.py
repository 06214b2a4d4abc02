"""Command-line entry point: ``brauer-blocks <subcommand> --delta D ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .errors import BrauerError
from .partitions import Partition, format_parts, parse_partition, transpose


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except BrauerError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _delta(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"delta must be an integer, got {text!r}") from None
    if value == 0:
        raise argparse.ArgumentTypeError("delta must be non-zero")
    return value


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value == 0:
        raise argparse.ArgumentTypeError("delta must be non-zero")
    return value


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _bad_format(fmt: str, command: str):
    raise BrauerError(f"format {fmt!r} is not available for {command}")


def cmd_blocks(args, out) -> None:
    from .blocks import enumerate_block

    block = enumerate_block(args.weight, args.delta, args.max_degree)
    if args.format == "json":
        _emit(out, block.to_json())
    elif args.format == "text":
        _emit(out, "\n".join(format_parts(m) for m in block.members))
    elif args.format == "csv":
        _emit(out, "weight,degree\n" + "".join(f'"{format_parts(m)}",{m.degree}\n' for m in block.members))
    else:
        _bad_format(args.format, "blocks")


def cmd_facet(args, out) -> None:
    from .geometry import canonical_window, facet_signature, shift, singularity_degree

    w = args.weight
    point = shift(w, args.delta, canonical_window(w, args.delta))
    sig = facet_signature(point)
    data = {
        "weight": format_parts(w),
        "delta": args.delta,
        "point": str(point),
        "signature": str(sig),
        "singularity_degree": singularity_degree(w, args.delta),
        "alcove": sig.is_alcove,
    }
    if args.format == "json":
        _emit(out, json.dumps(data))
    elif args.format == "text":
        _emit(out, f"{data['signature']}\nsingularity degree {data['singularity_degree']}")
    else:
        _bad_format(args.format, "facet")


def cmd_graph(args, out) -> None:
    from . import graphs

    if args.kind == "mbs":
        g = graphs.mbs_graph(transpose(args.weight), args.delta, args.max_degree)
    elif args.kind == "orbit":
        g = graphs.orbit_graph(args.weight, args.delta, args.max_degree)
    else:
        g = graphs.par_e_graph(args.max_degree)
    if args.format == "dot":
        _emit(out, g.to_dot())
    elif args.format == "json":
        _emit(out, g.to_json())
    elif args.format == "text":
        d = g.to_dict()
        _emit(out, "\n".join(f"{e['source']} -> {e['target']}" for e in d["edges"]))
    else:
        _bad_format(args.format, "graph")


def cmd_kl_table(args, out) -> None:
    from .kl import kl_polynomials

    table = kl_polynomials(args.delta, args.max_degree, root=args.root,
                           whole_bracket=not args.first_term_only)
    if args.format == "csv":
        out.write(table.to_csv())
    elif args.format == "json":
        _emit(out, table.to_json())
    elif args.format == "text":
        rows = table.to_rows()
        width = max(len(c) for r in rows for c in r)
        _emit(out, "\n".join(" ".join(c.rjust(width) for c in r) for r in rows))
    else:
        _bad_format(args.format, "kl-table")


def cmd_predict(args, out) -> None:
    from .kl import predict_decomposition

    mult = predict_decomposition(args.standard, args.simple, args.delta)
    if args.format == "json":
        _emit(out, json.dumps({"delta": args.delta, "standard": format_parts(args.standard),
                               "simple": format_parts(args.simple), "multiplicity": mult}))
    elif args.format == "text":
        _emit(out, str(mult))
    else:
        _bad_format(args.format, "predict")


def cmd_gram(args, out) -> None:
    from .cell import CellModule
    from .linalg import rank

    g = CellModule(args.n, args.partition, args.delta).gram_matrix()
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([[str(x) for x in row] for row in g])
        out.write(buf.getvalue())
    elif args.format == "json":
        _emit(out, json.dumps({"n": args.n, "lambda": format_parts(args.partition),
                               "delta": str(args.delta), "dim": len(g), "rank": rank(g),
                               "matrix": [[str(x) for x in row] for row in g]}))
    elif args.format == "text":
        _emit(out, f"dim {len(g)}\nrank {rank(g)}")
    else:
        _bad_format(args.format, "gram")


def cmd_verify(args, out) -> None:
    from .cell import block_of_weight, verify_block

    reports = verify_block(args.n, args.delta, block_of_weight(args.n, args.delta, args.weight))
    if args.format == "json":
        _emit(out, json.dumps([r.to_dict() for r in reports]))
    elif args.format == "text":
        _emit(out, "\n".join(
            f"{format_parts(r.lam)}: {r.dim_delta} vs {r.predicted_sum} {'ok' if r.passed else 'FAIL'}"
            for r in reports))
    else:
        _bad_format(args.format, "verify")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brauer-blocks", description="Blocks, alcoves and KL polynomials for B_n(delta).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, default_format, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv", "dot", "text"), default=default_format)
        p.set_defaults(func=func)
        return p

    p = add("blocks", cmd_blocks, "json", "enumerate a block")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--weight", type=_partition, required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = add("facet", cmd_facet, "json", "facet signature and singularity degree")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--weight", type=_partition, required=True)

    p = add("graph", cmd_graph, "json", "block graphs")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--kind", choices=("mbs", "orbit", "par-e"), required=True)
    p.add_argument("--weight", type=_partition, default=Partition())
    p.add_argument("--max-degree", type=int, required=True)

    p = add("kl-table", cmd_kl_table, "csv", "parabolic KL polynomials")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--root", type=_partition, default=Partition())
    p.add_argument("--first-term-only", action="store_true",
                   help="apply the dominance projection to the first term only")

    p = add("predict", cmd_predict, "json", "predicted decomposition number")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--standard", type=_partition, required=True)
    p.add_argument("--simple", type=_partition, required=True)

    p = add("gram", cmd_gram, "json", "Gram matrix of a cell module")
    p.add_argument("--delta", type=_rational, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", type=_partition, required=True)

    p = add("verify", cmd_verify, "json", "Gram-rank check of predicted decompositions")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", type=_partition, required=True)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (BrauerError, ValueError) as exc:
        sys.stderr.write(f"brauer-blocks: error: {exc}\n")
        return 2
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
