"""Command line entry point: ``bettisplit <command> ...``.

Exit codes: 0 success, 1 negative verdict, 2 bad input or unmet
hypothesis, 3 resource cap exceeded.  Data goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import fatpoints as fp
from .betti import graded_betti
from .errors import BettiSplitError, PreconditionError, ResourceLimitError
from .formats import FORMATS, parse_complex, parse_facet_list, parse_ideal, render_betti_table, render_ideal
from .linalg import DEFAULT_CHARACTERISTIC, FieldSpec
from .simplicial import (
    alexander_dual_ideal,
    find_shelling,
    is_sequentially_cm,
    is_vertex_decomposable,
    union_splitting_check,
    verify_shelling,
)
from .splitting import (
    is_betti_splitting,
    ordered_small_part_count,
    partition_count,
    search_betti_splittings,
    xi_split,
)

EXIT_OK, EXIT_FALSE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("bettisplit")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}") from exc


def _field(args) -> FieldSpec:
    return FieldSpec.parse(args.field)


def _write(text: str) -> None:
    sys.stdout.write(text)


def _report_text(report) -> str:
    lines = [f"Betti splitting: {'yes' if report.verdict else 'no'}"]
    if report.witness is not None:
        i, j = report.witness
        lines.append(
            f"identity fails at (i, j) = ({i}, {j}): beta(I) = {report.I[i, j]}, "
            f"beta(J) + beta(K) + beta_(i-1)(J∩K) = {report.J[i, j]} + {report.K[i, j]} + {report.JK[i - 1, j]}"
        )
    for name, table in (("I", report.I), ("J", report.J), ("K", report.K), ("J∩K", report.JK)):
        lines.append(f"{name}: " + render_betti_table(table, "resolution", target=name).strip())
    return "\n".join(lines) + "\n"


def cmd_betti(args) -> int:
    I = parse_ideal(_read(args.ideal))
    _write(render_betti_table(graded_betti(I, _field(args), jobs=args.jobs), args.format))
    return EXIT_OK


def cmd_split_verify(args) -> int:
    I, J, K = (parse_ideal(_read(p)) for p in (args.I, args.J, args.K))
    report = is_betti_splitting(I, J, K, _field(args))
    _write(_report_text(report))
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_split_xi(args) -> int:
    I = parse_ideal(_read(args.I))
    J, K = xi_split(I, args.var)
    _write(f"J = {J}\nK = {K}\n")
    report = is_betti_splitting(I, J, K, _field(args))
    _write(_report_text(report))
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_split_search(args) -> int:
    I = parse_ideal(_read(args.I))
    found = search_betti_splittings(I, _field(args), limit=args.limit, jobs=args.jobs)
    for J, K, _ in found:
        _write(f"J = {J}  K = {K}\n")
    g = len(I.gens)
    _write(f"{len(found)}/{partition_count(g)} partitions split\n")
    log.info(
        "searched %d unordered partitions (%d when counting choices of a part with at most %d generators)",
        partition_count(g), ordered_small_part_count(g), g // 2,
    )
    return EXIT_OK


def cmd_complex_dual(args) -> int:
    _write(render_ideal(alexander_dual_ideal(parse_complex(_read(args.complex)))))
    return EXIT_OK


def cmd_complex_vd(args) -> int:
    ok, order = is_vertex_decomposable(parse_complex(_read(args.complex)))
    if ok:
        _write("vertex decomposable: yes\nshedding order: " + " ".join(map(str, order)) + "\n")
        return EXIT_OK
    _write("vertex decomposable: no\n")
    return EXIT_FALSE


def cmd_complex_shelling(args) -> int:
    text = _read(args.complex)
    D = parse_complex(text)
    if args.order == "given":
        _, order = parse_facet_list(text)
        ok = verify_shelling(D, order)
        _write(f"given order is a shelling: {'yes' if ok else 'no'}\n")
        return EXIT_OK if ok else EXIT_FALSE
    order = find_shelling(D)
    if order is None:
        _write("shellable: no\n")
        return EXIT_FALSE
    _write("shellable: yes\n" + "".join("[" + ",".join(map(str, f)) + "]\n" for f in order))
    return EXIT_OK


def cmd_complex_scm(args) -> int:
    ok = is_sequentially_cm(parse_complex(_read(args.complex)), _field(args))
    _write(f"sequentially Cohen-Macaulay over {_field(args)}: {'yes' if ok else 'no'}\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_complex_union_split(args) -> int:
    D, D1, D2 = (parse_complex(_read(p)) for p in (args.D, args.D1, args.D2))
    report = union_splitting_check(D, D1, D2, _field(args))
    _write(_report_text(report))
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_fatpoints(args) -> int:
    p = fp.FatPointParams(args.n, args.a, args.b, args.c)
    field = _field(args)
    if args.action == "ideal":
        _write(render_ideal(fp.fat_points_ideal(p)))
        return EXIT_OK
    if args.action == "betti":
        _write(render_betti_table(graded_betti(fp.fat_points_ideal(p), field, jobs=args.jobs), args.format))
        return EXIT_OK
    if args.action == "split":
        J, K = fp.theorem51_split(p)
        _write(f"J = {J}\nK = {K}\n")
        return EXIT_OK
    if args.action == "closed-form":
        _write(render_betti_table(fp.closed_form_table(p, field), args.format))
        return EXIT_OK
    direct = graded_betti(fp.fat_points_ideal(p), field, jobs=args.jobs)
    rec = fp.betti_recursive(p, field)
    closed = fp.closed_form_table(p, field)
    if direct.same_numbers(rec) and direct.same_numbers(closed):
        _write("closed-form == recursion == direct: OK\n")
        return EXIT_OK
    _write("closed-form == recursion == direct: MISMATCH\n")
    for name, table in (("direct", direct), ("recursion", rec), ("closed-form", closed)):
        _write(f"{name}: " + render_betti_table(table, "csv").replace("\n", " ").strip() + "\n")
    return EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=str(DEFAULT_CHARACTERISTIC),
                        help="0 for exact rationals, or a prime p for GF(p) (default %(default)s)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for Betti computations")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="bettisplit", description="Betti numbers and Betti splittings of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table of an ideal")
    p.add_argument("ideal")
    p.add_argument("--format", choices=FORMATS, default="triangle")
    p.set_defaults(func=cmd_betti)

    split = sub.add_parser("split", help="Betti splittings").add_subparsers(dest="split_command", required=True)
    p = split.add_parser("verify", parents=[common], help="check I = J + K")
    p.add_argument("I")
    p.add_argument("J")
    p.add_argument("K")
    p.set_defaults(func=cmd_split_verify)
    p = split.add_parser("xi", parents=[common], help="check the x_i-split of I")
    p.add_argument("I")
    p.add_argument("--var", type=int, required=True)
    p.set_defaults(func=cmd_split_xi)
    p = split.add_parser("search", parents=[common], help="try every partition of G(I)")
    p.add_argument("I")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_split_search)

    cx = sub.add_parser("complex", help="simplicial complexes").add_subparsers(dest="complex_command", required=True)
    for name, func, help_text in (
        ("dual", cmd_complex_dual, "Alexander dual ideal"),
        ("vd", cmd_complex_vd, "vertex decomposability"),
        ("scm", cmd_complex_scm, "sequential Cohen-Macaulayness"),
    ):
        p = cx.add_parser(name, parents=[common], help=help_text)
        p.add_argument("complex")
        p.set_defaults(func=func)
    p = cx.add_parser("shelling", parents=[common], help="verify or search for a shelling")
    p.add_argument("complex")
    p.add_argument("--order", choices=("given", "search"), default="search")
    p.set_defaults(func=cmd_complex_shelling)
    p = cx.add_parser("union-split", parents=[common], help="splitting induced by a facet partition")
    p.add_argument("D")
    p.add_argument("D1")
    p.add_argument("D2")
    p.set_defaults(func=cmd_complex_union_split)

    p = sub.add_parser("fatpoints", parents=[common], help="ideals of three fat points")
    p.add_argument("action", choices=("ideal", "betti", "split", "closed-form", "compare"))
    for name in ("n", "a", "b", "c"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="triangle")
    p.set_defaults(func=cmd_fatpoints)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except BettiSplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
