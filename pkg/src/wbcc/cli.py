"""Command line front end.

Exit status: 0 when the computation succeeded (including a "no" answer from
``iso``), 1 when the input fails the mathematics (axiom violation, failed law),
2 for usage, I/O and parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .enumeration import (
    CatalogError,
    OrderCapError,
    SearchConfig,
    are_isomorphic,
    canonical_form,
    catalog_write,
    default_worker_count,
    enumerate_classes,
)
from .enumeration.catalog import dumps
from .laws import Status, UnknownLawError, list_laws, verify, verify_all
from .order import branch_decomposition
from .report import build_report, render_json, render_text
from .table import NotWeakBCCError, check_axioms
from .tablefile import TableFileError, format_table, read_table

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _not_weak(path, t):
    report = check_axioms(t)
    failed = ", ".join(f"({a}) at {report.witness[a]}" for a in report.failed())
    print(f"{path}: not a weak BCC-algebra: axiom {failed}", file=sys.stderr)
    return EXIT_DOMAIN


def cmd_check(args):
    t = read_table(args.file)
    report = build_report(t)
    sys.stdout.write(render_json(report) if args.json else render_text(report))
    return EXIT_OK if check_axioms(t).ok else EXIT_DOMAIN


def cmd_branches(args):
    t = read_table(args.file)
    if not check_axioms(t).ok:
        return _not_weak(args.file, t)
    d = branch_decomposition(t)
    print("minimal elements: " + " ".join(map(str, d.minimal)))
    for a in d.minimal:
        print(f"B({a}) = {{{', '.join(map(str, sorted(d.branches[a])))}}}")
    return EXIT_OK


def cmd_laws(args):
    t = read_table(args.file)
    if not check_axioms(t).ok:
        return _not_weak(args.file, t)
    if args.law is not None:
        try:
            results = [verify(t, args.law)]
        except UnknownLawError:
            print(f"unknown law {args.law!r}; known: {', '.join(list_laws())}", file=sys.stderr)
            return EXIT_USAGE
    else:
        results = verify_all(t)
    for r in results:
        line = f"{r.law_id}: {r.status.value}"
        if r.detail:
            line += f" ({r.detail})"
        print(line)
    return EXIT_DOMAIN if any(r.status is Status.FAIL for r in results) else EXIT_OK


def cmd_canon(args):
    t = read_table(args.file)
    if not check_axioms(t).ok:
        return _not_weak(args.file, t)
    sys.stdout.write(format_table(canonical_form(t).table))
    return EXIT_OK


def cmd_iso(args):
    t1, t2 = read_table(args.file1), read_table(args.file2)
    for path, t in ((args.file1, t1), (args.file2, t2)):
        if not check_axioms(t).ok:
            return _not_weak(path, t)
    print("isomorphic" if are_isomorphic(t1, t2) else "non-isomorphic")
    return EXIT_OK


def cmd_enumerate(args):
    filters = [name for name in ("proper", "solid", "bcc", "bci") if getattr(args, name)]
    try:
        workers = default_worker_count()
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    cfg = SearchConfig(
        args.n,
        filters=tuple(filters),
        count_only=args.count_only,
        worker_count=workers,
        allow_large=args.allow_large,
        backend=args.kernel,
    )
    try:
        result = enumerate_classes(cfg)
    except OrderCapError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.count_only:
        print(result)
    elif args.out:
        catalog_write(result, args.out)
    else:
        sys.stdout.write(dumps(result))
    return EXIT_OK


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def build_parser():
    parser = _Parser(prog="wbcc", description="Weak BCC-algebras given by Cayley tables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="full report for a table file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("branches", help="minimal elements and branches")
    p.add_argument("file")
    p.set_defaults(func=cmd_branches)

    p = sub.add_parser("laws", help="run the law suite")
    p.add_argument("file")
    p.add_argument("--law", metavar="ID", help="run only this law")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("canon", help="print the canonical form")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="decide isomorphism of two tables")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("enumerate", help="isomorphism classes of order N")
    p.add_argument("n", type=_positive, metavar="N")
    p.add_argument("--proper", action="store_true", help="neither BCC nor BCI")
    p.add_argument("--solid", action="store_true")
    p.add_argument("--bcc", action="store_true")
    p.add_argument("--bci", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", metavar="FILE", help="write the catalog here instead of stdout")
    p.add_argument("--allow-large", action="store_true", help="permit orders above the cap")
    p.add_argument("--kernel", choices=("compiled", "python"), help="search kernel to use")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotWeakBCCError as exc:
        print(f"wbcc: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (TableFileError, CatalogError, OSError, ValueError) as exc:
        print(f"wbcc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
