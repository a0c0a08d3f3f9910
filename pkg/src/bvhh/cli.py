"""``bvhh {hh,bv,cyclic,verify}``.

Exit codes: 0 when every assertion passes, 2 on a theorem-violation
diagnostic (a failed identity), 3 on bad input.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import fixtures
from .algebra import AlgebraError
from .bv import FundamentalClassError, TheoremViolation
from .field import FieldError
from .hochschild import CutoffRequired, SliceTooLarge
from .linalg import CompositeNotZero
from .report import InputError, JobConfig, bv_report, cyclic_report, hh_report, render, to_json, verify_report
from .verify import parse_suites

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bvhh", description="Hochschild cohomology, BV structures and cyclic homology")
    sub = p.add_subparsers(dest="command", required=True)
    common = _Parser(add_help=False)
    common.add_argument("--max-degree", type=int, default=4)
    common.add_argument("--word-cutoff", type=int, default=None)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cache-dir", default=os.environ.get("BVHH_CACHE_DIR"))
    common.add_argument("--format", choices=("table", "structured"), default="table")
    for name in ("hh", "bv", "cyclic"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--algebra", required=True, help="fixture name, alias, or path to a JSON presentation")
        if name == "hh":
            sp.add_argument("--coeff", choices=("self", "dual"), default="self")
        if name == "cyclic":
            sp.add_argument("--variant", choices=("cyclic", "negative", "periodic"), default="negative")
            sp.add_argument("--u-trunc", type=int, default=None)
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--suite", default="all")
    sp.add_argument("--algebra", default=None, help="restrict to one fixture (default: the whole corpus)")
    return p


def _job(args) -> JobConfig:
    return JobConfig(
        command=args.command,
        algebra=getattr(args, "algebra", None) or "",
        coeff=getattr(args, "coeff", "self"),
        max_degree=args.max_degree,
        word_cutoff=args.word_cutoff,
        u_trunc=getattr(args, "u_trunc", None),
        variant=getattr(args, "variant", "negative"),
        suite=getattr(args, "suite", "all"),
        trials=args.trials,
        seed=args.seed,
        cache_dir=args.cache_dir,
        format=args.format,
    )


def execute(args) -> tuple[dict, int]:
    job = _job(args)
    if job.command == "hh":
        doc = hh_report(job)
    elif job.command == "bv":
        doc = bv_report(job)
    elif job.command == "cyclic":
        doc = cyclic_report(job)
    else:
        try:
            suites = parse_suites(job.suite)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        names = (job.algebra,) if job.algebra else fixtures.CORPUS
        for n in names:
            fixtures.resolve(n)
        doc = verify_report(job, suites, names)
    return doc, (EXIT_VIOLATION if doc.get("failures") else EXIT_OK)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = execute(args)
    except (InputError, AlgebraError, FieldError, CutoffRequired, FundamentalClassError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SliceTooLarge as exc:
        print(f"input error: {exc}; lower --max-degree or set --word-cutoff", file=sys.stderr)
        return EXIT_INPUT
    except (TheoremViolation, CompositeNotZero) as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        w = getattr(exc, "witness", None)
        if w is not None:
            print(f"witness: {w}", file=sys.stderr)
        return EXIT_VIOLATION
    sys.stdout.write(to_json(doc) if args.format == "structured" else render(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
