"""Command-line front end: verify, profile, check, bound, scan.

Thin adapters only: every number printed here is produced by the library
modules.  Exit codes: 0 success / feasible / all identities pass, 1
infeasible or some identity failed, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, constraints, identities
from .errors import DomainError, UnknownIdentityError
from .invariants import InvariantTuple, profile
from .scan import ScanBox, scan as run_scan

TUPLE_FIELDS = ("d", "delta", "chi", "u", "v")
WORKERS_ENV = "P6FOLD_WORKERS"


def parse_tuple(text: str) -> InvariantTuple:
    parts = text.split(",")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError(
            f"expected 5 comma-separated integers d,delta,chi,u,v, "
            f"got {len(parts)} field(s) in {text!r}"
        )
    values = []
    for name, part in zip(TUPLE_FIELDS, parts):
        try:
            values.append(int(part.strip()))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"field {name!r} is not an integer: {part.strip()!r}"
            ) from None
    return InvariantTuple(*values)


def parse_box(text: str) -> ScanBox:
    try:
        return ScanBox.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_format_flags(parser, choices, default):
    group = parser.add_mutually_exclusive_group()
    for name in choices:
        group.add_argument(
            f"--{name}", dest="fmt", action="store_const", const=name,
            help=f"{name} output" + (" (default)" if name == default else ""),
        )
    parser.set_defaults(fmt=default)


def _add_hypothesis_flags(parser):
    parser.add_argument("--kappa", type=int, default=None, metavar="K",
                        help="enforce K_S^2 <= K")
    parser.add_argument("--raw", action="store_true",
                        help="skip the basic geometric constraints B1-B5")
    parser.add_argument("--min-degree", type=int, default=1, metavar="D",
                        help="minimal degree required by B1 (default 1)")
    for flag in sorted(constraints.COVER_FLAGS):
        parser.add_argument(f"--{flag.replace('_', '-')}",
                            dest="cover_flags", action="append_const",
                            const=flag,
                            help="geometric condition forcing K_S^2 <= 9")
    parser.set_defaults(cover_flags=None)


def _config_from_args(args) -> constraints.HypothesisConfig:
    flags = frozenset(args.cover_flags or ())
    for flag in sorted(flags):
        print(f"note: {flag} forces K_S^2 <= 9; applying that cap",
              file=sys.stderr)
    return constraints.HypothesisConfig(
        geometric_mode=not args.raw,
        ks2_cap=args.kappa,
        cover_flags=flags,
        min_degree=args.min_degree,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p6fold",
        description="Exact Chern-number identities, feasibility constraints, "
                    "and degree bounds for smooth threefolds in P^6.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="run the symbolic identity registry")
    p_verify.add_argument("--id", dest="identity_id", metavar="ID",
                          help="verify a single identity")
    p_verify.add_argument("--all", action="store_true",
                          help="verify the whole registry (default)")
    p_verify.add_argument("--show", action="store_true",
                          help="print each side in canonical text form")
    _add_format_flags(p_verify, ("human", "json"), "human")

    p_profile = sub.add_parser(
        "profile", help="derived numbers of one invariant tuple")
    p_profile.add_argument("--tuple", type=parse_tuple, required=True,
                           metavar="d,delta,chi,u,v", dest="invariants")
    _add_format_flags(p_profile, ("human", "json"), "human")

    p_check = sub.add_parser(
        "check", help="evaluate the constraint system on a tuple")
    p_check.add_argument("--tuple", type=parse_tuple, required=True,
                         metavar="d,delta,chi,u,v", dest="invariants")
    _add_hypothesis_flags(p_check)
    _add_format_flags(p_check, ("human", "json"), "human")

    p_bound = sub.add_parser(
        "bound", help="compute the degree bound for an excluded "
                      "fourfold degree")
    p_bound.add_argument("--s", type=int, required=True,
                         help="excluded fourfold degree (effective even "
                              "degree must be >= 34)")
    p_bound.add_argument("--kappa", type=int, default=9,
                         help="K_S^2 cap (default 9)")
    p_bound.add_argument("--sharp", action="store_true",
                         help="use the exact quadratic root instead of the "
                              "published relaxation")
    _add_format_flags(p_bound, ("json", "human"), "json")

    p_scan = sub.add_parser(
        "scan", help="stream the feasible tuples of an integer box")
    p_scan.add_argument("--box", type=parse_box, required=True,
                        metavar="d=LO..HI,delta=..,chi=..,u=..,v=..")
    _add_hypothesis_flags(p_scan)
    p_scan.add_argument("--with-profile", action="store_true",
                        help="append profile columns to each row")
    p_scan.add_argument("--workers", type=int,
                        default=int(os.environ.get(WORKERS_ENV, "1")),
                        help=f"parallel workers (default ${WORKERS_ENV} or 1)")
    p_scan.add_argument("--out", metavar="FILE", default=None,
                        help="write to FILE instead of stdout")
    _add_format_flags(p_scan, ("csv", "jsonl"), "csv")

    return parser


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_verify(args) -> int:
    if args.identity_id and not args.all:
        results = [identities.verify_identity(args.identity_id)]
    else:
        results = identities.verify_all()

    if args.fmt == "json":
        _emit_json([
            {
                "id": r.id,
                "description": r.description,
                "pass": r.passed,
                "comparisons": [
                    {"label": c.label, "lhs": c.lhs, "rhs": c.rhs,
                     "diff": c.diff, "equal": c.equal}
                    for c in r.comparisons
                ],
            }
            for r in results
        ])
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.id:8s} "
                  f"{r.description}")
            if args.show or not r.passed:
                for c in r.comparisons:
                    tag = f" [{c.label}]" if c.label else ""
                    print(f"        lhs{tag}: {c.lhs}")
                    print(f"        rhs{tag}: {c.rhs}")
                    if not c.equal:
                        print(f"        diff{tag}: {c.diff}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} identities pass")
    return 0 if all(r.passed for r in results) else 1


def _cmd_profile(args) -> int:
    data = profile(args.invariants).to_json_dict()
    if args.fmt == "json":
        _emit_json(data)
    else:
        t = args.invariants
        print(f"tuple: d={t.d} delta={t.delta} chi={t.chi} u={t.u} v={t.v}")
        for key, value in data.items():
            print(f"  {key:5s} = {value}")
    return 0


def _cmd_check(args) -> int:
    cfg = _config_from_args(args)
    report = constraints.evaluate(args.invariants, cfg)
    if args.fmt == "json":
        _emit_json(report.to_json_dict())
    else:
        for entry in report.entries:
            mark = "ok " if entry.satisfied else "FAIL"
            print(f"  {entry.id:3s} {mark} value = {entry.value}")
        print("feasible" if report.feasible else "infeasible")
    return 0 if report.feasible else 1


def _cmd_bound(args) -> int:
    mode = "sharp" if args.sharp else "paper"
    report = bounds.degree_bound(args.s, args.kappa, mode=mode)
    if args.fmt == "human":
        print(bounds.proof_trace(report))
    else:
        _emit_json(report.to_json_dict())
    return 0


def _cmd_scan(args) -> int:
    cfg = _config_from_args(args)
    print(f"# box volume {args.box.volume()}", file=sys.stderr)
    if args.out:
        with open(args.out, "w") as sink:
            result = run_scan(args.box, cfg, sink,
                                   workers=args.workers, fmt=args.fmt,
                                   with_profile=args.with_profile)
    else:
        result = run_scan(args.box, cfg, sys.stdout,
                               workers=args.workers, fmt=args.fmt,
                               with_profile=args.with_profile)
    print(f"# scanned {result.scanned} feasible {result.feasible}",
          file=sys.stderr)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "profile": _cmd_profile,
    "check": _cmd_check,
    "bound": _cmd_bound,
    "scan": _cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except UnknownIdentityError as exc:
        print(f"error: unknown identity id {exc.args[0]!r}; known ids: "
              f"{', '.join(identities.identity_ids())}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
