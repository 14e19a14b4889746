"""Command-line front end: ``condrank {rank,translate,worlds,zpart,check,gen}``.

Exit status: 0 success, 1 input error, 2 world limit exceeded, 3 postulate
violation found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import kernels
from .af import ArgumentationFramework, ParseError, parse_apx, parse_tgf, random_af, to_apx, to_tgf
from .logic import FormulaSyntaxError, WorldLimitExceeded, check_world_limit
from .postulates import (
    Postulate,
    PostulateReport,
    SuiteConfig,
    check_abstraction,
    check_independence,
    check_self_contradiction,
    check_void_precedence,
    run_suite,
)
from .ranking import Semantics, rank
from .systemz import INFINITY, iter_ranked_worlds, z_partition
from .translation import theta

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_VIOLATION = 0, 1, 2, 3


class InputError(Exception):
    pass


def read_framework(path: str, fmt: str = "auto") -> ArgumentationFramework:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto":
        suffix = Path(path).suffix.lower() if path != "-" else ""
        if suffix in (".tgf", ".apx"):
            fmt = suffix[1:]
        elif path == "-":
            fmt = "apx" if "arg(" in text else "tgf"
        else:
            raise InputError(f"cannot infer format of {path}; pass --format tgf|apx")
    return parse_tgf(text) if fmt == "tgf" else parse_apx(text)


def _rank_str(r) -> str | int:
    return "inf" if r == INFINITY else int(r)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ------------------------------------------------------------------

def cmd_rank(args) -> int:
    af = read_framework(args.input, args.format)
    r = rank(af, args.semantics, world_limit=args.world_limit)
    if args.output == "json":
        out = _dump(r.to_dict())
    elif args.output == "csv":
        out = _csv([("argument", "class", "score")] +
                   [(a, i, r.scores[a]) for i, c in enumerate(r.classes) for a in c])
    else:
        lines = [str(r), f"zero-rank worlds: {r.scores.zero_world_count}"]
        lines += [f"{a} {r.scores[a]}" for a in r.arguments]
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_translate(args) -> int:
    af = read_framework(args.input, args.format)
    kb = theta(af)
    if args.output == "json":
        out = _dump({"conditionals": [str(c) for c in kb]})
    elif args.output == "csv":
        out = _csv([("argument", "conditional")] + [(a, str(c)) for a, c in zip(af.arguments, kb)])
    else:
        out = "".join(f"{c}\n" for c in kb)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_worlds(args) -> int:
    af = read_framework(args.input, args.format)
    check_world_limit(len(af), args.world_limit)
    part = z_partition(theta(af), args.world_limit)
    rows = ((str(w), _rank_str(r)) for w, r in iter_ranked_worlds(part)
            if not args.only_rank0 or r == 0)
    if args.output == "json":
        sys.stdout.write(_dump([{"world": w, "rank": r} for w, r in rows]))
    elif args.output == "csv":
        sys.stdout.write(_csv([("world", "rank")]))
        sys.stdout.write(_csv(rows))
    else:
        for w, r in rows:
            sys.stdout.write(f"{r}\t{w}\n")
    return EXIT_OK


def cmd_zpart(args) -> int:
    af = read_framework(args.input, args.format)
    part = z_partition(theta(af), args.world_limit)
    if args.output == "json":
        out = _dump({
            "strata": [[str(c) for c in layer] for layer in part.strata],
            "infinite": [str(c) for c in part.infinite_stratum],
        })
    elif args.output == "csv":
        rows = [(i, str(c)) for i, layer in enumerate(part.strata) for c in layer]
        rows += [("inf", str(c)) for c in part.infinite_stratum]
        out = _csv([("stratum", "conditional")] + rows)
    else:
        out = str(part) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def _render_reports(reports: list[PostulateReport], fmt: str) -> str:
    if fmt == "json":
        return _dump({"reports": [r.to_dict() for r in reports]})
    if fmt == "csv":
        return _csv([("postulate", "semantics", "instances", "violations")] +
                    [(r.postulate.value, r.semantics.value, r.instances_checked, len(r.violations))
                     for r in reports])
    lines = [f"{'postulate':<20} {'semantics':<11} {'instances':>9} {'violations':>10}"]
    for r in reports:
        lines.append(f"{r.postulate.value:<20} {r.semantics.value:<11} "
                     f"{r.instances_checked:>9} {len(r.violations):>10}")
    for r in reports:
        for v in r.violations:
            attacks = " ".join(f"{x}->{y}" for x, y in v.framework.sorted_attacks())
            lines.append(f"  {r.postulate.value}: {v.details} "
                         f"[args: {' '.join(v.framework.arguments)}; attacks: {attacks or '-'}]")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    postulates = args.postulate or [p.value for p in Postulate]
    if args.suite:
        config = SuiteConfig(
            count=args.count, max_n=args.max_n, attack_probability=args.p,
            allow_self_attacks=args.self_attacks, seed=args.seed, semantics=args.semantics,
            postulates=postulates, world_limit=args.world_limit,
        )
        reports = run_suite(config)
    else:
        if args.input is None:
            raise InputError("check needs an input framework or --suite")
        af = read_framework(args.input, args.format)
        check_world_limit(len(af), args.world_limit)
        sem, limit = Semantics.parse(args.semantics), args.world_limit
        r = rank(af, sem, world_limit=limit)
        reports = []
        for p in map(Postulate.parse, dict.fromkeys(postulates)):
            if p is Postulate.ABSTRACTION:
                reports.append(check_abstraction(af, sem, args.seed, limit, ranking=r))
            elif p is Postulate.INDEPENDENCE:
                reports.append(check_independence(af, ArgumentationFramework(), sem, limit))
            elif p is Postulate.VOID_PRECEDENCE:
                reports.append(check_void_precedence(af, sem, limit, ranking=r))
            else:
                reports.append(check_self_contradiction(af, sem, limit, ranking=r))
    sys.stdout.write(_render_reports(reports, args.output))
    return EXIT_VIOLATION if any(r.violations for r in reports) else EXIT_OK


def cmd_gen(args) -> int:
    af = random_af(args.n, args.p, args.self_attacks, args.seed)
    text = to_apx(af) if args.to == "apx" else to_tgf(af)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------

def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--world-limit", type=_positive, default=None,
                        help="largest atom count enumerated exhaustively (default 24)")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--output", "-O", choices=("text", "json", "csv"), default="text")

    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("--format", "-f", choices=("auto", "tgf", "apx"), default="auto")

    sem = argparse.ArgumentParser(add_help=False)
    sem.add_argument("--semantics", "-s", choices=[s.value for s in Semantics], default="ccbs")

    parser = argparse.ArgumentParser(prog="condrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", parents=[common, inp, sem], help="rank the arguments of a framework")
    p.add_argument("input", help="framework file, or - for stdin")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("translate", parents=[common, inp], help="print the conditional knowledge base")
    p.add_argument("input")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("worlds", parents=[common, inp], help="list worlds with their System Z rank")
    p.add_argument("input")
    p.add_argument("--only-rank0", action="store_true")
    p.set_defaults(func=cmd_worlds)

    p = sub.add_parser("zpart", parents=[common, inp], help="print the Z-partition")
    p.add_argument("input")
    p.set_defaults(func=cmd_zpart)

    p = sub.add_parser("check", parents=[common, inp, sem], help="check ranking postulates")
    p.add_argument("input", nargs="?")
    p.add_argument("--postulate", "-p", action="append", choices=[x.value for x in Postulate])
    p.add_argument("--suite", action="store_true", help="run on seeded random frameworks")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=_positive, default=7)
    p.add_argument("--p", type=float, default=0.3, help="attack probability for --suite")
    p.add_argument("--self-attacks", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a random framework")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--self-attacks", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--to", choices=("tgf", "apx"), default="tgf")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", None):
        kernels.set_threads(args.threads)
    try:
        return args.func(args)
    except WorldLimitExceeded as exc:
        print(f"condrank: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, ParseError, FormulaSyntaxError, ValueError) as exc:
        print(f"condrank: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
