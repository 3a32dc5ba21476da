"""Command-line surface: validate spec files, print views, classify maps,
sum logics, run the law suite, count structures.

Exit codes: 0 success, 1 validation or law failure, 2 usage or parse error.
Regular output goes to stdout, diagnostics to stderr; all output is
deterministic.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import closure as closure_mod
from . import coalgebra as coalg_mod
from .core import CapExceededError, UPSET_ENUM_CAP, bits, upset_masks
from .laws import SuiteConfig, count_logics, run_suite
from .monotone import AbstractLogic, preserving_profile
from .specfile import ParseError, SpecFile, ValidationError, build_logic, build_map, parse

USAGE_ERROR = 2
FAILURE = 1


class CommandError(Exception):
    """A validation-level failure; message goes to stderr, exit code 1."""


def _load(path: str) -> SpecFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def _get_logic(spec: SpecFile, name: str) -> AbstractLogic:
    try:
        decl = spec.logic(name)
    except KeyError as exc:
        raise CommandError(str(exc.args[0])) from exc
    return build_logic(decl)


def _closure_lines(logic: AbstractLogic) -> list[str]:
    carrier = logic.carrier
    return [
        f"{carrier.format_subset(amask)} => "
        f"{carrier.format_subset(logic.closure_mask(amask))}"
        for amask in range(1 << carrier.size)
    ]


def cmd_check(args: argparse.Namespace) -> int:
    spec = _load(args.file)
    for decl in spec.logics:
        build_logic(decl)
    logics = {decl.name: build_logic(decl) for decl in spec.logics}
    for decl in spec.maps:
        build_map(decl, logics[decl.domain], logics[decl.codomain])
    return 0


def cmd_close(args: argparse.Namespace) -> int:
    logic = _get_logic(_load(args.file), args.logic)
    for line in _closure_lines(logic):
        print(line)
    return 0


def cmd_view(args: argparse.Namespace) -> int:
    logic = _get_logic(_load(args.file), args.logic)
    carrier = logic.carrier
    if args.view_as == "closure":
        for line in _closure_lines(logic):
            print(line)
    elif args.view_as == "rel":
        for amask in range(1 << carrier.size):
            for x in bits(logic.closure_mask(amask)):
                print(f"{carrier.format_subset(amask)} |- {carrier.labels[x]}")
    else:
        alpha = coalg_mod.to_coalgebra(logic)
        for x, fam in enumerate(alpha.structure):
            print(f"alpha({carrier.labels[x]}) = {carrier.format_family(fam)}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    spec = _load(args.file)
    try:
        decl = spec.map(args.map)
    except KeyError as exc:
        raise CommandError(str(exc.args[0])) from exc
    source = build_logic(spec.logic(decl.domain))
    target = build_logic(spec.logic(decl.codomain))
    f = build_map(decl, source, target)
    profile = preserving_profile(f, source, target)
    c_source = closure_mod.operator_of(source)
    c_target = closure_mod.operator_of(target)
    flags = coalg_mod.classify_map(
        f, coalg_mod.to_coalgebra(source), coalg_mod.to_coalgebra(target))
    # continuous/initial repeat preserving/conservative through the closure
    # view on purpose: the agreement is the observable cross-check
    lines = (
        ("preserving", profile["pointwise"]),
        ("conservative", flags.conservative),
        ("continuous", closure_mod.is_continuous(f, c_source, c_target)),
        ("initial", closure_mod.is_initial(f, c_source, c_target)),
        ("open", flags.open),
        ("progressive", flags.progressive),
    )
    for name, value in lines:
        print(f"{name}: {'true' if value else 'false'}")
    return 0


def cmd_sum(args: argparse.Namespace) -> int:
    spec = _load(args.file)
    names = [name.strip() for name in args.logics.split(",") if name.strip()]
    if not names:
        raise CommandError("no logics named")
    logics = [_get_logic(spec, name) for name in names]
    try:
        summed, _ = coalg_mod.sum_logics(logics, names)
    except CapExceededError as exc:
        raise CommandError(str(exc)) from exc
    for line in _closure_lines(summed):
        print(line)
    return 0


def cmd_laws(args: argparse.Namespace) -> int:
    config = SuiteConfig(
        max_exhaustive_size=args.max_size,
        samples=args.samples,
        seed=args.seed,
    )
    report = run_suite(config)
    print(report.render())
    return 0 if report.ok else FAILURE


def cmd_count(args: argparse.Namespace) -> int:
    n = args.n
    if args.what == "upsets":
        if n > UPSET_ENUM_CAP:
            raise CommandError(f"up-set counting is capped at {UPSET_ENUM_CAP}")
        print(len(upset_masks(n)))
    else:
        if n > 3:
            raise CommandError("logic counting is capped at 3")
        print(count_logics(n))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulog",
        description="finite-model kernel for abstract logics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate a spec file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("close", help="print the closure table of a logic")
    p.add_argument("file")
    p.add_argument("--logic", required=True)
    p.set_defaults(handler=cmd_close)

    p = sub.add_parser("view", help="print a logic in one of the three views")
    p.add_argument("file")
    p.add_argument("--logic", required=True)
    p.add_argument("--as", dest="view_as", required=True,
                   choices=("rel", "closure", "coalg"))
    p.set_defaults(handler=cmd_view)

    p = sub.add_parser("classify", help="classify a declared map")
    p.add_argument("file")
    p.add_argument("--map", required=True)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("sum", help="print the closure table of a sum of logics")
    p.add_argument("file")
    p.add_argument("--logics", required=True,
                   help="comma-separated logic names")
    p.add_argument("--name", default=None,
                   help="name for the resulting logic (cosmetic)")
    p.set_defaults(handler=cmd_sum)

    p = sub.add_parser("laws", help="run the law suite")
    p.add_argument("--max-size", type=int, default=2,
                   help="cap for exhaustive sweeps over relation spaces")
    p.add_argument("--samples", type=int, default=1000,
                   help="sampled cases per sampled law")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_laws)

    p = sub.add_parser("count", help="count up-sets or logics on n points")
    p.add_argument("what", choices=("upsets", "logics"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_count)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValidationError, CommandError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
