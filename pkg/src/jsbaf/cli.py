"""Command-line driver.

Exit codes: 0 success, 1 postulate violation (or oracle mismatch) found,
2 input error, 3 enumeration or search limit exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .arguments import (
    EnumerationLimits,
    build_aspic_minus_af,
    build_da_jsbaf,
    construct_arguments,
    strict_argument_nodes,
)
from .core import ArgumentationSystem, is_consistent
from .dsl import SourceDocument, parse_system, print_system
from .errors import (
    GenerationFailedError,
    InconsistentSystemError,
    JsbafError,
    LimitExceededError,
    ParseError,
    SearchLimitExceededError,
    ValidationError,
)
from .frameworks import flatten_joint_attacks, flatten_one_step
from .oracle import ORACLE_NODE_CAP, brute_force_extensions
from .postulates import MODES, POSTULATES, SystemParams, compare_modes, random_system
from .reporting import build_report, emit_apx, emit_dot, emit_report, limit_error_report
from .semantics import DEFAULT_NODE_BOUND, SEMANTICS, extensions, flattened_af

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def _read_source(path: str) -> SourceDocument:
    if path == "-":
        return SourceDocument(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as handle:
            return SourceDocument(handle.read(), path)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc


def _add_common(parser: argparse.ArgumentParser, with_semantics: bool = True):
    parser.add_argument("--file", required=True, help="rule file, or - for stdin")
    if with_semantics:
        parser.add_argument("--semantics", choices=SEMANTICS, default="preferred")
    parser.add_argument(
        "--flatten", choices=("literal", "prune-inert"), default="literal",
        help="how empty-source support bars are treated after flattening",
    )
    parser.add_argument("--max-arguments", type=int, default=5000)
    parser.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BOUND)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jsbaf",
        description="Structured argumentation solver with deductive joint support.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="compute extensions, conclusions, postulates")
    _add_common(p_eval)
    p_eval.add_argument("--mode", choices=MODES, default="deductive")
    p_eval.add_argument("--report", choices=("json", "text"), default="json")
    p_eval.add_argument(
        "--allow-inconsistent", action="store_true",
        help="evaluate anyway; postulate verdicts are then out of scope",
    )

    p_flat = sub.add_parser("flatten", help="flatten the joint-support framework of a system")
    _add_common(p_flat, with_semantics=False)
    p_flat.add_argument("--stage", choices=("one-step", "two-step", "simplified"), default="simplified")
    p_flat.add_argument("--emit", choices=("dot", "apx"), default="dot")

    p_args = sub.add_parser("arguments", help="list the argument store")
    _add_common(p_args, with_semantics=False)

    p_check = sub.add_parser("check-postulates", help="both modes, all four semantics")
    _add_common(p_check, with_semantics=False)
    p_check.add_argument("--allow-inconsistent", action="store_true")

    p_rand = sub.add_parser("random", help="emit a seeded random consistent system")
    p_rand.add_argument("--seed", type=int, required=True)
    p_rand.add_argument("--atoms", type=int, default=4)
    p_rand.add_argument("--strict", type=int, default=3)
    p_rand.add_argument("--defeasible", type=int, default=3)
    p_rand.add_argument("--max-body", type=int, default=2)
    p_rand.add_argument("--undercut-density", type=float, default=0.2)

    p_oracle = sub.add_parser("oracle", help="cross-check the engine against brute force")
    _add_common(p_oracle)
    p_oracle.add_argument("--mode", choices=MODES, default="deductive")
    p_oracle.add_argument(
        "--oracle-cap", type=int, default=12,
        help=f"refuse frameworks above this node count (hard cap {ORACLE_NODE_CAP})",
    )

    return parser


def _load_system(args) -> ArgumentationSystem:
    return parse_system(_read_source(args.file))


def _cmd_eval(args) -> int:
    system = _load_system(args)
    limits = EnumerationLimits(args.max_arguments)
    settings = {
        "semantics": args.semantics,
        "mode": args.mode,
        "flatten": args.flatten if args.mode == "deductive" else None,
        "max_arguments": limits.max_arguments,
        "max_nodes": args.max_nodes,
    }
    try:
        report = build_report(
            system,
            source=args.file,
            semantics=args.semantics,
            mode=args.mode,
            flatten_mode=args.flatten,
            limits=limits,
            max_nodes=args.max_nodes,
            require_consistent=not args.allow_inconsistent,
        )
    except (LimitExceededError, SearchLimitExceededError) as exc:
        sys.stdout.write(emit_report(limit_error_report(args.file, settings, exc), args.report))
        return EXIT_LIMIT
    sys.stdout.write(emit_report(report, args.report))
    if any(v == "violated" for v in report["postulate_summary"].values()):
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_flatten(args) -> int:
    system = _load_system(args)
    limits = EnumerationLimits(args.max_arguments)
    store = construct_arguments(system, limits)
    j = build_da_jsbaf(system, limits, store=store)
    shield = strict_argument_nodes(store)
    if args.stage == "one-step":
        framework = flatten_one_step(j, shield)
        if args.emit == "apx":
            raise ValidationError("APX cannot represent joint attacks; use --emit dot")
    elif args.stage == "two-step":
        framework = flatten_joint_attacks(flatten_one_step(j, shield))
    else:
        framework = flattened_af(j, args.flatten, shielded=shield)
    sys.stdout.write(emit_dot(framework) if args.emit == "dot" else emit_apx(framework))
    return EXIT_OK


def _cmd_arguments(args) -> int:
    system = _load_system(args)
    store = construct_arguments(system, EnumerationLimits(args.max_arguments))
    for arg in store.arguments:
        sys.stdout.write(
            f"{arg.canonical_id} = {arg.compact}  |  {arg.form}  |  {arg.structure}\n"
        )
    if store.acyclicity_pruned:
        sys.stdout.write("# note: enumeration pruned repeated-conclusion branches\n")
    return EXIT_OK


def _cmd_check_postulates(args) -> int:
    system = _load_system(args)
    limits = EnumerationLimits(args.max_arguments)
    violated = False
    for semantics in SEMANTICS:
        comparison = compare_modes(
            system,
            semantics,
            limits,
            flatten_mode=args.flatten,
            max_nodes=args.max_nodes,
            require_consistent=not args.allow_inconsistent,
        )
        for mode in MODES:
            for postulate in POSTULATES:
                holds = comparison.summary[postulate][mode]
                violated = violated or not holds
                state = "satisfied" if holds else "VIOLATED"
                sys.stdout.write(f"{semantics:<9} {mode:<12} {postulate:<21} {state}\n")
    if args.allow_inconsistent and not is_consistent(system):
        sys.stdout.write("# note: system is inconsistent; verdicts are out of postulate scope\n")
    return EXIT_VIOLATION if violated else EXIT_OK


def _cmd_random(args) -> int:
    params = SystemParams(
        n_atoms=args.atoms,
        n_strict=args.strict,
        n_defeasible=args.defeasible,
        max_body=args.max_body,
        undercut_density=args.undercut_density,
    )
    generated = random_system(params, args.seed)
    sys.stdout.write(f"# seed {generated.seed}, attempt {generated.attempts}\n")
    sys.stdout.write(print_system(generated.system))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    system = _load_system(args)
    limits = EnumerationLimits(args.max_arguments)
    store = construct_arguments(system, limits)
    if args.mode == "aspic-minus":
        af = build_aspic_minus_af(system, limits, store=store)
    else:
        af = flattened_af(
            build_da_jsbaf(system, limits, store=store),
            args.flatten,
            shielded=strict_argument_nodes(store),
        )
    if len(af.nodes) > args.oracle_cap:
        raise ValidationError(
            f"framework has {len(af.nodes)} nodes, above --oracle-cap {args.oracle_cap}"
        )
    engine = extensions(af, args.semantics, max_nodes=max(args.max_nodes, len(af.nodes)))
    brute = brute_force_extensions(af, args.semantics)
    if engine == brute:
        sys.stdout.write(f"{args.semantics}: OK ({len(engine)} extensions agree)\n")
        return EXIT_OK
    sys.stdout.write(f"{args.semantics}: MISMATCH\n")
    sys.stdout.write(f"  engine: {[sorted(n.label for n in e) for e in engine]}\n")
    sys.stdout.write(f"  oracle: {[sorted(n.label for n in e) for e in brute]}\n")
    return EXIT_VIOLATION


_COMMANDS = {
    "eval": _cmd_eval,
    "flatten": _cmd_flatten,
    "arguments": _cmd_arguments,
    "check-postulates": _cmd_check_postulates,
    "random": _cmd_random,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValidationError, InconsistentSystemError, GenerationFailedError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (LimitExceededError, SearchLimitExceededError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except JsbafError as exc:  # pragma: no cover
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
