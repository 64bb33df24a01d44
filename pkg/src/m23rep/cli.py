"""Command-line interface.

Subcommands cover the whole toolkit: recomputing reference tables, attempting
linear extensions, sweeping beta choices, counting the generated group two
ways, checking irreducibility, running the 24-point experiment, and the full
verification suite.  Results go to standard output (text or --json); progress
and diagnostics go to standard error.  Exit codes: 0 success, 1 mathematical
verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import extension, reports
from .bitmatrix import bfs_closure, min_faithful_dimension, spin
from .field import DEFAULT_MODULUS, FieldSpec, parse_polynomial, poly_degree, to_binary_string
from .perm import Permutation, full_cycle, group_order, parse_cycles
from .subgroup import SubgroupSpec, doubling_orbit


@dataclass(frozen=True)
class CliConfig:
    """Validated run configuration shared by every subcommand."""

    modulus: int = DEFAULT_MODULUS
    alpha_exp: int = 89
    beta_exp: int = 5
    closure_cap: int = 12_000_000
    output: str = "text"

    def __post_init__(self) -> None:
        if self.output not in ("text", "json"):
            raise ValueError(f"output must be text or json, got {self.output!r}")
        if self.closure_cap < 1:
            raise ValueError(f"closure cap must be positive, got {self.closure_cap}")

    def subgroup(self) -> SubgroupSpec:
        """Build the subgroup structure, validating every flag in one place."""
        spec = FieldSpec(poly_degree(self.modulus), self.modulus)
        return SubgroupSpec(field=spec, alpha_exp=self.alpha_exp, beta_exp=self.beta_exp)


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        modulus=parse_polynomial(args.modulus),
        alpha_exp=args.alpha_exp,
        beta_exp=args.beta_exp,
        closure_cap=args.closure_cap,
        output="json" if args.json else "text",
    )


def _parse_perm(text: str, degree: int) -> Permutation:
    """Cycle notation, or the builtin alias "f" for the full cycle."""
    if text.strip() == "f":
        return full_cycle(degree)
    return parse_cycles(text, degree)


def _progress(generation: int, total: int) -> None:
    print(f"closure generation {generation}: {total} elements so far", file=sys.stderr)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_tables(args: argparse.Namespace, config: CliConfig) -> int:
    if (args.start is not None or args.end is not None) and args.id != "x-powers":
        raise ValueError("--from/--to apply only to --id x-powers")
    sub = config.subgroup()
    text = reports.emit_table(args.id, sub, args.start, args.end)
    if config.output == "json":
        rows = reports.parse_table(args.id, text)
        _emit({"table_id": args.id, "rows": [list(r) if isinstance(r, tuple) else r for r in rows]})
    else:
        print(text, end="")
    return 0


def _cmd_extend(args: argparse.Namespace, config: CliConfig) -> int:
    sub = config.subgroup()
    sigma = _parse_perm(args.perm, sub.order)
    report = extension.extend(extension.ExtensionCandidate(sigma, config.beta_exp), sub)
    if config.output == "json":
        _emit(report.as_dict())
    elif report.success:
        assert report.matrix_a is not None
        print(report.matrix_a.to_text())
    else:
        w = report.witness
        assert w is not None
        print(
            f"no linear extension: fails at alpha^{w.c_exponent}; "
            f"expected beta^{w.expected_beta_exp}, computed {to_binary_string(w.computed)} "
            f"(in C: {'yes' if w.in_c else 'no'})"
        )
    return 0 if report.success else 1


def _cmd_search_beta(args: argparse.Namespace, config: CliConfig) -> int:
    sub = config.subgroup()
    sigma = _parse_perm(args.perm, sub.order)
    verdicts = extension.search_beta(sigma, sub)
    successes = sorted(v.beta_exp for v in verdicts if v.success)
    if config.output == "json":
        _emit(
            {
                "success_exponents": successes,
                "verdicts": [
                    {"beta_exp": v.beta_exp, "success": v.success, "orbit_min": v.orbit_min}
                    for v in verdicts
                ],
            }
        )
    else:
        for v in verdicts:
            word = "extends" if v.success else "fails"
            print(f"beta_exp={v.beta_exp:2d} orbit_min={v.orbit_min:2d} {word}")
        print(f"success exponents: {successes}")
    return 0


def _cmd_order(args: argparse.Namespace, config: CliConfig) -> int:
    sub = config.subgroup()
    counts: dict[str, int] = {}
    cap_hit = False
    if args.method in ("ss", "both"):
        f, g, _ = reports.standard_permutations()
        counts["schreier-sims"] = group_order([f, g])
    if args.method in ("bfs", "both"):
        matrices = reports.generator_matrices(sub)
        result = bfs_closure(
            [matrices["matrix-fA"], matrices["matrix-gA"]],
            cap=config.closure_cap,
            progress=_progress,
        )
        counts["bfs-closure"] = result.element_count
        cap_hit = result.cap_hit
    agree = len(set(counts.values())) == 1 and not cap_hit
    if config.output == "json":
        _emit({"orders": counts, "cap_hit": cap_hit, "agree": agree})
    else:
        for name, count in counts.items():
            print(f"{name} order: {count}")
        if cap_hit:
            print("warning: closure hit the element cap; count is a lower bound")
    return 0 if agree else 1


def _cmd_irreducible(args: argparse.Namespace, config: CliConfig) -> int:
    sub = config.subgroup()
    matrices = reports.generator_matrices(sub)
    gens = [matrices["matrix-fA"], matrices["matrix-gA"]]
    degree = sub.field.degree
    nonzero = (1 << degree) - 1
    full = all(spin(v, gens) == degree for v in range(1, 1 << degree))
    minimal = min_faithful_dimension(sub.order)
    ok = full and minimal == degree
    if config.output == "json":
        _emit(
            {
                "vectors_checked": nonzero,
                "all_spins_full": full,
                "min_faithful_dimension": minimal,
            }
        )
    else:
        if full:
            print(f"all {nonzero} spins reach dimension {degree}")
        else:
            print("found a vector spanning a proper invariant subspace")
        print(f"minimal faithful dimension for a group of order {sub.order}: {minimal}")
    return 0 if ok else 1


def _cmd_m24(args: argparse.Namespace, config: CliConfig) -> int:
    sub = config.subgroup()
    _, _, h = reports.standard_permutations()
    exponents = sorted(doubling_orbit(5, sub.order))
    verdicts = [extension.m24_test(h, k, sub) for k in exponents]
    ok = all(not v.consistent for v in verdicts)
    if config.output == "json":
        _emit({"all_inconsistent": ok, "verdicts": [v.as_dict() for v in verdicts]})
    else:
        for v in verdicts:
            if v.consistent:
                print(f"beta_exp={v.beta_exp:2d}: consistent")
            else:
                w = v.witness
                assert w is not None
                print(
                    f"beta_exp={v.beta_exp:2d}: inconsistent at beta^{w.c_exponent} "
                    f"(expected beta^{w.expected_beta_exp}, computed {to_binary_string(w.computed)})"
                )
        print("all inconsistent" if ok else "unexpected consistency found")
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    sub = config.subgroup()
    if args.outdir:
        report, paths = reports.write_report_files(
            args.outdir,
            sub,
            closure_cap=config.closure_cap,
            include_timings=args.timings,
            progress=_progress,
        )
        for kind in ("report", "tables", "figures"):
            for path in paths[kind]:
                print(f"wrote {path}", file=sys.stderr)
    else:
        report = reports.verification_report(
            sub,
            closure_cap=config.closure_cap,
            include_timings=args.timings,
            progress=_progress,
        )
    if config.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(reports.render_report_text(report), end="")
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--modulus",
        default="11,2,0",
        help="field modulus as an MSB-first binary string or comma exponent list (default x^11+x^2+1)",
    )
    common.add_argument("--alpha-exp", type=int, default=89, help="power of X generating C")
    common.add_argument("--beta-exp", type=int, default=5, help="power of alpha used as beta")
    common.add_argument(
        "--closure-cap", type=int, default=12_000_000, help="element cap for the matrix closure"
    )
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="m23rep",
        description="Verified construction of the 11-dimensional GF(2) representation of M23.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("tables", parents=[common], help="print a recomputed reference table")
    p.add_argument("--id", required=True, choices=reports.TABLE_IDS, help="table identifier")
    p.add_argument("--from", dest="start", type=int, default=None, help="first X exponent")
    p.add_argument("--to", dest="end", type=int, default=None, help="last X exponent")
    p.set_defaults(handler=_cmd_tables)

    p = commands.add_parser(
        "extend", parents=[common], help="attempt to extend a permutation of C linearly"
    )
    p.add_argument("--perm", required=True, help="cycle notation on 1..23, or the alias f")
    p.set_defaults(handler=_cmd_extend)

    p = commands.add_parser(
        "search-beta", parents=[common], help="attempt the extension for every choice of beta"
    )
    p.add_argument("--perm", required=True, help="cycle notation on 1..23, or the alias f")
    p.set_defaults(handler=_cmd_search_beta)

    p = commands.add_parser(
        "order", parents=[common], help="order of the group generated by f and g"
    )
    p.add_argument(
        "--method",
        choices=("ss", "bfs", "both"),
        default="both",
        help="permutation-chain count, matrix closure count, or both (must agree)",
    )
    p.set_defaults(handler=_cmd_order)

    p = commands.add_parser(
        "irreducible", parents=[common], help="spin every nonzero vector under f and g"
    )
    p.set_defaults(handler=_cmd_irreducible)

    p = commands.add_parser(
        "m24", parents=[common], help="24-point consistency experiment over one doubling orbit"
    )
    p.set_defaults(handler=_cmd_m24)

    p = commands.add_parser("verify", parents=[common], help="run the full verification suite")
    p.add_argument("--outdir", default=None, help="also write report.json, tables and figures here")
    p.add_argument("--timings", action="store_true", help="include per-check timings in the report")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        return args.handler(args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
