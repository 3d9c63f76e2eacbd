"""Command-line interface.

Subcommands: classify, generators, commutators, verify, report. Exit codes:
0 success, 1 malformed configuration, 2 inconsistent extension, 3 closure
failure, 4 numerical-differentiation failure.
"""
from __future__ import annotations

import argparse
import sys
import time

from .algebra import structure_constants_subgroup
from .config import ConfigError, GroupConfig, config_for_catalog, load_config, with_overrides
from .group_core import InconsistentExtensionError, a0_square_sign, classify_coirrep
from .infinitesimal import DifferentiationError, generator_basis
from .report import (
    SCHEMA_VERSION,
    complex_matrix_to_json,
    emit_machine,
    format_human,
    format_matrix,
    run_verification,
    _emit_value,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INCONSISTENT = 2
EXIT_CLOSURE = 3
EXIT_DIFFERENTIATION = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coreplie",
        description=(
            "Corepresentations of continuous groups with an antilinear coset: "
            "classify coirreps, extract infinitesimal generators, and verify "
            "commutator closure numerically."
        ),
        epilog="COREP_LIE_SEED fixes the RNG seed used by random-point property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("classify", "report the coirrep type and the sign of a0 squared"),
        ("generators", "list subgroup and coset generators"),
        ("commutators", "list structure constants of the subgroup algebra"),
        ("verify", "run the full closure and dimension verification"),
        ("report", "run the full verification and emit the machine report"),
    ):
        p = sub.add_parser(name, help=help_text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--config", metavar="PATH", help="JSON configuration file")
        src.add_argument("--group", metavar="NAME", help="builtin catalog group name")
        p.add_argument("--mode", choices=("exact", "fd"), default="exact",
                       help="generator extraction mode used for the analysis")
        p.add_argument("--xi", type=float, default=None,
                       help="override the phase xi of the extension")
        p.add_argument("--delta-alpha0", type=float, default=None,
                       help="coset phase parameter of the transport map")
        p.add_argument("--tol", type=float, default=None,
                       help="override the closure tolerance")
        p.add_argument("--format", choices=("human", "machine"), default="human",
                       help="output format")
        p.add_argument("--perturb", type=float, default=None,
                       help="testing aid: add this value to one generator entry")
    return parser


def _load(args) -> GroupConfig:
    cfg = config_for_catalog(args.group) if args.group else load_config(args.config)
    return with_overrides(
        cfg,
        xi=args.xi,
        delta_alpha0=args.delta_alpha0,
        tol=args.tol,
        perturb=args.perturb,
    )


def _require_extension(cfg: GroupConfig):
    if cfg.extension is None:
        raise ConfigError("extension: required for this command but absent")


def cmd_classify(cfg: GroupConfig, args, out) -> int:
    _require_extension(cfg)
    ctype = classify_coirrep(cfg.spec, cfg.extension)
    sign = a0_square_sign(cfg.extension)
    if args.format == "machine":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "classify",
            "group": cfg.spec.name,
            "classification": ctype.value,
            "a0_sign": sign,
        }
        print(_emit_value(doc), file=out)
    else:
        print(f"group {cfg.spec.name}: {ctype.value}-type coirrep, a0^2 sign {sign:+d}", file=out)
    return EXIT_OK


def cmd_generators(cfg: GroupConfig, args, out) -> int:
    if cfg.extension is not None:
        basis = generator_basis(cfg.spec, cfg.extension, mode=args.mode, step=cfg.tolerances.fd_step)
        subgroup, coset = basis.subgroup, basis.coset
    else:
        from .group_core import CoirrepType
        from .infinitesimal import extract_subgroup_generators

        subgroup = extract_subgroup_generators(
            cfg.spec, CoirrepType.A, mode=args.mode, step=cfg.tolerances.fd_step
        )
        coset = None
    if args.format == "machine":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "generators",
            "group": cfg.spec.name,
            "mode": args.mode,
            "subgroup": [complex_matrix_to_json(m) for m in subgroup],
            "coset": None if coset is None else [complex_matrix_to_json(m) for m in coset],
        }
        print(_emit_value(doc), file=out)
    else:
        print(f"group {cfg.spec.name} generators (mode {args.mode})", file=out)
        for i, m in enumerate(subgroup, start=1):
            print(f"  X_{i}:", file=out)
            print(format_matrix(m), file=out)
        if coset is None:
            print("  coset section: absent (no extension block)", file=out)
        else:
            for i, m in enumerate(coset):
                print(f"  X'_{i}:", file=out)
                print(format_matrix(m), file=out)
    return EXIT_OK


def cmd_commutators(cfg: GroupConfig, args, out) -> int:
    sc = structure_constants_subgroup(cfg.spec.generators, tol=cfg.tolerances.closure, strict=False)
    ok = sc.max_residual() <= cfg.tolerances.closure
    if args.format == "machine":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "commutators",
            "group": cfg.spec.name,
            "c": [[[float(v) for v in row] for row in plane] for plane in sc.c],
            "residuals": [[float(v) for v in row] for row in sc.residuals],
            "max_residual": sc.max_residual(),
            "passed": ok,
        }
        print(_emit_value(doc), file=out)
    else:
        print(f"group {cfg.spec.name} structure constants", file=out)
        n = sc.n
        for sigma in range(n):
            for rho in range(sigma + 1, n):
                coeffs = ", ".join(format(v, ".6g") for v in sc.c[sigma, rho])
                print(
                    f"  [J_{sigma + 1}, J_{rho + 1}] -> [{coeffs}]"
                    f"  (residual {sc.residuals[sigma, rho]:.6g})",
                    file=out,
                )
        print(f"  max residual: {sc.max_residual():.6g} ({'PASS' if ok else 'FAIL'})", file=out)
    return EXIT_OK if ok else EXIT_CLOSURE


def cmd_verify(cfg: GroupConfig, args, out, always_machine: bool = False) -> int:
    _require_extension(cfg)
    start = time.perf_counter()
    report = run_verification(cfg, mode=args.mode)
    elapsed = time.perf_counter() - start
    if always_machine or args.format == "machine":
        print(emit_machine(report), file=out)
    else:
        print(format_human(report), file=out)
        print(f"wall time: {elapsed:.3f} s", file=out)
    return EXIT_OK if report.passed else EXIT_CLOSURE


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        cfg = _load(args)
        if args.command == "classify":
            return cmd_classify(cfg, args, out)
        if args.command == "generators":
            return cmd_generators(cfg, args, out)
        if args.command == "commutators":
            return cmd_commutators(cfg, args, out)
        if args.command == "verify":
            return cmd_verify(cfg, args, out)
        if args.command == "report":
            return cmd_verify(cfg, args, out, always_machine=True)
        raise AssertionError(f"unhandled command {args.command}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InconsistentExtensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except DifferentiationError as exc:
        print(f"numerical differentiation error: {exc}", file=sys.stderr)
        return EXIT_DIFFERENTIATION
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
