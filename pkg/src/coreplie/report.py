"""Full verification pipeline and report emission.

The machine format is one JSON document with sorted keys, floats printed
with 17 significant digits, and complex numbers as [re, im] pairs. Two runs
on the same configuration produce byte-identical documents, so wall time is
never part of the machine report; the CLI prints it separately in human
mode.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraDimension,
    ClosureReport,
    StructureConstants,
    algebra_dimension,
    jacobi_check,
    structure_constants_subgroup,
    sub_sub_closure_report,
    verify_coset_coset_closure,
    verify_mixed_closure,
)
from .config import GroupConfig
from .group_core import a0_square_sign, classify_coirrep
from .infinitesimal import (
    DifferentiationError,
    generator_basis,
    transport,
    transport_map,
)
from .matrices import max_abs_diff

SCHEMA_VERSION = 1


def complex_matrix_to_json(m) -> list:
    a = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def complex_matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)


@dataclass(frozen=True)
class RunReport:
    """Machine-friendly record of one full verification run."""

    schema: int
    group: dict
    mode: str
    xi: float
    delta_alpha0: float
    tolerances: dict
    classification: str
    a0_sign: int
    generators: dict
    structure_constants: dict
    closures: dict
    jacobi: dict
    dimension: dict
    passed: bool

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "group": self.group,
            "mode": self.mode,
            "xi": self.xi,
            "delta_alpha0": self.delta_alpha0,
            "tolerances": self.tolerances,
            "classification": self.classification,
            "a0_sign": self.a0_sign,
            "generators": self.generators,
            "structure_constants": self.structure_constants,
            "closures": self.closures,
            "jacobi": self.jacobi,
            "dimension": self.dimension,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(
            schema=d["schema"],
            group=d["group"],
            mode=d["mode"],
            xi=d["xi"],
            delta_alpha0=d["delta_alpha0"],
            tolerances=d["tolerances"],
            classification=d["classification"],
            a0_sign=d["a0_sign"],
            generators=d["generators"],
            structure_constants=d["structure_constants"],
            closures=d["closures"],
            jacobi=d["jacobi"],
            dimension=d["dimension"],
            passed=d["passed"],
        )


def _closure_to_dict(rep: ClosureReport) -> dict:
    return {
        "family": rep.family,
        "tolerance": rep.tolerance,
        "passed": rep.passed,
        "max_residual": rep.max_residual(),
        "max_complex_residual": rep.max_complex_residual(),
        "pairs": [
            {
                "left": p.left,
                "right": p.right,
                "coeffs": [float(c) for c in p.coeffs],
                "residual": float(p.residual),
                "complex_coeffs": [[float(c.real), float(c.imag)] for c in p.complex_coeffs],
                "complex_residual": float(p.complex_residual),
            }
            for p in rep.pairs
        ],
    }


def _structure_to_dict(sc: StructureConstants) -> dict:
    return {
        "c": [[[float(v) for v in row] for row in plane] for plane in sc.c],
        "residuals": [[float(v) for v in row] for row in sc.residuals],
        "max_residual": sc.max_residual(),
    }


def _dimension_to_dict(dim: AlgebraDimension) -> dict:
    return {
        "computed": dim.computed,
        "expected": dim.expected,
        "classification": dim.classification,
        "singular_values": [float(s) for s in dim.singular_values],
        "threshold": float(dim.threshold),
        "margin": None if not np.isfinite(dim.margin) else float(dim.margin),
        "certificate": None
        if dim.certificate is None
        else [float(v) for v in dim.certificate],
    }


def run_verification(cfg: GroupConfig, mode: str = "exact") -> RunReport:
    """Run the whole analysis chain for one configuration.

    Extracts generators in both modes (recording their disagreement),
    computes structure constants, the three commutator families, the Jacobi
    residual over the combined transported generator set, and the real
    algebra dimension. Raises DifferentiationError when the two extraction
    modes disagree beyond the fd-agree tolerance.
    """
    if cfg.extension is None:
        raise ValueError("verification requires an antilinear extension block")
    spec, ext, tol = cfg.spec, cfg.extension, cfg.tolerances

    ctype = classify_coirrep(spec, ext)
    sign = a0_square_sign(ext)

    basis_exact = generator_basis(spec, ext, mode="exact")
    basis_fd = generator_basis(spec, ext, mode="fd", step=tol.fd_step)
    fd_diff = 0.0
    for a, b in zip(
        list(basis_exact.subgroup) + list(basis_exact.coset),
        list(basis_fd.subgroup) + list(basis_fd.coset),
    ):
        fd_diff = max(fd_diff, max_abs_diff(a, b))
    if fd_diff > tol.fd_agree:
        raise DifferentiationError(
            f"finite-difference and exact generators disagree by {fd_diff:.3e} "
            f"(tolerance {tol.fd_agree:.1e})"
        )
    basis = basis_exact if mode == "exact" else basis_fd

    sc = structure_constants_subgroup(basis.subgroup, tol=tol.closure, strict=False)
    tmap = transport_map(ext, ctype, cfg.delta_alpha0).inverse()

    sub_sub = sub_sub_closure_report(basis, tol=tol.closure)
    coset_coset = verify_coset_coset_closure(basis, tmap, tol=tol.closure)
    mixed = verify_mixed_closure(basis, tmap, tol=tol.closure)

    all_fields = basis.subgroup_fields() + [transport(f, tmap) for f in basis.coset_fields()]
    jacobi_max = jacobi_check(all_fields)
    jacobi_passed = jacobi_max < tol.jacobi

    dim = algebra_dimension(basis, tmap, rank_tol=tol.rank)

    passed = (
        sub_sub.passed
        and coset_coset.passed
        and mixed.passed
        and jacobi_passed
        and sc.max_residual() <= tol.closure
    )

    return RunReport(
        schema=SCHEMA_VERSION,
        group={"name": spec.name, "n": spec.n, "d": spec.d, "source": cfg.source},
        mode=mode,
        xi=float(ext.xi),
        delta_alpha0=float(cfg.delta_alpha0),
        tolerances=tol.as_dict(),
        classification=ctype.value,
        a0_sign=sign,
        generators={
            "subgroup": [complex_matrix_to_json(m) for m in basis.subgroup],
            "coset": [complex_matrix_to_json(m) for m in basis.coset],
            "fd_max_abs_diff": fd_diff,
        },
        structure_constants=_structure_to_dict(sc),
        closures={
            "sub-sub": _closure_to_dict(sub_sub),
            "coset-coset": _closure_to_dict(coset_coset),
            "sub-coset": _closure_to_dict(mixed),
        },
        jacobi={"max_residual": jacobi_max, "tolerance": tol.jacobi, "passed": jacobi_passed},
        dimension=_dimension_to_dict(dim),
        passed=passed,
    )


# --- machine serialization (deterministic, 17 significant digits) ---------


def _emit_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not np.isfinite(value):
            raise ValueError("machine reports cannot carry non-finite numbers")
        if value == 0.0:
            return "0"  # normalize negative zero so emit(parse(.)) is stable
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_emit_value(v) for v in value) + "]"
    if isinstance(value, dict):
        items = sorted(value.items())
        return "{" + ",".join(f"{json.dumps(k)}:{_emit_value(v)}" for k, v in items) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_machine(report: RunReport) -> str:
    """Byte-deterministic single-line JSON document for a report."""
    return _emit_value(report.to_dict())


def parse_machine(text: str) -> RunReport:
    """Inverse of emit_machine: parse_machine(emit_machine(r)) == r."""
    return RunReport.from_dict(json.loads(text))


# --- human formatting ------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def _fmt_complex(z: complex) -> str:
    return f"{z.real:+.6g}{z.imag:+.6g}j"


def format_matrix(m, indent: str = "    ") -> str:
    a = np.asarray(m, dtype=complex)
    lines = []
    for row in a:
        lines.append(indent + "[" + ", ".join(_fmt_complex(z) for z in row) + "]")
    return "\n".join(lines)


def _human_closure(rep_dict: dict) -> list:
    lines = [
        f"  family {rep_dict['family']}: "
        f"{'PASS' if rep_dict['passed'] else 'FAIL'} "
        f"(max residual {_fmt(rep_dict['max_residual'])}, "
        f"tolerance {_fmt(rep_dict['tolerance'])}, "
        f"complex fallback max {_fmt(rep_dict['max_complex_residual'])})"
    ]
    for p in rep_dict["pairs"]:
        coeffs = ", ".join(_fmt(c) for c in p["coeffs"])
        lines.append(
            f"    ({p['left']},{p['right']}): residual {_fmt(p['residual'])}"
            f"  coeffs [{coeffs}]  complex residual {_fmt(p['complex_residual'])}"
        )
    return lines


def format_human(report: RunReport) -> str:
    """Multi-line human-readable rendering (6 significant digits)."""
    d = report.to_dict()
    lines = []
    g = d["group"]
    lines.append(f"group {g['name']} (n={g['n']}, d={g['d']}, mode={d['mode']})")
    lines.append(f"classification: {d['classification']}-type, a0^2 sign {d['a0_sign']:+d}")
    lines.append(f"xi = {_fmt(d['xi'])}, delta_alpha0 = {_fmt(d['delta_alpha0'])}")
    lines.append(
        "generators: fd vs exact max abs diff "
        f"{_fmt(d['generators']['fd_max_abs_diff'])}"
    )
    lines.append(
        f"structure constants: max residual {_fmt(d['structure_constants']['max_residual'])}"
    )
    lines.append("closure families:")
    for fam in ("sub-sub", "coset-coset", "sub-coset"):
        lines.extend(_human_closure(d["closures"][fam]))
    lines.append(
        f"jacobi: max residual {_fmt(d['jacobi']['max_residual'])} "
        f"({'PASS' if d['jacobi']['passed'] else 'FAIL'})"
    )
    dim = d["dimension"]
    lines.append(
        f"algebra dimension: {dim['computed']} (expected {dim['expected']}, "
        f"{dim['classification']})"
    )
    lines.append(f"overall: {'PASS' if d['passed'] else 'FAIL'}")
    return "\n".join(lines)
