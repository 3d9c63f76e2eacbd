"""Structure constants, closure verification, and algebra dimension.

Spans and ranks are taken over the real field: coefficient vectors are
solved by least squares on the stacked real and imaginary parts of the
vectorized matrices. A complex-coefficient projection is computed alongside
as a separate fallback diagnostic and is never merged into the real
results; the pass verdicts always refer to the real residuals.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coirrep import Frame
from .group_core import CoirrepType
from .infinitesimal import (
    GeneratorBasis,
    TransportMap,
    transport,
    vf_commutator,
)
from .matrices import frobenius, real_vectorization

CLOSURE_TOL = 1e-9
RANK_REL_TOL = 1e-8


class NotClosedError(ValueError):
    """A bracket fell outside the target span beyond tolerance."""


def project_onto_span(c, basis):
    """Least-squares expansion of C over the real span of the basis.

    Returns (coeffs, residual): real coefficients c_k minimizing the
    Frobenius norm of C - sum_k c_k B_k, and that residual norm.
    """
    if len(basis) == 0:
        raise ValueError("basis must be nonempty")
    c = np.asarray(c, dtype=complex)
    a = np.stack([real_vectorization(b) for b in basis], axis=1)
    rhs = real_vectorization(c)
    coeffs, *_ = np.linalg.lstsq(a, rhs, rcond=None)
    remainder = c - sum(ck * np.asarray(bk, dtype=complex) for ck, bk in zip(coeffs, basis))
    return coeffs, frobenius(remainder)


def project_onto_span_complex(c, basis):
    """Complex-coefficient analogue of project_onto_span (fallback route)."""
    if len(basis) == 0:
        raise ValueError("basis must be nonempty")
    c = np.asarray(c, dtype=complex)
    a = np.stack([np.asarray(b, dtype=complex).ravel() for b in basis], axis=1)
    coeffs, *_ = np.linalg.lstsq(a, c.ravel(), rcond=None)
    remainder = c - sum(ck * np.asarray(bk, dtype=complex) for ck, bk in zip(coeffs, basis))
    return coeffs, frobenius(remainder)


@dataclass(frozen=True)
class StructureConstants:
    """Real tensor c[sigma, rho, tau] with [J_sigma, J_rho] = c^tau J_tau.

    Antisymmetry in (sigma, rho) is exact: one triangle is computed and
    mirrored. residuals[sigma, rho] is the off-span remainder of the pair.
    """

    c: np.ndarray
    residuals: np.ndarray

    @property
    def n(self) -> int:
        return self.c.shape[0]

    def max_residual(self) -> float:
        return float(self.residuals.max(initial=0.0))


def structure_constants_subgroup(
    generators, tol: float = CLOSURE_TOL, strict: bool = True
) -> StructureConstants:
    """Expand every subgroup bracket over the generator span.

    The bracket follows the field convention: the pair (sigma, rho) expands
    B A - A B with A = X_sigma, B = X_rho. With strict=True a residual
    above tol raises NotClosedError ("subgroup not closed").
    """
    gens = [np.asarray(g, dtype=complex) for g in generators]
    n = len(gens)
    c = np.zeros((n, n, n))
    residuals = np.zeros((n, n))
    for sigma in range(n):
        for rho in range(sigma + 1, n):
            bracket = gens[rho] @ gens[sigma] - gens[sigma] @ gens[rho]
            coeffs, res = project_onto_span(bracket, gens)
            c[sigma, rho] = coeffs
            c[rho, sigma] = -coeffs
            residuals[sigma, rho] = residuals[rho, sigma] = res
    sc = StructureConstants(c, residuals)
    if strict and sc.max_residual() > tol:
        raise NotClosedError(
            f"subgroup not closed: max bracket residual {sc.max_residual():.3e} > {tol:.1e}"
        )
    return sc


@dataclass(frozen=True)
class ClosurePair:
    """One commutator pair: real expansion plus the complex fallback."""

    left: int
    right: int
    coeffs: np.ndarray
    residual: float
    complex_coeffs: np.ndarray
    complex_residual: float


@dataclass(frozen=True)
class ClosureReport:
    """Residual report for one commutator family.

    passed is true iff every real residual is below the tolerance; the
    complex fallback never enters the verdict.
    """

    family: str
    pairs: tuple
    tolerance: float
    passed: bool

    def max_residual(self) -> float:
        return max((p.residual for p in self.pairs), default=0.0)

    def max_complex_residual(self) -> float:
        return max((p.complex_residual for p in self.pairs), default=0.0)


def _closure_pair(left, right, bracket, span) -> ClosurePair:
    coeffs, res = project_onto_span(bracket, span)
    ccoeffs, cres = project_onto_span_complex(bracket, span)
    return ClosurePair(left, right, coeffs, res, ccoeffs, cres)


def sub_sub_closure_report(basis: GeneratorBasis, tol: float = CLOSURE_TOL) -> ClosureReport:
    """Subgroup-subgroup family: brackets expand over the subgroup span."""
    fields = basis.subgroup_fields()
    span = list(basis.subgroup)
    pairs = []
    for sigma in range(basis.n):
        for rho in range(sigma + 1, basis.n):
            bracket = vf_commutator(fields[sigma], fields[rho]).coeff
            pairs.append(_closure_pair(sigma, rho, bracket, span))
    passed = all(p.residual < tol for p in pairs)
    return ClosureReport("sub-sub", tuple(pairs), tol, passed)


def _require_xprime_to_x(tmap: TransportMap):
    if tmap.from_frame is not Frame.X_PRIME or tmap.to_frame is not Frame.X:
        raise ValueError("transport map must go from the x' frame to the x frame")


def verify_coset_coset_closure(
    basis: GeneratorBasis, tmap: TransportMap, tol: float = CLOSURE_TOL
) -> ClosureReport:
    """Coset-coset family: brackets, transported to the x frame, expand over
    the real span of the subgroup generators."""
    _require_xprime_to_x(tmap)
    fields = basis.coset_fields()
    span = list(basis.subgroup)
    pairs = []
    for mu in range(len(fields)):
        for nu in range(mu + 1, len(fields)):
            bracket = transport(vf_commutator(fields[mu], fields[nu]), tmap).coeff
            pairs.append(_closure_pair(mu, nu, bracket, span))
    passed = all(p.residual < tol for p in pairs)
    return ClosureReport("coset-coset", tuple(pairs), tol, passed)


def verify_mixed_closure(
    basis: GeneratorBasis, tmap: TransportMap, tol: float = CLOSURE_TOL
) -> ClosureReport:
    """Subgroup-coset family: the subgroup field is transported to the x'
    frame, bracketed with each coset field, and expanded over the real span
    of the coset generators."""
    _require_xprime_to_x(tmap)
    inv = tmap.inverse()
    coset_fields = basis.coset_fields()
    span = list(basis.coset)
    pairs = []
    for sigma, sub_field in enumerate(basis.subgroup_fields()):
        moved = transport(sub_field, inv)
        for mu, coset_field in enumerate(coset_fields):
            bracket = vf_commutator(moved, coset_field).coeff
            pairs.append(_closure_pair(sigma, mu, bracket, span))
    passed = all(p.residual < tol for p in pairs)
    return ClosureReport("sub-coset", tuple(pairs), tol, passed)


def jacobi_check(fields) -> float:
    """Max Frobenius norm of the Jacobi cycle over all field triples."""
    fields = list(fields)
    worst = 0.0
    for i in range(len(fields)):
        for j in range(i + 1, len(fields)):
            for k in range(j + 1, len(fields)):
                u, v, w = fields[i], fields[j], fields[k]
                cycle = (
                    vf_commutator(vf_commutator(u, v), w).coeff
                    + vf_commutator(vf_commutator(v, w), u).coeff
                    + vf_commutator(vf_commutator(w, u), v).coeff
                )
                worst = max(worst, frobenius(cycle))
    return worst


@dataclass(frozen=True)
class AlgebraDimension:
    """Real rank of the stacked generator set and its classification.

    classification is 'a-degenerate' when the rank is n+1, 'b-full' when it
    is 2n+1, and 'other' otherwise; 'other' comes with the dependency
    certificate (the combination of generators realizing the near
    dependency).
    """

    computed: int
    expected: int
    classification: str
    singular_values: np.ndarray
    threshold: float
    margin: float
    certificate: np.ndarray | None = None


def algebra_dimension(
    basis: GeneratorBasis, tmap: TransportMap, rank_tol: float = RANK_REL_TOL
) -> AlgebraDimension:
    """Dimension of the real span of all generators in one common frame.

    Coset generators are transported to the x frame; the real rank of the
    stacked real+imaginary vectorizations is computed from singular values
    with threshold rank_tol * sigma_max.
    """
    _require_xprime_to_x(tmap)
    moved = [transport(f, tmap).coeff for f in basis.coset_fields()]
    stack = [np.asarray(m, dtype=complex) for m in basis.subgroup] + moved
    expected = basis.n + 1 if basis.ctype is CoirrepType.A else 2 * basis.n + 1
    if not stack:
        return AlgebraDimension(0, expected, "other", np.zeros(0), 0.0, 0.0)
    a = np.stack([real_vectorization(m) for m in stack])
    u, svals, _ = np.linalg.svd(a, full_matrices=False)
    threshold = rank_tol * float(svals[0]) if svals.size else 0.0
    rank = int(np.sum(svals > threshold))
    if rank == basis.n + 1:
        classification = "a-degenerate"
    elif rank == 2 * basis.n + 1:
        classification = "b-full"
    else:
        classification = "other"
    kept = svals[svals > threshold]
    margin = float(kept[-1] / threshold) if (kept.size and threshold > 0) else float("inf")
    certificate = None
    if classification == "other" and rank < svals.size:
        # combination of generators realizing the first near dependency
        certificate = u[:, rank].copy()
    return AlgebraDimension(rank, expected, classification, svals, threshold, margin, certificate)
