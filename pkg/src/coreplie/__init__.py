"""Corepresentations of continuous groups with an antilinear coset.

Build groups of the form G + a0*G from a matrix Lie group G and an
antilinear operation a0 with a0^2 = +-1, classify the coirrep as type a or
type b, extract the subgroup and coset infinitesimal generators, and verify
numerically how the three commutator families close and what the real
algebra dimension is.
"""

from .algebra import (
    AlgebraDimension,
    ClosurePair,
    ClosureReport,
    NotClosedError,
    StructureConstants,
    algebra_dimension,
    jacobi_check,
    project_onto_span,
    project_onto_span_complex,
    structure_constants_subgroup,
    sub_sub_closure_report,
    verify_coset_coset_closure,
    verify_mixed_closure,
)
from .catalog import CATALOG_NAMES, catalog_entry
from .coirrep import (
    BlockOrder,
    CoirrepMatrix,
    CoordinateVector,
    Frame,
    Side,
    TypeMismatchError,
    act_b,
    act_coset_a,
    act_subgroup_a,
    build_b_matrix,
    transform_coords_a,
    transform_coords_b,
)
from .config import ConfigError, GroupConfig, Tolerances, load_config, parse_config
from .group_core import (
    AntilinearExtension,
    CoirrepType,
    GroupElement,
    InconsistentExtensionError,
    LieGroupSpec,
    Linearity,
    a0_square_sign,
    classify_coirrep,
    compose,
    exp_curve,
)
from .infinitesimal import (
    DifferentiationError,
    FrameMismatchError,
    GeneratorBasis,
    LinearVectorField,
    TransportMap,
    apply_vf,
    central_derivative,
    extract_coset_generators,
    extract_subgroup_generators,
    generator_basis,
    make_operator,
    transport,
    transport_map,
    vf_commutator,
)
from .report import RunReport, emit_machine, format_human, parse_machine, run_verification

__version__ = "0.1.0"

__all__ = [
    "AlgebraDimension",
    "AntilinearExtension",
    "BlockOrder",
    "CATALOG_NAMES",
    "ClosurePair",
    "ClosureReport",
    "CoirrepMatrix",
    "CoirrepType",
    "ConfigError",
    "CoordinateVector",
    "DifferentiationError",
    "Frame",
    "FrameMismatchError",
    "GeneratorBasis",
    "GroupConfig",
    "GroupElement",
    "InconsistentExtensionError",
    "LieGroupSpec",
    "Linearity",
    "LinearVectorField",
    "NotClosedError",
    "RunReport",
    "Side",
    "StructureConstants",
    "Tolerances",
    "TransportMap",
    "TypeMismatchError",
    "a0_square_sign",
    "act_b",
    "act_coset_a",
    "act_subgroup_a",
    "algebra_dimension",
    "apply_vf",
    "build_b_matrix",
    "catalog_entry",
    "central_derivative",
    "classify_coirrep",
    "compose",
    "emit_machine",
    "exp_curve",
    "extract_coset_generators",
    "extract_subgroup_generators",
    "format_human",
    "generator_basis",
    "jacobi_check",
    "load_config",
    "make_operator",
    "parse_config",
    "parse_machine",
    "project_onto_span",
    "project_onto_span_complex",
    "run_verification",
    "structure_constants_subgroup",
    "sub_sub_closure_report",
    "transform_coords_a",
    "transform_coords_b",
    "transport",
    "transport_map",
    "verify_coset_coset_closure",
    "verify_mixed_closure",
    "vf_commutator",
]
