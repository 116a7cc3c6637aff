"""Stability points on a smooth projective curve.

Numerical classes, exact quadratic thresholds, geometric and wall
points with their phases and filtrations, the lifted matrix group and
its actions, the slicing pseudometric and mass embedding, and weak
axiom checks over numerical short exact sequences.
"""

from .errors import (
    BoundaryActionError,
    ChartDomainError,
    CurvestabError,
    DegenerateClassError,
    GenusZeroError,
    InvalidClassError,
    MissingPhaseLabelError,
    MixedGenusError,
    MixedRadicalError,
    WindingAmbiguityError,
    ZeroClassError,
)
from .exact import FLOAT_TOLERANCE, INFINITY, ExactReal, format_exact, parse_exact
from .geometry import (
    DirectionSet,
    DistanceResult,
    GldimResult,
    ProjectiveMassPoint,
    gldim,
    pm_boundary_limit,
    pm_embed,
    slicing_distance,
)
from .group import (
    GroupElement,
    act,
    act_c,
    act_tensor,
    charge_matrix,
    chart_fwd,
    chart_inv,
    compose,
    embed_c,
    f_eval,
    from_central_charge,
    identity,
    invert,
    solve_transitive,
)
from .numclass import CurveContext, NumClass, euler_form, is_semistable_class, slope
from .objects import FormalObject, canonicalize, concat, signed_class
from .stability import (
    Boundary,
    Classification,
    Geometric,
    HNFactor,
    HNResult,
    PhaseValue,
    StabilityPoint,
    Variant,
    boundary_lower,
    boundary_upper,
    boundary_with_label,
    central_charge,
    classify,
    geometric,
    hn,
    mass,
    phase,
)
from .weak import (
    AxiomVerdict,
    NumericalSES,
    Rule,
    check_clsy,
    check_regular,
    check_strict_weak,
    enumerate_ses,
    heart_admissible,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomVerdict",
    "Boundary",
    "BoundaryActionError",
    "ChartDomainError",
    "Classification",
    "CurveContext",
    "CurvestabError",
    "DegenerateClassError",
    "DirectionSet",
    "DistanceResult",
    "ExactReal",
    "FLOAT_TOLERANCE",
    "FormalObject",
    "GenusZeroError",
    "Geometric",
    "GldimResult",
    "GroupElement",
    "HNFactor",
    "HNResult",
    "INFINITY",
    "InvalidClassError",
    "MissingPhaseLabelError",
    "MixedGenusError",
    "MixedRadicalError",
    "NumClass",
    "NumericalSES",
    "PhaseValue",
    "ProjectiveMassPoint",
    "Rule",
    "StabilityPoint",
    "Variant",
    "WindingAmbiguityError",
    "ZeroClassError",
    "act",
    "act_c",
    "act_tensor",
    "boundary_lower",
    "boundary_upper",
    "boundary_with_label",
    "canonicalize",
    "central_charge",
    "charge_matrix",
    "chart_fwd",
    "chart_inv",
    "check_clsy",
    "check_regular",
    "check_strict_weak",
    "classify",
    "compose",
    "concat",
    "embed_c",
    "enumerate_ses",
    "euler_form",
    "f_eval",
    "format_exact",
    "from_central_charge",
    "geometric",
    "gldim",
    "heart_admissible",
    "hn",
    "identity",
    "invert",
    "is_semistable_class",
    "mass",
    "parse_exact",
    "phase",
    "pm_boundary_limit",
    "pm_embed",
    "signed_class",
    "slicing_distance",
    "slope",
    "solve_transitive",
]
