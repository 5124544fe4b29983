"""Derivations of group algebras, their groupoid characters, and the grading
of the derivation Lie algebra by an abelian quotient."""

from .algebra import AlgebraElement, commutator
from .coefficients import GaussianRational, I, MINUS_ONE, ONE, ZERO, as_coefficient
from .derivations import (
    Derivation,
    DerivationTableError,
    char_bracket_value,
    char_inner_formula,
    find_inner_witness,
    verify_char_composition,
    verify_leibniz,
)
from .grading import (
    ClosureReport,
    GradedDecomposition,
    GradingSetup,
    InnerGradedCertificate,
    TrivialGradingError,
    central_component_key,
    check_bracket_closure,
    decompose,
    inner_graded_decomposition,
    is_stem,
    project,
    support_classes,
    support_cosets,
    zder_grading_demo,
)
from .groups import (
    Arrow,
    CapabilityError,
    CentralityError,
    CompositionError,
    FiniteQuotient,
    FreeAbelian,
    Group,
    GroupElement,
    GroupMismatchError,
    Heisenberg,
    PermutationGroup,
    QuotientError,
    QuotientSpec,
    conjugate,
    group_from_name,
)

__all__ = [
    "AlgebraElement",
    "Arrow",
    "CapabilityError",
    "CentralityError",
    "ClosureReport",
    "CompositionError",
    "Derivation",
    "DerivationTableError",
    "FiniteQuotient",
    "FreeAbelian",
    "GaussianRational",
    "GradedDecomposition",
    "GradingSetup",
    "Group",
    "GroupElement",
    "GroupMismatchError",
    "Heisenberg",
    "I",
    "InnerGradedCertificate",
    "MINUS_ONE",
    "ONE",
    "PermutationGroup",
    "QuotientError",
    "QuotientSpec",
    "TrivialGradingError",
    "ZERO",
    "as_coefficient",
    "central_component_key",
    "char_bracket_value",
    "char_inner_formula",
    "check_bracket_closure",
    "commutator",
    "conjugate",
    "decompose",
    "find_inner_witness",
    "group_from_name",
    "inner_graded_decomposition",
    "is_stem",
    "project",
    "support_classes",
    "support_cosets",
    "verify_char_composition",
    "verify_leibniz",
    "zder_grading_demo",
]
