"""Exact weight-module calculus over rank-1 generalized Weyl algebras
on a finite orbit: module families, tensor decompositions, Grothendieck
rings, graph presentations, and an independent matrix oracle.
"""

from .errors import (
    ContextMismatch,
    GraphConditionError,
    GwaError,
    InvalidBreakIndex,
    InvalidWord,
    MathError,
    NonSplitSpectrum,
    OracleError,
    ParseError,
    PreconditionBreaks,
    RootExtractionNeeded,
    SingularF,
    ValidationError,
    ZeroConstantTerm,
    ZeroLetterPresent,
)
from .scalars import (
    CycloScalar,
    JordanType,
    Matrix,
    Poly,
    companion,
    cyclo_embed,
    field_factor,
    field_roots,
    jordan_decompose,
    matrix_sigma_twist,
    nth_roots_in_field,
    poly_power_bracket,
)

__all__ = [name for name in dir() if not name.startswith("_")]
