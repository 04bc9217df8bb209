"""Exact computation with generalized matrix algebras: build them from
Morita contexts, solve for their derivations, Jordan derivations and
antiderivations, and certify the structure statements on concrete
instances. All arithmetic is exact (rationals or prime fields); maps cross
the boundary column-major as lists of columns of scalar strings."""

from ._core import (
    AlgebraError,
    Context,
    DimensionError,
    Field,
    FieldMismatchError,
    Gma,
    HypothesisError,
    ParseError,
    PreconditionError,
    build_gma,
    canonical_report,
    certify,
    decompose,
    document_maps,
    from_document,
    gallery,
    gallery_presets,
    gamma_jord,
    inner_derivation,
    is_antiderivation,
    is_derivation,
    is_jordan_derivation,
    run_cli,
    solve,
    theta1,
    theta2,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "Context",
    "DimensionError",
    "Field",
    "FieldMismatchError",
    "Gma",
    "HypothesisError",
    "ParseError",
    "PreconditionError",
    "build_gma",
    "canonical_report",
    "certify",
    "decompose",
    "document_maps",
    "from_document",
    "gallery",
    "gallery_presets",
    "gamma_jord",
    "inner_derivation",
    "is_antiderivation",
    "is_derivation",
    "is_jordan_derivation",
    "run_cli",
    "solve",
    "theta1",
    "theta2",
]
