from .datum import CARTAN, Root, RootDatumD4, d4
from .folding import RelativeDatum, RelativeRoot, build_relative
from .weight import (
    AffineWeight,
    format_affine,
    format_rational,
    parse_rational,
    s,
    to_fraction,
    to_sympy,
)
from .weyl import (
    WeylElement,
    WeylGroup,
    act,
    apply_matrix,
    canonical_names,
    coset_reps,
    inversion_set,
    length,
    reduce,
    sort_elements,
    subgroup,
    weyl_group,
    words_equal,
)

__all__ = [
    # Absolute datum
    "CARTAN",
    "Root",
    "RootDatumD4",
    "d4",
    # Folding
    "RelativeDatum",
    "RelativeRoot",
    "build_relative",
    # Weights
    "AffineWeight",
    "format_affine",
    "format_rational",
    "parse_rational",
    "s",
    "to_fraction",
    "to_sympy",
    # Weyl words
    "WeylElement",
    "WeylGroup",
    "act",
    "apply_matrix",
    "canonical_names",
    "coset_reps",
    "inversion_set",
    "length",
    "reduce",
    "sort_elements",
    "subgroup",
    "weyl_group",
    "words_equal",
]
