from .local import (
    ADMISSIBLE,
    LocalQuotientTag,
    PlaceProfile,
    check_admissible,
    load_profiles,
    local_quotients,
)
from .dotted import DottedPlaceSet
from .predicates import (
    CASES,
    CaseData,
    ClassSum,
    GlobalCase,
    Term,
    appears,
    appears_closed_form,
    case_data,
    check_consistent,
    check_place,
    class_sums,
    term_scalar,
)
from .enumerate import LabelledDottedSet, candidates, enumerate_admissible

__all__ = [
    # Local quotients
    "ADMISSIBLE",
    "LocalQuotientTag",
    "PlaceProfile",
    "check_admissible",
    "load_profiles",
    "local_quotients",
    # Dotted sets
    "DottedPlaceSet",
    # Predicates
    "CASES",
    "CaseData",
    "ClassSum",
    "GlobalCase",
    "Term",
    "appears",
    "appears_closed_form",
    "case_data",
    "check_consistent",
    "check_place",
    "class_sums",
    "term_scalar",
    # Enumeration
    "LabelledDottedSet",
    "candidates",
    "enumerate_admissible",
]
