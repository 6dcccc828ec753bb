from .sigma import (
    DERIVED_CASES,
    EquivClass,
    SigmaRow,
    SigmaTable,
    classes,
    sigma,
    sigma_table,
)
from .rules import RULES, SOURCES, CancellationRule, applicable_rule, net_order
from .poles import PoleOrderReport, eisenstein_pole_order, pole_report

__all__ = [
    # Sigma-sets
    "DERIVED_CASES",
    "EquivClass",
    "SigmaRow",
    "SigmaTable",
    "classes",
    "sigma",
    "sigma_table",
    # Cancellation
    "RULES",
    "SOURCES",
    "CancellationRule",
    "applicable_rule",
    "net_order",
    # Pole orders
    "PoleOrderReport",
    "eisenstein_pole_order",
    "pole_report",
]
