from .factor import (
    HOLOMORPHY_BOUND,
    GKResult,
    check_holomorphy,
    gk_product,
    j_factor,
    leading_operator_coefficient,
)

__all__ = [
    "HOLOMORPHY_BOUND",
    "GKResult",
    "check_holomorphy",
    "gk_product",
    "j_factor",
    "leading_operator_coefficient",
]
