from .path import S1, S2, S3, S4, WeightPath, invariance_witness, leading_constant, normalization_product
from .constants import (
    NORMALIZED_PATHS,
    SIEGEL_WEIL_RATIO,
    ZETA_LIMITS,
    ReportLine,
    NormalizedPath,
    ZetaLimit,
    prefactor_constant,
    normalization_report,
    residue_coefficient,
    siegel_weil_ratio,
)

__all__ = [
    # Weight paths
    "S1",
    "S2",
    "S3",
    "S4",
    "WeightPath",
    "invariance_witness",
    "leading_constant",
    "normalization_product",
    # Constants
    "NORMALIZED_PATHS",
    "SIEGEL_WEIL_RATIO",
    "ZETA_LIMITS",
    "ReportLine",
    "NormalizedPath",
    "ZetaLimit",
    "prefactor_constant",
    "normalization_report",
    "residue_coefficient",
    "siegel_weil_ratio",
]
