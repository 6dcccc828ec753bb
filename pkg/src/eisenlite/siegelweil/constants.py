from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple
import sympy

from ..characters import chi_s
from ..enums import CharKind, EType, Field
from ..gk import leading_operator_coefficient
from ..lfun import LAtom, LProduct, SymbolicConstant, fe_canonicalize, order_and_leading
from ..logger import get_logger
from ..roots import AffineWeight, s, weyl_group
from .path import S2, S3, S4, WeightPath, invariance_witness, leading_constant

S_PRIME = sympy.Symbol("s'")

R_F = SymbolicConstant.residue(Field.F)
R_K = SymbolicConstant.residue(Field.K)


def _zeta(field: Field, argument) -> SymbolicConstant:
    return SymbolicConstant.zeta(field, argument)


@dataclass(frozen=True)
class ZetaLimit:
    """lim (poly) * zeta_L(argument) at a point, with its expected value."""
    label: str
    product: LProduct
    point: Mapping[str, Fraction]
    expected: SymbolicConstant

    def evaluate(self) -> SymbolicConstant:
        laurent = order_and_leading(self.product, dict(self.point))
        if laurent.order != 0:
            raise ValueError(f"{self.label} has order {laurent.order}, not a finite nonzero limit")
        return laurent.leading


def _limit(label: str, poly, argument, point: Mapping[str, int], sign: int) -> ZetaLimit:
    product = LProduct([(LAtom(Field.F, argument), 1)], [(poly, 1)])
    return ZetaLimit(label, product, {k: Fraction(v) for k, v in point.items()}, sign * R_F)


# Limits of zeta_L near its poles used to evaluate the normalized series;
# the field is immaterial, F is used throughout.
ZETA_LIMITS: Tuple[ZetaLimit, ...] = (
    _limit("lim s→-1 (s+1)ζ(s+1)", s + 1, s + 1, {"s": -1}, -1),
    _limit("lim s→-1 (s+1)ζ(s+1)", s + 1, s + 1, {"s": -1}, -1),
    _limit("lim s→1 (s-1)ζ(s-1)", s - 1, s - 1, {"s": 1}, -1),
    _limit("lim s→1 (s-1)ζ(s)", s - 1, s, {"s": 1}, 1),
    _limit("lim s→2 (s-2)ζ(s-1)", s - 2, s - 1, {"s": 2}, 1),
    _limit("lim s→2 (s-2)ζ(s-2)", s - 2, s - 2, {"s": 2}, -1),
    _limit("lim s→1 (2s-2)ζ(2s-1)", 2 * s - 2, 2 * s - 1, {"s": 1}, 1),
    _limit("lim s→1 (2s-2)ζ(2s-2)", 2 * s - 2, 2 * s - 2, {"s": 1}, -1),
    _limit("lim s,s'→1 (s+s'-2)ζ(s+s'-1)", s + S_PRIME - 2, s + S_PRIME - 1, {"s": 1, "s'": 1}, 1),
    _limit("lim s,s'→1 (s+s'-2)ζ(s+s'-2)", s + S_PRIME - 2, s + S_PRIME - 2, {"s": 1, "s'": 1}, -1),
)


@dataclass(frozen=True)
class NormalizedPath:
    label: str
    path: WeightPath
    series: str
    series_order: int
    expected: SymbolicConstant


NORMALIZED_PATHS: Dict[Tuple[EType, str], NormalizedPath] = {
    (EType.SPLIT, "lhs"): NormalizedPath(
        "K = F x F, λ(-1, s2, -1, -1), s2 → 2",
        WeightPath(EType.SPLIT, (-1, S2, -1, -1), {"s2": 2}),
        "lim (s-1/2) E_E(f^0, s)",
        1,
        -(2 ** 9) * 3 * _zeta(Field.F, 2) ** 4 * _zeta(Field.F, 3) * R_F ** 7,
    ),
    (EType.SPLIT, "rhs"): NormalizedPath(
        "K = F x F, λ(-1, -1, s3, s4), (s3, s4) → (1, 1)",
        WeightPath(EType.SPLIT, (-1, -1, S3, S4), {"s3": 1, "s4": 1}),
        "E_{P_12}(f^0, 0)",
        0,
        -(2 ** 8) * 3 * _zeta(Field.F, 2) ** 4 * R_F ** 8,
    ),
    (EType.FXK, "lhs"): NormalizedPath(
        "K a field, λ(-1, s2, -1), s2 → 2",
        WeightPath(EType.FXK, (-1, S2, -1), {"s2": 2}),
        "lim (s-1/2) E_E(f^0, s)",
        1,
        (2 ** 7) * 3 * _zeta(Field.F, 2) ** 2 * _zeta(Field.F, 3) * _zeta(Field.K, 2) * R_F ** 3 * R_K ** 2,
    ),
    (EType.FXK, "rhs"): NormalizedPath(
        "K a field, λ(-1, -1, s3), s3 → 1",
        WeightPath(EType.FXK, (-1, -1, S3), {"s3": 1}),
        "E_{P_12}(f^0, 0)",
        0,
        (2 ** 6) * 3 * _zeta(Field.F, 2) ** 2 * _zeta(Field.K, 2) * R_F ** 4 * R_K ** 2,
    ),
}

SIEGEL_WEIL_RATIO = R_F / (2 * _zeta(Field.F, 3))


def prefactor_constant(etype: EType, side: str) -> SymbolicConstant:
    try:
        entry = NORMALIZED_PATHS[(etype, side)]
    except KeyError:
        raise ValueError(
            f"No normalized-series path for ({etype.value}, {side!r}). "
            f"Available: {sorted((e.value, k) for e, k in NORMALIZED_PATHS)}"
        ) from None
    return leading_constant(etype, entry.path, entry.series_order)


def siegel_weil_ratio(etype: EType) -> SymbolicConstant:
    """
    Constant c with Res_{s=1/2} E_E(f^0, s) = c * E_{P_12}(f^0, 0).

    Both evaluation points of the normalized series lie in one Weyl orbit, so
    the ratio of the two prefactors is the constant.

    Raises:
        ValueError: If E is a cubic field (no P_12 Eisenstein series)

    Example:
        >>> siegel_weil_ratio(EType.FXK).render()
        'R_F/(2·ζ_F(3))'
    """
    if etype == EType.CUBIC:
        raise ValueError(
            f"Invalid etype {etype.value!r}. The identity at s=1/2 is stated for "
            f"{[EType.FXK.value, EType.SPLIT.value]}."
        )
    ratio = prefactor_constant(etype, "rhs") / prefactor_constant(etype, "lhs")
    return fe_canonicalize(ratio)


def residue_coefficient(etype: EType = EType.FXK) -> SymbolicConstant:
    """lim (s-1/2) J(w21, chi_s) for trivial chi: the scalar A(w21) on the spherical vector."""
    if etype == EType.CUBIC:
        raise ValueError(f"Invalid etype {etype.value!r}; w21 is not a coset representative there")
    return leading_operator_coefficient(
        weyl_group(etype).element("21"), chi_s(etype, CharKind.TRIVIAL), Fraction(1, 2)
    )


@dataclass(frozen=True)
class ReportLine:
    label: str
    computed: Optional[SymbolicConstant]
    expected: SymbolicConstant
    error: Optional[str] = None

    @property
    def matches(self) -> bool:
        return self.computed is not None and self.computed == self.expected

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "computed": self.computed.to_json() if self.computed is not None else None,
            "expected": self.expected.to_json(),
            "matches": self.matches,
            "error": self.error,
        }

    def render(self) -> str:
        status = "ok" if self.matches else "MISMATCH"
        computed = self.computed.render() if self.computed is not None else self.error
        return f"[{status}] {self.label}: {computed} (expected {self.expected.render()})"


def _line(label: str, expected: SymbolicConstant, compute) -> ReportLine:
    try:
        return ReportLine(label, compute(), expected)
    except ValueError as exc:
        get_logger().warning(f"{label}: {exc}")
        return ReportLine(label, None, expected, str(exc))


def normalization_report() -> List[ReportLine]:
    """
    Every constant of the normalized-series evaluation, recomputed.

    Covers the four prefactor constants, the ratio for both K, the
    consistency of A(w21) with the ratio and the zeta-limit table.
    """
    lines = []
    for (etype, side), entry in NORMALIZED_PATHS.items():
        lines.append(_line(
            f"{entry.label}: constant of {entry.series}",
            entry.expected,
            lambda etype=etype, side=side: prefactor_constant(etype, side),
        ))
    for etype in (EType.FXK, EType.SPLIT):
        lines.append(_line(
            f"Siegel-Weil ratio at s=1/2 ({etype.value})",
            SIEGEL_WEIL_RATIO,
            lambda etype=etype: siegel_weil_ratio(etype),
        ))
    lines.append(_line(
        "A(w21) = 2 x Siegel-Weil ratio",
        2 * SIEGEL_WEIL_RATIO,
        lambda: residue_coefficient(EType.FXK),
    ))
    for limit in ZETA_LIMITS:
        lines.append(_line(limit.label, limit.expected, limit.evaluate))
    lines.append(_line(
        "λ(-1, 2, -1, -1) and λ(-1, -1, 1, 1) lie in one Weyl orbit",
        SymbolicConstant.one(),
        _witness_check,
    ))
    failed = sum(1 for line in lines if not line.matches)
    get_logger().info(f"Normalized-series report: {len(lines) - failed}/{len(lines)} lines match")
    return lines


def _witness_check() -> SymbolicConstant:
    w = invariance_witness(EType.SPLIT, AffineWeight.of(-1, 2, -1, -1), AffineWeight.of(-1, -1, 1, 1))
    if w is None:
        raise ValueError("no Weyl element relates the two evaluation points")
    return SymbolicConstant.one()
