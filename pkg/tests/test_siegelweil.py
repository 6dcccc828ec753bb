"""
Normalized-series constants behind the Siegel-Weil identity.
"""
import pytest

from eisenlite import EType
from eisenlite.roots import AffineWeight
from eisenlite.siegelweil import (
    NORMALIZED_PATHS,
    S1,
    S2,
    S3,
    S4,
    SIEGEL_WEIL_RATIO,
    ZETA_LIMITS,
    WeightPath,
    prefactor_constant,
    normalization_report,
    invariance_witness,
    leading_constant,
    normalization_product,
    residue_coefficient,
    siegel_weil_ratio,
)


@pytest.mark.parametrize("key", sorted(NORMALIZED_PATHS, key=lambda k: (k[0].value, k[1])))
def test_prefactor_constants(key):
    """Test each prefactor constant matches its recorded value."""
    assert prefactor_constant(*key) == NORMALIZED_PATHS[key].expected


@pytest.mark.parametrize("etype", [EType.FXK, EType.SPLIT])
def test_siegel_weil_ratio(etype):
    """Test the ratio does not depend on whether K is a field."""
    ratio = siegel_weil_ratio(etype)
    assert ratio == SIEGEL_WEIL_RATIO
    assert ratio.render() == "R_F/(2·ζ_F(3))"


def test_ratio_needs_a_p12_series():
    """Test the cubic-field case has no Siegel-Weil ratio."""
    with pytest.raises(ValueError):
        siegel_weil_ratio(EType.CUBIC)
    with pytest.raises(ValueError):
        residue_coefficient(EType.CUBIC)
    with pytest.raises(ValueError):
        prefactor_constant(EType.CUBIC, "lhs")


def test_residue_coefficient_is_twice_the_ratio():
    """Test A(w21) on the spherical vector equals twice the ratio."""
    assert residue_coefficient() == 2 * SIEGEL_WEIL_RATIO
    assert residue_coefficient(EType.SPLIT) == 2 * SIEGEL_WEIL_RATIO


@pytest.mark.parametrize("limit", ZETA_LIMITS, ids=lambda limit: limit.label)
def test_zeta_limits(limit):
    """Test each tabulated zeta limit."""
    assert limit.evaluate() == limit.expected


def test_normalization_report():
    """Test the full report recomputes every line without a mismatch."""
    lines = normalization_report()
    assert len(lines) == 18
    assert all(line.matches for line in lines)
    assert all(line.render().startswith("[ok]") for line in lines)
    assert lines[0].to_json()["matches"]


def test_weight_path_validation():
    """Test weight paths check rank, targets and affineness."""
    with pytest.raises(ValueError):
        WeightPath(EType.FXK, (-1, S2, -1, -1), {"s2": 2})
    with pytest.raises(ValueError):
        WeightPath(EType.SPLIT, (-1, S2, S3, -1), {"s2": 2})
    with pytest.raises(ValueError):
        WeightPath(EType.SPLIT, (-1, S2 ** 2, -1, -1), {"s2": 2})


def test_weight_path_absolute():
    """Test relative coordinates spread over Galois orbits."""
    path = WeightPath(EType.FXK, (-1, S2, -1), {"s2": 2})
    assert path.absolute() == AffineWeight.of(-1, S2, -1, -1)
    assert path.at_target() == AffineWeight.of(-1, 2, -1, -1)


def test_normalization_product_atoms():
    """Test the normalizing product has one zeta per relative positive root."""
    split = WeightPath(EType.SPLIT, (S1, S2, S3, S4), {"s1": 0, "s2": 0, "s3": 0, "s4": 0})
    fxk = WeightPath(EType.FXK, (S1, S2, S3), {"s1": 0, "s2": 0, "s3": 0})
    assert normalization_product(EType.SPLIT, split).count_atoms() == 12
    assert normalization_product(EType.FXK, fxk).count_atoms() == 9
    with pytest.raises(ValueError):
        normalization_product(EType.SPLIT, fxk)


def test_leading_constant_checks_the_series_order():
    """Test a prefactor order that does not balance the series is an error."""
    entry = NORMALIZED_PATHS[(EType.SPLIT, "lhs")]
    with pytest.raises(ValueError):
        leading_constant(EType.SPLIT, entry.path, 0)


def test_invariance_witness():
    """Test both evaluation points lie in one orbit and a fixed weight does not move."""
    w = invariance_witness(EType.SPLIT, AffineWeight.of(-1, 2, -1, -1), AffineWeight.of(-1, -1, 1, 1))
    assert w is not None
    assert invariance_witness(EType.SPLIT, AffineWeight.zero(), AffineWeight.of(1, 0, 0, 0)) is None


@pytest.mark.parametrize("etype", [EType.FXK, EType.SPLIT])
def test_half_point_is_not_in_the_orbit_of_rho(etype):
    """Test no Weyl element carries the weight at 1/2 to rho."""
    rho = AffineWeight.of(1, 1, 1, 1)
    assert invariance_witness(etype, AffineWeight.of(-1, 2, -1, -1), rho) is None
    assert invariance_witness(etype, rho, rho) is not None
