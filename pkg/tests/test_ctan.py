"""
Sigma-sets, equivalence classes and Eisenstein pole orders.
"""
from fractions import Fraction

import pytest

from eisenlite import CharKind, EType, Parabolic
from eisenlite.ctan import RULES, SOURCES, SigmaTable, classes, eisenstein_pole_order, pole_report, sigma, sigma_table
from eisenlite.ctan.rules import CancellationRule
from eisenlite.roots import canonical_names, weyl_group, words_equal

HALF = Fraction(1, 2)
POINTS = (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2))

POLE_ORDERS = [
    (EType.SPLIT, CharKind.TRIVIAL, (1, 2, 1)),
    (EType.SPLIT, CharKind.QUAD_F, (1, 0, 0)),
    (EType.FXK, CharKind.TRIVIAL, (1, 1, 1)),
    (EType.FXK, CharKind.QUAD_K_NORMTRIVIAL, (1, 1, 0)),
    (EType.FXK, CharKind.QUAD_K_NORMNONTRIVIAL, (1, 0, 0)),
    (EType.CUBIC, CharKind.TRIVIAL, (1, 0, 1)),
    (EType.CUBIC, CharKind.QUAD_F, (1, 0, 0)),
    (EType.CUBIC, CharKind.CUBIC_E, (0, 1, 0)),
]


def _names(elements):
    return [w.name for w in elements]


def _partition(found):
    return {frozenset(w.name for w in cls.members) for cls in found}


@pytest.mark.parametrize("etype, kind, orders", POLE_ORDERS)
def test_pole_orders(etype, kind, orders):
    """Test the pole order of the Heisenberg series at 1/2, 3/2 and 5/2."""
    assert tuple(eisenstein_pole_order(etype, kind, s0) for s0 in POINTS) == orders


def test_cubic_trivial_sigma_sets():
    """Test the order-2 and order-1 Sigma-sets of the cubic trivial case."""
    assert _names(sigma(EType.CUBIC, Parabolic.HEISENBERG, CharKind.TRIVIAL, HALF, 2)) == ["212", "2121"]
    found = classes(EType.CUBIC, Parabolic.HEISENBERG, CharKind.TRIVIAL, HALF, 1)
    assert _partition(found) == {frozenset({"21", "21212"}), frozenset({"212", "2121"})}


def test_cubic_quadratic_classes_are_singletons():
    """Test the three poles of the cubic quadratic case are mutually inequivalent."""
    found = classes(EType.CUBIC, Parabolic.HEISENBERG, CharKind.QUAD_F, HALF, 1)
    assert _partition(found) == {frozenset({"212"}), frozenset({"2121"}), frozenset({"21212"})}


def test_split_quadratic_classes():
    """Test the three four-element classes of the split quadratic case."""
    found = classes(EType.SPLIT, Parabolic.HEISENBERG, CharKind.QUAD_F, HALF, 1)
    assert _partition(found) == {
        canonical_names(EType.SPLIT, ["21324", "21423", "23421", "213421342"]),
        canonical_names(EType.SPLIT, ["21342", "2134213", "2134214", "2134234"]),
        canonical_names(EType.SPLIT, ["213421", "213423", "213424", "21342134"]),
    }


def test_fxk_chi_k_sigma_sets():
    """Test Sigma_2 and Sigma_1 minus Sigma_2 for chi = chi_K."""
    table = sigma_table(EType.FXK, Parabolic.HEISENBERG, CharKind.QUAD_K_NORMTRIVIAL, HALF)
    assert set(_names(table.sigma(2))) == {"2321", "2132", "21321", "21323", "213213", "2132132"}
    exactly_one = set(_names(table.sigma(1))) - set(_names(table.sigma(2)))
    assert exactly_one == {"23", "232", "213"}


def test_fxk_norm_nontrivial_classes():
    """Test three two-element classes and no double poles when chi o Nm != Id."""
    table = sigma_table(EType.FXK, Parabolic.HEISENBERG, CharKind.QUAD_K_NORMNONTRIVIAL, HALF)
    assert table.sigma(2) == []
    assert _partition(table.classes(1)) == {
        frozenset({"2321", "2132132"}),
        frozenset({"2132", "21323"}),
        frozenset({"21321", "213213"}),
    }


def test_p234_classes():
    """Test the five classes of the P_{2,3,4} table at s = 1."""
    found = classes(EType.FXK, Parabolic.P234, CharKind.TRIVIAL, Fraction(1), 0)
    assert _partition(found) == {
        frozenset({"id"}), frozenset({"1"}), frozenset({"12"}), frozenset({"123", "1232"}), frozenset({"12321"}),
    }


def test_class_factorization():
    """Test a two-element class records its length-additive connector."""
    found = classes(EType.CUBIC, Parabolic.HEISENBERG, CharKind.TRIVIAL, HALF, 1)
    pair = next(cls for cls in found if cls.signature == frozenset({"21", "21212"}))
    assert pair.base.name == "21"
    assert pair.factorization.name == "212"
    assert pair.max_order == 1


@pytest.mark.parametrize("base, other, connector", [("21321", "213213", "3"), ("2321", "2132132", "232")])
def test_fxk_class_factorizations(base, other, connector):
    """Test the two-element F x K classes factor through their base."""
    found = classes(EType.FXK, Parabolic.HEISENBERG, CharKind.QUAD_K_NORMNONTRIVIAL, HALF, 1)
    pair = next(cls for cls in found if cls.signature == frozenset({base, other}))
    assert pair.base.name == base
    assert pair.factorization.name == connector
    group = weyl_group(EType.FXK)
    assert words_equal(group.element(base) * pair.factorization, group.element(other))


def test_cancellation_report():
    """Test the w2132 and w21323 poles cancel for chi o Nm != Id."""
    report = pole_report(EType.FXK, CharKind.QUAD_K_NORMNONTRIVIAL, HALF)
    nets = {cls.signature: net for cls, net in zip(report.classes, report.net_orders)}
    assert nets[frozenset({"2132", "21323"})] == 0
    assert nets[frozenset({"2321", "2132132"})] == 1
    data = report.to_json()
    assert data["net_order"] == 1
    assert any(entry["rule"] for entry in data["classes"])


def test_derived_flag():
    """Test the split trivial table at 1/2 is flagged as derived."""
    assert sigma_table(EType.SPLIT, Parabolic.HEISENBERG, CharKind.TRIVIAL, HALF).derived
    assert not sigma_table(EType.CUBIC, Parabolic.HEISENBERG, CharKind.TRIVIAL, HALF).derived
    assert sigma_table(EType.SPLIT, Parabolic.HEISENBERG, CharKind.TRIVIAL, "1/2").to_json()["params"]["derived"]


def test_table_json_lists_classes():
    """Test the JSON table links rows to classes."""
    data = sigma_table(EType.CUBIC, Parabolic.HEISENBERG, CharKind.TRIVIAL, HALF).to_json(1)
    assert {row["word"] for row in data["rows"]} == {"21", "212", "2121", "21212"}
    assert len(data["classes"]) == 2
    assert all(row["class_id"] is not None for row in data["rows"])


def test_rule_cannot_raise_an_order():
    """Test a class-specific rule above the class maximum is an error."""
    found = classes(EType.CUBIC, Parabolic.HEISENBERG, CharKind.QUAD_F, HALF, 1)
    rule = CancellationRule(EType.CUBIC, CharKind.QUAD_F, HALF, 5, "test", found[0].signature)
    with pytest.raises(ValueError):
        rule.apply(found[0])


def test_rules_are_well_formed():
    """Test every recorded rule names a configuration with a compatible character."""
    for rule in RULES:
        assert rule.effect >= 0
        assert any(rule.citation.startswith(source) for source in SOURCES)


def test_class_rule_cites_the_residue_computation():
    """Test the class-specific rule names the computation it comes from."""
    rule = next(r for r in RULES if r.signature is not None)
    assert rule.citation.startswith("F x K residue computation")
    assert "cancel each other" in rule.citation


def test_table_json_round_trip():
    """Test a table rebuilt from its JSON form keeps its rows, Sigma-sets and classes."""
    table = sigma_table(EType.FXK, Parabolic.HEISENBERG, CharKind.QUAD_K_NORMNONTRIVIAL, HALF)
    back = SigmaTable.from_json(table.to_json(0))
    assert [(r.element.name, r.j_order) for r in back.rows] == [(r.element.name, r.j_order) for r in table.rows]
    assert _names(back.sigma(1)) == _names(table.sigma(1))
    assert _partition(back.classes(1)) == _partition(table.classes(1))
    assert back.derived == table.derived
