"""
Root datum, folding and Weyl-word tests.
"""
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from eisenlite import EType, Field
from eisenlite.roots import (
    CARTAN,
    AffineWeight,
    WeylElement,
    act,
    build_relative,
    canonical_names,
    coset_reps,
    d4,
    inversion_set,
    length,
    reduce,
    s,
    subgroup,
    weyl_group,
    words_equal,
)

HALF = sympy.Rational(1, 2)
LAMBDA_S = AffineWeight.of(-1, s + 3 * HALF, -1, -1)


def _labels(pairs):
    return {rel.label for rel, _ in pairs}


def test_cartan_is_simply_laced_star():
    """Test the Cartan matrix links every outer node to node 2 only."""
    for i in range(4):
        for j in range(4):
            if i == j:
                assert CARTAN[i, j] == 2
            elif 1 in (i, j):
                assert CARTAN[i, j] == -1
            else:
                assert CARTAN[i, j] == 0


def test_positive_roots():
    """Test D4 has 12 positive roots, each pairing to 2 with its coroot."""
    datum = d4()
    assert len(datum.positive_roots) == 12
    for root in datum.roots:
        assert root.pairing(root.weight) == 2


@pytest.mark.parametrize("etype, fields, positive", [
    (EType.SPLIT, [Field.F, Field.F, Field.F, Field.F], 12),
    (EType.FXK, [Field.F, Field.F, Field.K], 9),
    (EType.CUBIC, [Field.E, Field.F], 6),
])
def test_folding(etype, fields, positive):
    """Test relative ranks, simple-root fields and root counts of each folding."""
    datum = build_relative(etype)
    assert datum.rank == len(fields)
    assert [r.field for r in datum.relative_simple] == fields
    assert len(datum.relative_positive) == positive


@pytest.mark.parametrize("etype", list(EType))
def test_orbits_partition_positive_roots(etype):
    """Test Galois orbits cover every absolute positive root exactly once."""
    members = [root for rel in build_relative(etype).relative_positive for root in rel.orbit]
    assert len(members) == 12
    assert set(members) == set(d4().positive_roots)


@pytest.mark.parametrize("etype", list(EType))
def test_orbit_members_orthogonal_and_labelled(etype):
    """Test orbit members are mutually orthogonal and the field matches the orbit size."""
    sizes = {Field.F: 1, Field.K: 2, Field.E: 3}
    for rel in build_relative(etype).relative_positive:
        assert len(rel.orbit) == sizes[rel.field]
        for a in rel.orbit:
            for b in rel.orbit:
                if a != b:
                    assert a.pairing(b.weight) == 0


def test_letter_maps():
    """Test relative letters expand to the expected absolute reflections."""
    assert build_relative(EType.CUBIC).letter_map == ((1, 3, 4), (2,))
    assert build_relative(EType.FXK).letter_map == ((1,), (2,), (3, 4))
    assert build_relative(EType.SPLIT).letter_map == ((1,), (2,), (3,), (4,))


@pytest.mark.parametrize("etype, order", [(EType.SPLIT, 192), (EType.FXK, 48), (EType.CUBIC, 12)])
def test_weyl_group_orders(etype, order):
    """Test the closure of the letter matrices has the expected size."""
    assert weyl_group(etype).order == order


def test_act_identity_and_simple_reflection():
    """Test the identity fixes lambda_s and w2 reflects it."""
    identity = WeylElement(EType.SPLIT, ())
    assert act(identity, LAMBDA_S) == LAMBDA_S
    image = act(WeylElement(EType.SPLIT, (2,)), LAMBDA_S)
    assert image == AffineWeight.of(s + HALF, -s - 3 * HALF, s + HALF, s + HALF)


@pytest.mark.parametrize("etype", list(EType))
def test_longest_element_negates_rho(etype):
    """Test the longest element sends rho to -rho."""
    longest = weyl_group(etype).longest()
    assert act(longest, AffineWeight.of(1, 1, 1, 1)) == AffineWeight.of(-1, -1, -1, -1)
    assert len(longest) == len(build_relative(etype).relative_positive)


def test_words_equal_split_factorizations():
    """Test the factorizations of the split four-element classes."""
    group = weyl_group(EType.SPLIT)
    assert words_equal(group.element("213421342"), group.element("21324") * group.element("2132"))
    assert words_equal(group.element("2134234"), group.element("21342") * group.element("34"))
    assert not words_equal(group.element("21342"), group.element("21324"))


def test_canonical_names_of_alternate_spellings():
    """Test alternate reduced spellings map to the smallest reduced word."""
    group = weyl_group(EType.SPLIT)
    spelled = ["213421342", "213424", "21342134", "2134214", "2134234"]
    assert canonical_names(EType.SPLIT, spelled) == frozenset(
        {"213242132", "213242", "21324213", "2132421", "2132423"}
    )
    for word in spelled:
        assert words_equal(group.element(word), reduce(group.element(word)))


@pytest.mark.parametrize("etype, left, right, product", [
    (EType.FXK, "21321", "3", "213213"),
    (EType.FXK, "2321", "232", "2132132"),
    (EType.SPLIT, "213424", "13", "21342134"),
])
def test_length_additive_class_factorizations(etype, left, right, product):
    """Test the connectors of the four-element and two-element classes."""
    group = weyl_group(etype)
    assert words_equal(group.element(left) * group.element(right), group.element(product))
    assert length(group.element(product)) == length(group.element(left)) + length(group.element(right))


@pytest.mark.parametrize("etype", list(EType))
def test_letters_are_involutions(etype):
    """Test w_i * w_i acts as the identity."""
    identity = WeylElement(etype, ())
    for letter in build_relative(etype).letters:
        w = WeylElement(etype, (letter,))
        assert words_equal(w * w, identity)


def test_word_parsing():
    """Test the accepted spellings of Weyl words."""
    assert WeylElement.from_string(EType.CUBIC, "w212") == WeylElement.from_string(EType.CUBIC, "w_212")
    assert WeylElement.from_string(EType.CUBIC, "212") == WeylElement(EType.CUBIC, (2, 1, 2))
    for text in ("", "id", "e", "w"):
        assert len(WeylElement.from_string(EType.FXK, text)) == 0
    assert WeylElement.from_string(EType.FXK, "1").word == (1,)
    assert str(weyl_group(EType.FXK).element("id")) == "id"
    assert str(weyl_group(EType.FXK).element("21")) == "w21"


def test_invalid_words():
    """Test letters outside the relative datum and malformed text are rejected."""
    with pytest.raises(ValueError):
        WeylElement.from_string(EType.CUBIC, "3")
    with pytest.raises(ValueError):
        WeylElement.from_string(EType.SPLIT, "2a1")


def test_reduce_returns_smallest_reduced_word():
    """Test reduction cancels repeated letters and keeps the lexicographic minimum."""
    w = reduce(WeylElement(EType.SPLIT, (1, 2, 2, 3)))
    assert w.word == (1, 3)
    assert length(WeylElement(EType.CUBIC, (1, 2, 1, 2, 1, 2, 1))) == 5


@pytest.mark.parametrize("etype, psi, count", [
    (EType.SPLIT, (1, 3, 4), 24),
    (EType.FXK, (1, 3), 12),
    (EType.CUBIC, (1,), 6),
])
def test_coset_reps_counts(etype, psi, count):
    """Test the Heisenberg coset representatives, identity first."""
    reps = coset_reps(etype, psi)
    assert len(reps) == count
    assert reps[0].word == ()
    assert [len(w) for w in reps] == sorted(len(w) for w in reps)


@pytest.mark.parametrize("etype, psi", [(EType.FXK, (1, 3)), (EType.CUBIC, (1,)), (EType.FXK, (2, 3))])
def test_coset_reps_are_unique_minima(etype, psi):
    """Test each representative is the unique shortest element of its coset and cosets cover W."""
    levi = subgroup(etype, psi)
    covered = set()
    for rep in coset_reps(etype, psi):
        for v in levi:
            product = reduce(v * rep)
            covered.add(product)
            if len(v) > 0:
                assert len(product) > len(rep)
    assert len(covered) == weyl_group(etype).order


def test_inversion_sets_of_short_words():
    """Test the inversion sets of w2 and, over F x K, w21."""
    pairs = inversion_set(weyl_group(EType.FXK).element("2"))
    assert _labels(pairs) == {"0100"}
    pairs = inversion_set(weyl_group(EType.FXK).element("21"))
    assert _labels(pairs) == {"0100", "1100"}
    assert all(field == Field.F for _, field in pairs)


@pytest.mark.parametrize("etype", list(EType))
def test_length_equals_inversion_count(etype):
    """Test every group element's length is the size of its inversion set."""
    for w in weyl_group(etype).elements:
        assert len(inversion_set(w)) == len(w)


def test_inversion_sets_of_length_additive_products():
    """Test N(xy) = N(x) + x N(y) on every length-additive pair of the cubic group."""
    datum = build_relative(EType.CUBIC)
    group = weyl_group(EType.CUBIC)
    checked = 0
    for x in group.elements:
        for y in group.elements:
            product = reduce(x * y)
            if len(product) != len(x) + len(y):
                continue
            moved = set()
            for rel, _ in inversion_set(y):
                image = act(x, AffineWeight(rel.representative.weight))
                root = d4().root_from_weight(tuple(int(c) for c in image.coords))
                moved.add(datum.find(root).label)
            assert _labels(inversion_set(product)) == _labels(inversion_set(x)) | moved
            assert not (_labels(inversion_set(x)) & moved)
            checked += 1
    assert checked > group.order


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=4), max_size=14))
def test_random_words_length_property(word):
    """Test |inversion set| equals reduced length on random split words."""
    w = WeylElement(EType.SPLIT, tuple(word))
    assert len(inversion_set(w)) == len(reduce(w))
    assert length(w) <= len(word)
    assert len(word) % 2 == length(w) % 2
