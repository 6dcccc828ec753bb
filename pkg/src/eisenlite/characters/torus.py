from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple
import sympy

from ..enums import EType, Field, Parabolic
from ..logger import get_logger
from ..roots import (
    AffineWeight,
    WeylElement,
    act,
    apply_matrix,
    build_relative,
    d4,
    length,
    reduce,
    s,
    sort_elements,
    subgroup,
)
from .tags import CharTag, char_tag, check_compatible

# Absolute nodes removed from the Levi for each maximal parabolic.
PARABOLIC_NODES: Dict[Parabolic, Tuple[int, ...]] = {
    Parabolic.HEISENBERG: (2,),
    Parabolic.P234: (1,),
}


def levi_letters(etype: EType, parabolic: Parabolic) -> Tuple[int, ...]:
    """Relative letters generating the Levi of ``parabolic``."""
    datum = build_relative(etype)
    removed = PARABOLIC_NODES[parabolic]
    letter = datum.letter_of_node(removed[0])
    if datum.letter_map[letter - 1] != removed:
        raise ValueError(
            f"Parabolic {parabolic.value!r} is not defined over F for E = {etype.value}: "
            f"node {removed[0]} lies in the Galois orbit {datum.letter_map[letter - 1]}."
        )
    return tuple(l for l in datum.letters if l != letter)


def _levi_rho(parabolic: Parabolic) -> Tuple[Fraction, ...]:
    removed = set(PARABOLIC_NODES[parabolic])
    total = [Fraction(0)] * 4
    for root in d4().positive_roots:
        if any(root.coefficients[node - 1] for node in removed):
            continue
        for i, x in enumerate(root.weight):
            total[i] += Fraction(x, 2)
    return tuple(total)


def _omega(parabolic: Parabolic) -> Tuple[int, ...]:
    removed = PARABOLIC_NODES[parabolic]
    return tuple(1 if i + 1 in removed else 0 for i in range(4))


def lambda_s(parabolic: Parabolic = Parabolic.HEISENBERG, symbol: sympy.Symbol = s) -> AffineWeight:
    """
    s*omega_P + rho_P - rho, the exponent of |det|^s in torus coordinates.

    Example:
        >>> print(lambda_s())
        (-1, s+3/2, -1, -1)
    """
    rho_m = _levi_rho(parabolic)
    omega = _omega(parabolic)
    return AffineWeight(tuple(omega[i] * symbol - _q(rho_m[i]) for i in range(4)))


def eta_s(parabolic: Parabolic = Parabolic.HEISENBERG, symbol: sympy.Symbol = s) -> AffineWeight:
    """s*omega_P - (rho_P - rho); equals (1, s-3/2, 1, 1) for the Heisenberg parabolic."""
    rho_m = _levi_rho(parabolic)
    omega = _omega(parabolic)
    return AffineWeight(tuple(omega[i] * symbol + _q(rho_m[i]) for i in range(4)))


def _q(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class TorusCharacter:
    """
    A character of the maximal torus: |.|^affine times chi^finite.

    ``finite`` is an integer exponent vector in absolute coordinates. It is
    compared modulo the order of chi composed with the norm of each
    coordinate's field, see ``reduced_finite``.
    """
    etype: EType
    tag: CharTag
    affine: AffineWeight
    finite: Tuple[int, int, int, int]

    def __post_init__(self):
        if not self.affine.is_galois_invariant(self.etype):
            raise ValueError(
                f"Affine part {self.affine} is not Galois invariant for E = {self.etype.value}"
            )
        object.__setattr__(self, "finite", tuple(int(x) for x in self.finite))

    def coordinate_field(self, index: int) -> Field:
        datum = build_relative(self.etype)
        return datum.letter_field(datum.letter_of_node(index + 1))

    def reduced_finite(self) -> Tuple[int, int, int, int]:
        out = []
        for i, e in enumerate(self.finite):
            effective = self.tag.order_over(self.coordinate_field(i))
            out.append(e % effective if effective > 1 else 0)
        return tuple(out)

    def at(self, s0) -> "TorusCharacter":
        """Specialize the affine part at ``s0`` (number or mapping)."""
        return TorusCharacter(self.etype, self.tag, self.affine.subs(s0), self.finite)

    def key_at(self, s0) -> Tuple:
        return (self.affine.at(s0), self.reduced_finite())

    def is_trivial_at(self, s0) -> bool:
        return all(v == 0 for v in self.affine.at(s0)) and not any(self.reduced_finite())

    def to_json(self) -> dict:
        datum = build_relative(self.etype)
        reduced = self.reduced_finite()
        finite = {}
        affine = self.affine.to_json()
        for i in range(4):
            finite[f"t{i + 1}"] = reduced[i]
        return {
            "etype": self.etype.value,
            "tag": self.tag.kind.value,
            "finite": finite,
            "affine": affine,
            "relative_coordinates": [list(nodes) for nodes in datum.letter_map],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TorusCharacter":
        etype = EType(data["etype"])
        tag = char_tag(data["tag"])
        finite = tuple(int(data["finite"][f"t{i}"]) for i in range(1, 5))
        return cls(etype, tag, AffineWeight.from_json(data["affine"]), finite)


def _finite_omega(tag: CharTag, parabolic: Parabolic) -> Tuple[int, ...]:
    if tag.is_trivial:
        return (0, 0, 0, 0)
    return _omega(parabolic)


def chi_s(etype: EType, tag, parabolic: Parabolic = Parabolic.HEISENBERG) -> TorusCharacter:
    """
    The inducing character (chi o det) |det|^s of a maximal parabolic.

    Args:
        etype: Etale type of E
        tag: CharTag (or CharKind / its value) of chi
        parabolic: Maximal parabolic; Heisenberg by default

    Returns:
        TorusCharacter with affine part lambda_s and finite part chi o omega_P

    Raises:
        IncompatibleCharacterError: If the tag does not live on ``etype``
    """
    tag = char_tag(tag)
    check_compatible(etype, tag)
    levi_letters(etype, parabolic)
    return TorusCharacter(etype, tag, lambda_s(parabolic), _finite_omega(tag, parabolic))


def chi_tilde(etype: EType, tag) -> TorusCharacter:
    """
    The unitary character chi o (w1 + w2 + w3 + w4) reached from chi_{1/2}
    through the operator attached to w2; its Levi stabilizer governs the
    local quotients at s = 1/2.
    """
    tag = char_tag(tag)
    check_compatible(etype, tag)
    return TorusCharacter(etype, tag, AffineWeight.zero(), (1, 1, 1, 1))


def twist(w: WeylElement, chi: TorusCharacter) -> TorusCharacter:
    """
    w^{-1} . chi: both parts moved by the inverse lattice action.
    """
    _check_same(w, chi)
    inverse = w.inverse()
    return TorusCharacter(
        chi.etype,
        chi.tag,
        act(inverse, chi.affine),
        apply_matrix(inverse.matrix, chi.finite),
    )


def act_character(w: WeylElement, chi: TorusCharacter) -> TorusCharacter:
    """w . chi, the left action (inverse of ``twist``)."""
    _check_same(w, chi)
    return TorusCharacter(chi.etype, chi.tag, act(w, chi.affine), apply_matrix(w.matrix, chi.finite))


def equal_at(chi1: TorusCharacter, chi2: TorusCharacter, s0) -> bool:
    """True iff the affine parts agree at ``s0`` and the finite parts agree mod order."""
    if chi1.etype != chi2.etype:
        raise ValueError(
            f"Characters live on different tori: {chi1.etype.value} vs {chi2.etype.value}"
        )
    if chi1.tag != chi2.tag:
        return False
    return chi1.key_at(s0) == chi2.key_at(s0)


def stabilizer(chi: TorusCharacter, s0, letters: Optional[Iterable[int]] = None) -> List[WeylElement]:
    """
    Elements of the subgroup generated by ``letters`` fixing chi at ``s0``.

    Args:
        chi: The character
        s0: Point at which the affine part is evaluated
        letters: Relative letters generating the subgroup (all letters if None)

    Returns:
        The stabilizer, sorted by length then word
    """
    datum = build_relative(chi.etype)
    letters = datum.letters if letters is None else tuple(letters)
    fixed = [
        w for w in subgroup(chi.etype, letters)
        if equal_at(act_character(w, chi), chi, s0)
    ]
    get_logger().debug(
        f"Stabilizer in <{''.join(map(str, sorted(letters)))}> for {chi.etype.value}: "
        f"{[str(w) for w in fixed]}"
    )
    return sort_elements(fixed)


@dataclass(frozen=True)
class CharacterRatio:
    """(w'^{-1} chi) / (w^{-1} chi) together with the connecting element u = w^{-1} w'."""
    connector: WeylElement
    character: TorusCharacter

    def render(self, s0=None) -> str:
        from .render import render_character
        return render_character(self.character, s0)


def char_ratio(w: WeylElement, w_prime: WeylElement, chi: TorusCharacter) -> CharacterRatio:
    """
    Quotient of the twists by ``w_prime`` and ``w``.

    Raises:
        ValueError: If w' is not w*u with lengths adding up
    """
    _check_same(w, chi)
    _check_same(w_prime, chi)
    u = reduce(w.inverse() * w_prime)
    if length(w_prime) != length(w) + len(u):
        raise ValueError(
            f"{w_prime} is not a length-additive right multiple of {w}: "
            f"l({w_prime}) = {length(w_prime)}, l({w}) + l({u}) = {length(w) + len(u)}"
        )
    upper = twist(w_prime, chi)
    lower = twist(w, chi)
    ratio = TorusCharacter(
        chi.etype,
        chi.tag,
        upper.affine - lower.affine,
        tuple(a - b for a, b in zip(upper.finite, lower.finite)),
    )
    return CharacterRatio(u, ratio)


def _check_same(w: WeylElement, chi: TorusCharacter) -> None:
    if w.etype != chi.etype:
        raise ValueError(
            f"Weyl element {w} acts on {w.etype.value}, character lives on {chi.etype.value}"
        )
