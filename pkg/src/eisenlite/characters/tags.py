from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional
from ..enums import CharKind, EType, Field
from ..errors import IncompatibleCharacterError


@dataclass(frozen=True)
class CharTag:
    """
    A finite-order Hecke character of F, up to the data the analysis needs.

    Norm-composition behaviour is stored, not recomputed: ``trivial_on_k_norm``
    records chi o Nm_{K/F} = Id and ``trivial_on_e_norm`` records
    chi o Nm_{E/F} = Id for a cubic field E.
    """
    kind: CharKind
    order: int
    name: str
    trivial_on_k_norm: bool
    trivial_on_e_norm: bool

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_quadratic(self) -> bool:
        return self.order == 2

    def order_over(self, field: Field) -> int:
        """Order of chi composed with the norm from ``field``."""
        if field == Field.F:
            return self.order
        if field == Field.K:
            return 1 if self.trivial_on_k_norm else self.order
        return 1 if self.trivial_on_e_norm else self.order

    def atom_label(self, field: Field, exponent: int) -> Optional[str]:
        """
        Name of chi^exponent composed with the norm from ``field``.

        Returns:
            None when that character is trivial, else e.g. "χ", "χ_E^2", "χ∘Nm"
        """
        effective = self.order_over(field)
        power = exponent % effective if effective > 1 else 0
        if power == 0:
            return None
        label = self.name if field == Field.F else f"{self.name}∘Nm"
        if power > 1:
            label = f"{label}^{power}"
        return label


CHAR_TAGS: Dict[CharKind, CharTag] = {
    CharKind.TRIVIAL: CharTag(CharKind.TRIVIAL, 1, "1", True, True),
    CharKind.QUAD_F: CharTag(CharKind.QUAD_F, 2, "χ", False, False),
    CharKind.QUAD_K_NORMTRIVIAL: CharTag(CharKind.QUAD_K_NORMTRIVIAL, 2, "χ_K", True, False),
    CharKind.QUAD_K_NORMNONTRIVIAL: CharTag(CharKind.QUAD_K_NORMNONTRIVIAL, 2, "χ", False, False),
    CharKind.CUBIC_E: CharTag(CharKind.CUBIC_E, 3, "χ_E", False, True),
}

COMPATIBLE_ETYPES: Dict[CharKind, FrozenSet[EType]] = {
    CharKind.TRIVIAL: frozenset(EType),
    CharKind.QUAD_F: frozenset({EType.SPLIT, EType.CUBIC}),
    CharKind.QUAD_K_NORMTRIVIAL: frozenset({EType.FXK}),
    CharKind.QUAD_K_NORMNONTRIVIAL: frozenset({EType.FXK}),
    CharKind.CUBIC_E: frozenset({EType.CUBIC}),
}


def char_tag(kind) -> CharTag:
    """Look up the tag for a CharKind or its string value."""
    if isinstance(kind, CharTag):
        return kind
    if not isinstance(kind, CharKind):
        try:
            kind = CharKind(kind)
        except ValueError:
            raise ValueError(
                f"Invalid character {kind!r}. Must be one of {[k.value for k in CharKind]}."
            ) from None
    return CHAR_TAGS[kind]


def check_compatible(etype: EType, tag: CharTag) -> None:
    allowed = COMPATIBLE_ETYPES[tag.kind]
    if etype not in allowed:
        raise IncompatibleCharacterError(
            f"Character {tag.kind.value!r} does not live on E = {etype.value}. "
            f"It is only defined for {sorted(e.value for e in allowed)}."
        )
