import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from ..enums import LocalAlgebra, LocalChar
from ..errors import InadmissiblePlaceError
from ..roots import format_rational

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)
FIVE_HALVES = Fraction(5, 2)
POINTS = (HALF, THREE_HALVES, FIVE_HALVES)

# (local algebra, local character) pairs that occur; a cubic field has no
# quadratic character trivial on its norms, and chi o Nm_{K/F} = Id forces a
# nontrivial chi only when K is a field.
ADMISSIBLE = frozenset({
    (LocalAlgebra.INERT_FIELD, LocalChar.TRIVIAL),
    (LocalAlgebra.INERT_FIELD, LocalChar.QUAD_NORMNONTRIVIAL),
    (LocalAlgebra.FXK_FIELD, LocalChar.TRIVIAL),
    (LocalAlgebra.FXK_FIELD, LocalChar.QUAD_NORMTRIVIAL),
    (LocalAlgebra.FXK_FIELD, LocalChar.QUAD_NORMNONTRIVIAL),
    (LocalAlgebra.SPLIT, LocalChar.TRIVIAL),
    (LocalAlgebra.SPLIT, LocalChar.QUAD_NORMNONTRIVIAL),
})


@dataclass(frozen=True)
class LocalQuotientTag:
    """
    An irreducible quotient of the local degenerate principal series.

    ``eigenvalues`` lists the scalars by which the normalized operators
    (named by absolute words, e.g. "212", "34", "13") act on it. The
    split-place quotients also carry "flip1", "flip3", "flip4": the sign of
    the node whose sign differs from the other two in their restriction to
    the torus of the Levi.
    """
    label: str
    eigenvalues: Tuple[Tuple[str, Fraction], ...]
    spherical: bool

    def eigenvalue(self, operator: str) -> Fraction:
        if self.spherical:
            return Fraction(1)
        for name, value in self.eigenvalues:
            if name == operator:
                return value
        raise InadmissiblePlaceError(
            f"Operator {operator!r} has no eigenvalue on {self.label}. "
            f"Known operators: {[name for name, _ in self.eigenvalues]}."
        )

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "spherical": self.spherical,
            "eigenvalues": {name: format_rational(v) for name, v in self.eigenvalues},
        }


def _tag(label: str, spherical: bool = False, **eigenvalues) -> LocalQuotientTag:
    ordered = tuple(sorted((name.lstrip("w"), Fraction(v)) for name, v in eigenvalues.items()))
    return LocalQuotientTag(label, ordered, spherical)


def _split_tag(epsilon: int, delta: int) -> LocalQuotientTag:
    return _tag(
        f"π_({epsilon},{delta})",
        spherical=(epsilon, delta) == (1, 1),
        w13=epsilon,
        w14=delta,
        w34=epsilon * delta,
        w2342=epsilon * delta,
        flip4=-1 if (epsilon, delta) == (1, -1) else 1,
        flip3=-1 if (epsilon, delta) == (-1, 1) else 1,
        flip1=-1 if (epsilon, delta) == (-1, -1) else 1,
    )


_AT_HALF: Dict[Tuple[LocalAlgebra, LocalChar], List[LocalQuotientTag]] = {
    (LocalAlgebra.INERT_FIELD, LocalChar.TRIVIAL): [
        _tag("π_1", spherical=True, w212=1),
        _tag("π_-2", w212=-2),
    ],
    (LocalAlgebra.FXK_FIELD, LocalChar.QUAD_NORMNONTRIVIAL): [
        _tag("π_1", spherical=True, w34=1, w2342=1),
        _tag("π_-1", w34=-1, w2342=-1),
    ],
    (LocalAlgebra.SPLIT, LocalChar.QUAD_NORMNONTRIVIAL): [
        _split_tag(1, 1),
        _split_tag(1, -1),
        _split_tag(-1, 1),
        _split_tag(-1, -1),
    ],
}


def check_admissible(local_algebra: LocalAlgebra, local_char: LocalChar) -> None:
    if (local_algebra, local_char) not in ADMISSIBLE:
        raise InadmissiblePlaceError(
            f"Inadmissible place type ({local_algebra.value}, {local_char.value}). "
            f"Admissible pairs: {sorted((a.value, c.value) for a, c in ADMISSIBLE)}."
        )


def local_quotients(local_algebra: LocalAlgebra, local_char: LocalChar, s0) -> List[LocalQuotientTag]:
    """
    Irreducible quotients of the local degenerate principal series at s0.

    Lengths at s0 = 1/2 are 2 for a cubic field with trivial chi, 2 for
    F x K with chi o Nm != Id, 4 at split places with chi != Id, and 1
    otherwise. At 3/2 and 5/2 the quotient is unique.

    Raises:
        InadmissiblePlaceError: If the place type does not occur
        ValueError: If s0 is not one of 1/2, 3/2, 5/2
    """
    check_admissible(local_algebra, local_char)
    s0 = Fraction(s0)
    if s0 not in POINTS:
        raise ValueError(
            f"Invalid s0 {format_rational(s0)}. Local quotients are tabulated at "
            f"{[format_rational(p) for p in POINTS]}."
        )
    if s0 == FIVE_HALVES:
        return [_tag("trivial", spherical=True)]
    if s0 == HALF and (local_algebra, local_char) in _AT_HALF:
        return list(_AT_HALF[(local_algebra, local_char)])
    return [_tag("π_1", spherical=True)]


@dataclass(frozen=True)
class PlaceProfile:
    """An abstract place with its local algebra and local character type."""
    id: str
    local_algebra: LocalAlgebra
    local_char: LocalChar

    def __post_init__(self):
        check_admissible(self.local_algebra, self.local_char)

    def quotients(self, s0) -> List[LocalQuotientTag]:
        return local_quotients(self.local_algebra, self.local_char, s0)

    def tag(self, label: str, s0) -> LocalQuotientTag:
        for tag in self.quotients(s0):
            if tag.label == label:
                return tag
        raise InadmissiblePlaceError(
            f"Place {self.id} ({self.local_algebra.value}, {self.local_char.value}) has no "
            f"quotient {label!r} at s0={format_rational(Fraction(s0))}. "
            f"Available: {[t.label for t in self.quotients(s0)]}."
        )

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "local_algebra": self.local_algebra.value,
            "local_char": self.local_char.value,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PlaceProfile":
        unknown = set(data) - {"id", "local_algebra", "local_char"}
        if unknown:
            raise ValueError(f"Unknown place-profile fields: {sorted(unknown)}")
        try:
            algebra = LocalAlgebra(data["local_algebra"])
            char = LocalChar(data["local_char"])
        except (KeyError, ValueError) as exc:
            raise ValueError(f"Malformed place profile {dict(data)}: {exc}") from None
        return cls(str(data["id"]), algebra, char)


def load_profiles(path: str) -> List[PlaceProfile]:
    """
    Read a place-profile file: a JSON list of {id, local_algebra, local_char}.

    Raises:
        OSError: If the file cannot be read
        ValueError: On malformed content or duplicate ids
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Place-profile file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValueError(f"Place-profile file {path} must contain a JSON list")
    profiles = [PlaceProfile.from_json(item) for item in data]
    ids = [p.id for p in profiles]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        raise ValueError(f"Duplicate place ids in {path}: {duplicates}")
    return profiles
