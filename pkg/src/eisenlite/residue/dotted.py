from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Mapping, Optional, Tuple

from ..enums import LocalAlgebra
from ..errors import InadmissiblePlaceError
from ..roots import format_rational
from .local import LocalQuotientTag, PlaceProfile


@dataclass(frozen=True)
class DottedPlaceSet:
    """
    A finite set of places, each carrying a non-spherical local quotient.

    Places absent from the set carry their spherical quotient.
    """
    s0: Fraction
    assignments: Tuple[Tuple[PlaceProfile, LocalQuotientTag], ...] = ()

    def __post_init__(self):
        ids = [place.id for place, _ in self.assignments]
        if len(set(ids)) != len(ids):
            raise InadmissiblePlaceError(f"Place listed twice in dotted set: {ids}")
        for place, tag in self.assignments:
            if tag.spherical:
                raise InadmissiblePlaceError(
                    f"Place {place.id} carries the spherical quotient {tag.label}; "
                    f"dotted sets only list non-spherical places"
                )
            if tag not in place.quotients(self.s0):
                raise InadmissiblePlaceError(
                    f"{tag.label} is not a quotient at place {place.id} "
                    f"({place.local_algebra.value}, {place.local_char.value}) "
                    f"for s0={format_rational(self.s0)}"
                )
        ordered = tuple(sorted(self.assignments, key=lambda item: item[0].id))
        object.__setattr__(self, "assignments", ordered)

    @classmethod
    def build(cls, s0, labels: Mapping[PlaceProfile, str]) -> "DottedPlaceSet":
        """
        Resolve quotient labels to tags.

        Example:
            >>> v = PlaceProfile("v1", LocalAlgebra.INERT_FIELD, LocalChar.TRIVIAL)
            >>> DottedPlaceSet.build("1/2", {v: "π_-2"}).size
            1
        """
        s0 = Fraction(s0)
        return cls(s0, tuple((place, place.tag(label, s0)) for place, label in labels.items()))

    @classmethod
    def empty(cls, s0) -> "DottedPlaceSet":
        return cls(Fraction(s0))

    @property
    def size(self) -> int:
        return len(self.assignments)

    @property
    def is_empty(self) -> bool:
        return not self.assignments

    def places(self) -> List[PlaceProfile]:
        return [place for place, _ in self.assignments]

    def tags(self) -> List[LocalQuotientTag]:
        return [tag for _, tag in self.assignments]

    def count(self, label: str, local_algebra: Optional[LocalAlgebra] = None) -> int:
        return sum(
            1
            for place, tag in self.assignments
            if tag.label == label and (local_algebra is None or place.local_algebra == local_algebra)
        )

    def eigenvalue(self, operator: Optional[str]) -> Fraction:
        """Product over the set of the local eigenvalues of one operator."""
        value = Fraction(1)
        if operator is None:
            return value
        for _, tag in self.assignments:
            value *= tag.eigenvalue(operator)
        return value

    def __str__(self) -> str:
        if not self.assignments:
            return "{}"
        return "{" + ", ".join(f"{place.id}:{tag.label}" for place, tag in self.assignments) + "}"

    def to_json(self) -> dict:
        return {
            "s0": format_rational(self.s0),
            "places": [
                dict(place.to_json(), tag=tag.label) for place, tag in self.assignments
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping, profiles: Optional[Iterable[PlaceProfile]] = None) -> "DottedPlaceSet":
        known = {p.id: p for p in profiles or ()}
        labels = {}
        for item in data["places"]:
            place = known.get(item["id"]) or PlaceProfile.from_json(
                {k: v for k, v in item.items() if k != "tag"}
            )
            labels[place] = item["tag"]
        return cls.build(Fraction(data["s0"]), labels)
