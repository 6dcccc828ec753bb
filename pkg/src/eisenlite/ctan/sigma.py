from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from ..characters import (
    CharTag,
    TorusCharacter,
    char_tag,
    chi_s,
    levi_letters,
    render_character,
    twist,
)
from ..enums import CharKind, EType, Parabolic
from ..gk import j_factor
from ..logger import get_logger
from ..roots import WeylElement, coset_reps, format_rational, length, parse_rational, reduce, weyl_group

# Configurations whose Sigma-sets are computed here but not tabulated in print.
DERIVED_CASES = {
    (EType.SPLIT, CharKind.TRIVIAL, Fraction(1, 2)),
}


@dataclass(frozen=True)
class SigmaRow:
    element: WeylElement
    j_order: int
    twisted: TorusCharacter

    @property
    def order(self) -> int:
        """Pole order of the operator; zeros of J count as 0."""
        return max(0, -self.j_order)


@dataclass(frozen=True)
class EquivClass:
    """
    Coset representatives whose twisted characters agree at s0.

    ``connectors`` maps each non-base member to u with member = base * u and
    lengths adding up; ``factorization`` is that u for two-element classes.
    """
    members: Tuple[WeylElement, ...]
    twisted: TorusCharacter
    orders: Tuple[int, ...]
    connectors: Tuple[Tuple[WeylElement, WeylElement], ...] = ()

    @property
    def base(self) -> WeylElement:
        return self.members[0]

    @property
    def max_order(self) -> int:
        return max(self.orders)

    @property
    def factorization(self) -> Optional[WeylElement]:
        if len(self.members) != 2:
            return None
        for member, u in self.connectors:
            if member == self.members[1]:
                return u
        return None

    @property
    def signature(self) -> frozenset:
        return frozenset(w.name for w in self.members)

    def connector(self, member: WeylElement) -> Optional[WeylElement]:
        for other, u in self.connectors:
            if other == member:
                return u
        return None


def _connectors(members: List[WeylElement]) -> Tuple[Tuple[WeylElement, WeylElement], ...]:
    base = members[0]
    out = []
    for member in members[1:]:
        u = reduce(base.inverse() * member)
        if length(member) == length(base) + len(u):
            out.append((member, u))
    return tuple(out)


@dataclass(frozen=True)
class SigmaTable:
    """
    J-orders and twisted characters of every coset representative at s0.
    """
    etype: EType
    parabolic: Parabolic
    tag: CharTag
    s0: Fraction
    rows: Tuple[SigmaRow, ...]

    @property
    def derived(self) -> bool:
        return (self.etype, self.tag.kind, self.s0) in DERIVED_CASES

    def row(self, element: WeylElement) -> SigmaRow:
        for row in self.rows:
            if row.element == element:
                return row
        raise ValueError(f"{element} is not a coset representative of this table")

    def sigma(self, m: int) -> List[WeylElement]:
        return [row.element for row in self.rows if row.order >= m]

    def classes(self, m: int) -> List[EquivClass]:
        buckets: Dict[Tuple, List[SigmaRow]] = {}
        for row in self.rows:
            if row.order >= m:
                buckets.setdefault(row.twisted.key_at(self.s0), []).append(row)
        result = []
        for rows in buckets.values():
            members = [r.element for r in rows]
            result.append(EquivClass(
                members=tuple(members),
                twisted=rows[0].twisted,
                orders=tuple(r.order for r in rows),
                connectors=_connectors(members),
            ))
        return result

    def to_json(self, m: int = 0) -> dict:
        classes = self.classes(m)
        ids = {w: i for i, cls in enumerate(classes) for w in cls.members}
        return {
            "params": {
                "etype": self.etype.value,
                "parabolic": self.parabolic.value,
                "char": self.tag.kind.value,
                "s0": format_rational(self.s0),
                "min_order": m,
                "derived": self.derived,
            },
            "rows": [
                {
                    "word": row.element.name,
                    "order": row.order,
                    "j_order": row.j_order,
                    "twisted_char": row.twisted.to_json(),
                    "twisted_display": render_character(row.twisted, self.s0),
                    "class_id": ids.get(row.element),
                }
                for row in self.rows
                if row.order >= m
            ],
            "classes": [
                {
                    "id": i,
                    "members": [w.name for w in cls.members],
                    "connectors": {w.name: u.name for w, u in cls.connectors},
                }
                for i, cls in enumerate(classes)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SigmaTable":
        params = data["params"]
        etype = EType(params["etype"])
        group = weyl_group(etype)
        rows = tuple(
            SigmaRow(group.element(r["word"]), int(r["j_order"]), TorusCharacter.from_json(r["twisted_char"]))
            for r in data["rows"]
        )
        return cls(etype, Parabolic(params["parabolic"]), char_tag(params["char"]), parse_rational(params["s0"]), rows)


@lru_cache(maxsize=None)
def _table(etype: EType, parabolic: Parabolic, kind: CharKind, s0: Fraction) -> SigmaTable:
    tag = char_tag(kind)
    chi = chi_s(etype, tag, parabolic)
    rows = []
    for w in coset_reps(etype, levi_letters(etype, parabolic)):
        result = j_factor(w, chi, s0)
        rows.append(SigmaRow(w, result.order, twist(w, chi)))
        get_logger().debug(f"Sigma row {w}: J order {result.order}")
    table = SigmaTable(etype, parabolic, tag, s0, tuple(rows))
    if table.derived:
        get_logger().warning(
            f"Sigma-sets for ({etype.value}, {kind.value}, s0={format_rational(s0)}) "
            f"are derived, not tabulated in print"
        )
    return table


def sigma_table(etype: EType, parabolic: Parabolic, tag, s0) -> SigmaTable:
    """
    Build the Sigma table of a maximal parabolic at s0.

    Args:
        etype: Etale type of E
        parabolic: Maximal parabolic (Heisenberg or P_{2,3,4})
        tag: Character tag or kind
        s0: Evaluation point (Fraction or "p/q")

    Returns:
        SigmaTable with one row per coset representative
    """
    s0 = parse_rational(s0) if isinstance(s0, str) else Fraction(s0)
    return _table(etype, parabolic, char_tag(tag).kind, s0)


def sigma(etype: EType, parabolic: Parabolic, tag, s0, m: int) -> List[WeylElement]:
    """Coset representatives whose operator has pole order >= m at s0."""
    return sigma_table(etype, parabolic, tag, s0).sigma(m)


def classes(etype: EType, parabolic: Parabolic, tag, s0, m: int) -> List[EquivClass]:
    """Partition of sigma(...) by equality of twisted characters at s0."""
    return sigma_table(etype, parabolic, tag, s0).classes(m)
