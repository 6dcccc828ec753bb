from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..characters import TorusCharacter, act_character, equal_at, render_character
from ..logger import get_logger
from ..roots import WeylElement, format_rational, sort_elements, weyl_group


@dataclass(frozen=True)
class MultiplicityQuery:
    """
    How often ``target`` occurs among the exponents w . inducing, w in scope.

    With ``scope`` None the full relative Weyl group is used; that count is the
    multiplicity of ``target`` in the semisimplified Jacquet module of the
    principal series induced from ``inducing``.
    """
    inducing: TorusCharacter
    target: TorusCharacter
    s0: Fraction
    scope: Optional[Tuple[WeylElement, ...]] = None

    def __post_init__(self):
        if self.inducing.etype != self.target.etype:
            raise ValueError(
                f"Inducing character lives on {self.inducing.etype.value}, "
                f"target on {self.target.etype.value}"
            )
        object.__setattr__(self, "s0", Fraction(self.s0))
        if self.scope is not None:
            object.__setattr__(self, "scope", tuple(self.scope))

    def elements(self) -> Sequence[WeylElement]:
        if self.scope is None:
            return weyl_group(self.inducing.etype).elements
        return self.scope


def multiplicity(query: MultiplicityQuery) -> int:
    """
    Number of w in the scope with w . inducing = target at s0.

    Example:
        >>> chi = chi_s(EType.FXK, CharKind.QUAD_K_NORMTRIVIAL)
        >>> multiplicity(MultiplicityQuery(chi, chi, Fraction(1, 2)))
        2
    """
    count = sum(
        1 for w in query.elements()
        if equal_at(act_character(w, query.inducing), query.target, query.s0)
    )
    get_logger().debug(
        f"Multiplicity of {render_character(query.target, query.s0)} "
        f"at s0={format_rational(query.s0)}: {count}"
    )
    return count


@dataclass(frozen=True)
class OrbitEntry:
    character: TorusCharacter
    multiplicity: int
    elements: Tuple[WeylElement, ...]

    def to_json(self, s0) -> dict:
        return {
            "character": render_character(self.character, s0),
            "multiplicity": self.multiplicity,
            "elements": [w.name for w in self.elements],
        }


def orbit_table(inducing: TorusCharacter, s0, scope: Optional[Sequence[WeylElement]] = None) -> List[OrbitEntry]:
    """
    The distinct exponents w . inducing at s0 with their multiplicities.

    Multiplicities add up to the size of the scope.
    """
    s0 = Fraction(s0)
    elements = weyl_group(inducing.etype).elements if scope is None else list(scope)
    buckets: Dict[Tuple, List[WeylElement]] = {}
    first: Dict[Tuple, TorusCharacter] = {}
    for w in elements:
        image = act_character(w, inducing)
        key = image.key_at(s0)
        buckets.setdefault(key, []).append(w)
        first.setdefault(key, image.at(s0))
    table = [
        OrbitEntry(first[key], len(members), tuple(sort_elements(members)))
        for key, members in buckets.items()
    ]
    get_logger().info(
        f"Orbit of size {len(table)} over {len(elements)} elements at s0={format_rational(s0)}"
    )
    return table
