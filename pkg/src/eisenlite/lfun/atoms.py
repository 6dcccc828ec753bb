from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union
import sympy

from ..enums import Field
from ..roots import format_affine, to_sympy

_FIELD_ORDER = {Field.F: 0, Field.K: 1, Field.E: 2}


@dataclass(frozen=True)
class AtomCharacter:
    """Character of an L-atom; ``label`` None means the trivial character."""
    label: Optional[str] = None
    quadratic: bool = False

    @property
    def is_trivial(self) -> bool:
        return self.label is None


TRIVIAL = AtomCharacter()


@dataclass(frozen=True)
class LAtom:
    """A completed L-function L_field(argument, character)."""
    field: Field
    argument: sympy.Expr
    character: AtomCharacter = TRIVIAL

    def __post_init__(self):
        object.__setattr__(self, "argument", sympy.expand(to_sympy(self.argument)))

    def shifted(self, amount) -> "LAtom":
        return LAtom(self.field, self.argument + to_sympy(amount), self.character)

    def sort_key(self):
        return (_FIELD_ORDER[self.field], self.character.label or "", sympy.srepr(self.argument))

    def render(self) -> str:
        arg = format_affine(self.argument)
        if self.character.is_trivial:
            return f"ζ_{self.field.value}({arg})"
        return f"L_{self.field.value}({arg},{self.character.label})"


Factor = Tuple[object, int]


class LProduct:
    """
    scalar x product of L-atoms and affine polynomial factors, with integer exponents.

    Equal atoms and equal polynomial factors are merged; zero exponents are dropped.
    """

    __slots__ = ("atoms", "polys", "scalar")

    def __init__(
        self,
        atoms: Iterable[Factor] = (),
        polys: Iterable[Factor] = (),
        scalar: Union[int, Fraction] = 1,
    ):
        merged_atoms: Dict[LAtom, int] = {}
        for atom, exponent in atoms:
            merged_atoms[atom] = merged_atoms.get(atom, 0) + int(exponent)
        merged_polys: Dict[sympy.Expr, int] = {}
        for poly, exponent in polys:
            poly = sympy.expand(to_sympy(poly))
            merged_polys[poly] = merged_polys.get(poly, 0) + int(exponent)
        self.atoms: Tuple[Tuple[LAtom, int], ...] = tuple(
            sorted(((a, e) for a, e in merged_atoms.items() if e), key=lambda item: item[0].sort_key())
        )
        self.polys: Tuple[Tuple[sympy.Expr, int], ...] = tuple(
            sorted(((p, e) for p, e in merged_polys.items() if e), key=lambda item: sympy.srepr(item[0]))
        )
        self.scalar = Fraction(scalar)

    @classmethod
    def ratio(cls, atom: LAtom) -> "LProduct":
        """L(x)/L(x+1), the rank-one Gindikin-Karpelevich factor."""
        return cls([(atom, 1), (atom.shifted(1), -1)])

    @property
    def symbols(self):
        found = set()
        for atom, _ in self.atoms:
            found |= atom.argument.free_symbols
        for poly, _ in self.polys:
            found |= poly.free_symbols
        return found

    def __mul__(self, other: "LProduct") -> "LProduct":
        return LProduct(self.atoms + other.atoms, self.polys + other.polys, self.scalar * other.scalar)

    def __pow__(self, exponent: int) -> "LProduct":
        return LProduct(
            [(a, e * exponent) for a, e in self.atoms],
            [(p, e * exponent) for p, e in self.polys],
            self.scalar ** exponent,
        )

    def __truediv__(self, other: "LProduct") -> "LProduct":
        return self * other ** -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, LProduct):
            return NotImplemented
        return self.atoms == other.atoms and self.polys == other.polys and self.scalar == other.scalar

    def __hash__(self) -> int:
        return hash((self.atoms, self.polys, self.scalar))

    def __len__(self) -> int:
        return len(self.atoms) + len(self.polys)

    def count_atoms(self, field: Optional[Field] = None) -> int:
        return sum(abs(e) for a, e in self.atoms if field is None or a.field == field)

    def render(self) -> str:
        """
        Displayed fraction, e.g. ``L_K(s-1/2,χ∘Nm)/L_K(s+1/2,χ∘Nm)``.
        """
        upper: List[str] = []
        lower: List[str] = []
        if self.scalar.numerator != 1 and self.scalar.numerator != -1:
            upper.append(str(abs(self.scalar.numerator)))
        if self.scalar.denominator != 1:
            lower.append(str(self.scalar.denominator))
        for poly, exponent in self.polys:
            text = f"({format_affine(poly)})"
            _place(text, exponent, upper, lower)
        for atom, exponent in self.atoms:
            _place(atom.render(), exponent, upper, lower)

        text = "·".join(upper) if upper else "1"
        if lower:
            below = lower[0] if len(lower) == 1 else f"({'·'.join(lower)})"
            text = f"{text}/{below}"
        return f"-{text}" if self.scalar < 0 else text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LProduct({self.render()!r})"


def _place(text: str, exponent: int, upper: List[str], lower: List[str]) -> None:
    power = abs(exponent)
    if power != 1:
        text = f"{text}^{power}"
    (upper if exponent > 0 else lower).append(text)
