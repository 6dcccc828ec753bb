from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union
import sympy

from ..enums import Field
from ..roots import format_rational, parse_rational

_FIELD_ORDER = {Field.F: 0, Field.K: 1, Field.E: 2}
_KIND_ORDER = {"zeta": 0, "L": 1, "R": 2}
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Generator:
    """
    A free generator of the constant ring.

    kind is "zeta" (value zeta_L(t)), "L" (value L_L(t, psi), psi nontrivial)
    or "R" (residue of zeta_L at 1).
    """
    kind: str
    field: Field
    argument: Optional[Fraction] = None
    character: Optional[str] = None
    quadratic: bool = False

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind],
            _FIELD_ORDER[self.field],
            self.argument if self.argument is not None else Fraction(0),
            self.character or "",
        )

    def canonical(self) -> "Generator":
        if self.argument is None or self.argument >= _HALF:
            return self
        if self.kind == "zeta" or self.quadratic:
            return Generator(self.kind, self.field, 1 - self.argument, self.character, self.quadratic)
        return self

    def render(self) -> str:
        if self.kind == "R":
            return f"R_{self.field.value}"
        arg = format_rational(self.argument)
        if self.kind == "zeta":
            return f"ζ_{self.field.value}({arg})"
        return f"L_{self.field.value}({arg},{self.character})"

    def to_json(self) -> dict:
        data = {"kind": self.kind, "field": self.field.value}
        if self.argument is not None:
            data["argument"] = format_rational(self.argument)
        if self.character is not None:
            data["character"] = self.character
            data["quadratic"] = self.quadratic
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "Generator":
        argument = data.get("argument")
        return cls(
            kind=data["kind"],
            field=Field(data["field"]),
            argument=parse_rational(argument) if argument is not None else None,
            character=data.get("character"),
            quadratic=bool(data.get("quadratic", False)),
        )


Scalar = Union[int, Fraction]


class SymbolicConstant:
    """
    rational scalar x monomial in free generators, with integer exponents.

    Instances are immutable; arithmetic returns new constants.
    """

    __slots__ = ("scalar", "factors")

    def __init__(self, scalar: Scalar = 1, factors: Union[Mapping[Generator, int], Iterable] = ()):
        scalar = Fraction(scalar)
        if scalar == 0:
            raise ValueError("SymbolicConstant must be nonzero")
        items = factors.items() if isinstance(factors, Mapping) else factors
        merged: Dict[Generator, int] = {}
        for generator, exponent in items:
            merged[generator] = merged.get(generator, 0) + int(exponent)
        self.scalar: Fraction = scalar
        self.factors: Tuple[Tuple[Generator, int], ...] = tuple(
            sorted(((g, e) for g, e in merged.items() if e != 0), key=lambda item: item[0].sort_key())
        )

    @classmethod
    def one(cls) -> "SymbolicConstant":
        return cls(1)

    @classmethod
    def residue(cls, field: Field) -> "SymbolicConstant":
        return cls(1, {Generator("R", field): 1})

    @classmethod
    def zeta(cls, field: Field, argument: Scalar) -> "SymbolicConstant":
        return cls(1, {Generator("zeta", field, Fraction(argument)): 1})

    @classmethod
    def lvalue(cls, field: Field, argument: Scalar, character: str, quadratic: bool) -> "SymbolicConstant":
        return cls(1, {Generator("L", field, Fraction(argument), character, quadratic): 1})

    @property
    def is_rational(self) -> bool:
        return not self.factors

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self.render()} is not a rational number")
        return self.scalar

    def _coerce(self, other) -> "SymbolicConstant":
        if isinstance(other, SymbolicConstant):
            return other
        return SymbolicConstant(other)

    def __mul__(self, other) -> "SymbolicConstant":
        other = self._coerce(other)
        return SymbolicConstant(self.scalar * other.scalar, list(self.factors) + list(other.factors))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SymbolicConstant":
        return self * self._coerce(other) ** -1

    def __rtruediv__(self, other) -> "SymbolicConstant":
        return self._coerce(other) * self ** -1

    def __pow__(self, exponent: int) -> "SymbolicConstant":
        exponent = int(exponent)
        return SymbolicConstant(self.scalar ** exponent, [(g, e * exponent) for g, e in self.factors])

    def __neg__(self) -> "SymbolicConstant":
        return SymbolicConstant(-self.scalar, self.factors)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymbolicConstant(other) if other != 0 else None
            if other is None:
                return False
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        return self.scalar == other.scalar and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.scalar, self.factors))

    def canonical(self) -> "SymbolicConstant":
        return SymbolicConstant(self.scalar, [(g.canonical(), e) for g, e in self.factors])

    def render(self) -> str:
        """
        Text in the usual notation, e.g. ``-2^9·3·ζ_F(2)^4·ζ_F(3)·R_F^7``.
        """
        upper: List[str] = []
        lower: List[str] = []
        upper.extend(_factor_integer(abs(self.scalar.numerator)))
        lower.extend(_factor_integer(self.scalar.denominator))
        for generator, exponent in self.factors:
            text = generator.render()
            power = abs(exponent)
            if power != 1:
                text = f"{text}^{power}"
            (upper if exponent > 0 else lower).append(text)

        text = "·".join(upper) if upper else "1"
        if lower:
            below = lower[0] if len(lower) == 1 else f"({'·'.join(lower)})"
            text = f"{text}/{below}"
        return f"-{text}" if self.scalar < 0 else text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymbolicConstant({self.render()!r})"

    def to_json(self) -> dict:
        return {
            "scalar": format_rational(self.scalar),
            "factors": [dict(g.to_json(), exponent=e) for g, e in self.factors],
            "display": self.render(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymbolicConstant":
        factors = [(Generator.from_json(item), int(item["exponent"])) for item in data.get("factors", [])]
        return cls(parse_rational(data["scalar"]), factors)


def _factor_integer(n: int) -> List[str]:
    if n == 1:
        return []
    return [
        str(prime) if power == 1 else f"{prime}^{power}"
        for prime, power in sorted(sympy.factorint(n).items())
    ]
