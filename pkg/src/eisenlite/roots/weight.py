from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union
import sympy

from ..enums import EType

s = sympy.Symbol("s")

Number = Union[int, Fraction]


def to_sympy(value) -> sympy.Expr:
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.sympify(value)


def to_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction or constant sympy expression."""
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, sympy.Basic):
        return Fraction(value)
    if value.free_symbols:
        raise ValueError(f"Expression {value} still depends on {sorted(map(str, value.free_symbols))}")
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "p/q" (or "p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" exactly.

    Raises:
        ValueError: If the text is not a rational with nonzero denominator
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Malformed rational {text!r}. Expected 'p/q' with q != 0.") from None


def format_affine(expr) -> str:
    """Compact text for an affine form, e.g. ``s+1/2`` or ``2s2-3``."""
    expr = sympy.expand(to_sympy(expr))
    symbols = sorted(expr.free_symbols, key=lambda x: x.name)
    parts = []
    for sym in symbols:
        coefficient = to_fraction(expr.coeff(sym))
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        body = sym.name if magnitude == 1 else f"{format_rational(magnitude)}{sym.name}"
        sign = "-" if coefficient < 0 else "+"
        parts.append((sign, body))
    constant = to_fraction(expr.subs({sym: 0 for sym in symbols}))
    if constant != 0 or not parts:
        sign = "-" if constant < 0 else "+"
        parts.append((sign, format_rational(abs(constant))))
    text = "".join(f"{sign}{body}" for sign, body in parts)
    return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class AffineWeight:
    """
    A weight whose four absolute coordinates are affine forms.

    Coordinates are in the fundamental-weight basis; the parameters are
    sympy symbols (``s`` for a maximal parabolic, ``s1..s4`` for paths).
    """
    coords: Tuple[sympy.Expr, sympy.Expr, sympy.Expr, sympy.Expr]

    def __post_init__(self):
        if len(self.coords) != 4:
            raise ValueError(f"AffineWeight needs 4 coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(sympy.expand(to_sympy(c)) for c in self.coords))

    @classmethod
    def of(cls, *coords) -> "AffineWeight":
        return cls(tuple(coords))

    @classmethod
    def zero(cls) -> "AffineWeight":
        return cls((0, 0, 0, 0))

    @property
    def symbols(self):
        found = set()
        for c in self.coords:
            found |= c.free_symbols
        return found

    def subs(self, values: Union[Number, Mapping]) -> "AffineWeight":
        if isinstance(values, Mapping):
            mapping = {k: to_sympy(v) for k, v in values.items()}
        else:
            mapping = {sym: to_sympy(values) for sym in self.symbols}
        return AffineWeight(tuple(c.subs(mapping) for c in self.coords))

    def at(self, values: Union[Number, Mapping]) -> Tuple[Fraction, ...]:
        """Evaluate every coordinate to an exact rational."""
        return tuple(to_fraction(c) for c in self.subs(values).coords)

    def coefficient(self, symbol: sympy.Symbol = s) -> Tuple[Fraction, ...]:
        return tuple(to_fraction(c.coeff(symbol)) for c in self.coords)

    def is_galois_invariant(self, etype: EType) -> bool:
        from .folding import GALOIS_PERMUTATIONS
        perm = GALOIS_PERMUTATIONS[etype]
        return all(sympy.expand(self.coords[i] - self.coords[perm[i]]) == 0 for i in range(4))

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(tuple(-a for a in self.coords))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineWeight):
            return NotImplemented
        return all(sympy.expand(a - b) == 0 for a, b in zip(self.coords, other.coords))

    def __hash__(self) -> int:
        return hash(tuple(sympy.srepr(c) for c in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(format_affine(c) for c in self.coords) + ")"

    def to_json(self) -> Dict[str, list]:
        """{coord: [a, b]} per parameter; single-parameter forms only."""
        out = {}
        for i, c in enumerate(self.coords, start=1):
            out[f"t{i}"] = [format_rational(to_fraction(c.coeff(s))), format_rational(to_fraction(c.subs(s, 0)))]
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Sequence[str]]) -> "AffineWeight":
        coords = []
        for i in range(1, 5):
            a, b = data[f"t{i}"]
            coords.append(to_sympy(parse_rational(a)) * s + to_sympy(parse_rational(b)))
        return cls(tuple(coords))
