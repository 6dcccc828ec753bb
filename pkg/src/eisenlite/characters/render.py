from fractions import Fraction
from typing import List, Optional
import sympy

from ..enums import Field
from ..roots import build_relative, format_affine, format_rational, to_fraction
from .torus import TorusCharacter


def _power(exponent) -> str:
    if isinstance(exponent, Fraction):
        magnitude = abs(exponent)
        if magnitude == 1:
            return ""
        if magnitude.denominator == 1:
            return f"^{magnitude.numerator}"
        return f"^({format_rational(magnitude)})"
    return f"^({format_affine(exponent)})"


def render_character(chi: TorusCharacter, s0=None) -> str:
    """
    Render chi in relative torus coordinates t1, t2, ...

    Each relative coordinate reads off the absolute coordinate of the first
    node of its letter; absolute values carry the letter's field subscript.

    Example:
        >>> render_character(twist(w23, chi_K), Fraction(1, 2))
        'χ_K(t1t2)·|t1|_F/|t3|_K'
    """
    datum = build_relative(chi.etype)
    affine = chi.affine if s0 is None else chi.affine.subs(s0)
    reduced = chi.reduced_finite()

    inside: List[str] = []
    normed: List[str] = []
    numerators: List[str] = []
    denominators: List[str] = []

    for letter, nodes in enumerate(datum.letter_map, start=1):
        index = nodes[0] - 1
        field = datum.letter_field(letter)
        coordinate = f"t{letter}"

        k = reduced[index]
        if k:
            text = coordinate if k == 1 else f"{coordinate}^{k}"
            if field == Field.F:
                inside.append(text)
            else:
                normed.append(f"{chi.tag.name}∘Nm({text})")

        value = sympy.expand(affine.coords[index])
        norm = f"|{coordinate}|_{field.value}"
        if value.free_symbols:
            numerators.append(f"{norm}{_power(value)}")
            continue
        exponent = to_fraction(value)
        if exponent > 0:
            numerators.append(f"{norm}{_power(exponent)}")
        elif exponent < 0:
            denominators.append(f"{norm}{_power(exponent)}")

    prefix_parts = []
    if inside:
        prefix_parts.append(f"{chi.tag.name}({''.join(inside)})")
    prefix_parts.extend(normed)
    prefix = "·".join(prefix_parts)

    body = "".join(numerators)
    if denominators:
        below = denominators[0] if len(denominators) == 1 else f"({''.join(denominators)})"
        body = f"{body or '1'}/{below}"

    if not prefix:
        return body or "1"
    if not body:
        return prefix
    if body.startswith("1/"):
        return prefix + body[1:]
    return f"{prefix}·{body}"


def render_weight(chi: TorusCharacter, s0=None) -> Optional[str]:
    """Plain coordinate tuple of the affine part, e.g. ``(1, -2, 1, 1)``."""
    affine = chi.affine if s0 is None else chi.affine.subs(s0)
    return str(affine)
