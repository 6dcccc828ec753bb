from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union
import sympy

from ..errors import LaurentError
from ..logger import get_logger
from ..roots import format_rational, parse_rational, to_fraction, to_sympy
from .atoms import LAtom, LProduct
from .constant import SymbolicConstant


@dataclass(frozen=True)
class LaurentData:
    """Vanishing order (poles negative) and leading coefficient at a point."""
    order: int
    leading: SymbolicConstant

    def to_json(self) -> dict:
        return {"order": self.order, "leading": self.leading.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentData":
        return cls(int(data["order"]), SymbolicConstant.from_json(data["leading"]))


def fe_canonicalize(c: SymbolicConstant) -> SymbolicConstant:
    """
    Move zeta values and quadratic L-values to arguments >= 1/2 via t <-> 1-t.

    Cubic-character L-values are left alone.

    Example:
        >>> fe_canonicalize(SymbolicConstant.lvalue(Field.F, 0, "χ", True) / SymbolicConstant.lvalue(Field.F, 1, "χ", True))
        SymbolicConstant('1')
    """
    return c.canonical()


Point = Union[int, Fraction, str, Mapping]


def _resolve_point(product: LProduct, s0: Point) -> Dict[sympy.Symbol, Fraction]:
    symbols = sorted(product.symbols, key=lambda x: x.name)
    if isinstance(s0, Mapping):
        point = {}
        by_name = {str(k): v for k, v in s0.items()}
        for sym in symbols:
            if sym.name not in by_name:
                raise ValueError(
                    f"No value given for parameter {sym.name}. Got values for {sorted(by_name)}."
                )
            point[sym] = _as_fraction(by_name[sym.name])
        return point
    if s0 is None:
        if symbols:
            raise ValueError(f"A point is required for a product in {[x.name for x in symbols]}")
        return {}
    if len(symbols) > 1:
        raise ValueError(
            f"Product depends on {[x.name for x in symbols]}; pass a mapping of parameter values."
        )
    return {sym: _as_fraction(s0) for sym in symbols}


def _as_fraction(value) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    return to_fraction(value)


@dataclass
class _Local:
    """A factor written as k*(u - u0) + t0 in its group variable u."""
    slope: Fraction
    value: Fraction


def _direction(expr: sympy.Expr, point) -> Tuple[Optional[Tuple], _Local]:
    symbols = sorted(expr.free_symbols, key=lambda x: x.name)
    value = to_fraction(expr.subs(point)) if symbols else to_fraction(expr)
    if not symbols:
        return None, _Local(Fraction(1), value)
    coefficients = []
    for sym in symbols:
        coefficient = expr.coeff(sym)
        if coefficient.free_symbols:
            raise LaurentError(f"Argument {expr} is not affine in {sym.name}")
        coefficients.append((sym.name, to_fraction(coefficient)))
    lead = coefficients[0][1]
    key = tuple((name, c / lead) for name, c in coefficients)
    return key, _Local(lead, value)


def _atom_term(atom: LAtom, local: _Local) -> Tuple[int, SymbolicConstant]:
    t0 = local.value
    if atom.character.is_trivial:
        if t0 == 1:
            return -1, SymbolicConstant.residue(atom.field) / local.slope
        if t0 == 0:
            return -1, -SymbolicConstant.residue(atom.field) / local.slope
        return 0, SymbolicConstant.zeta(atom.field, t0)
    return 0, SymbolicConstant.lvalue(atom.field, t0, atom.character.label, atom.character.quadratic)


def _poly_term(local: _Local) -> Tuple[int, SymbolicConstant]:
    if local.value == 0:
        return 1, SymbolicConstant(local.slope)
    return 0, SymbolicConstant(local.value)


def order_and_leading(product: LProduct, s0: Point = None) -> LaurentData:
    """
    Order and leading coefficient of a product of L-atoms at a point.

    Factors are grouped by the direction of their linear part. A product in
    one direction is a univariate Laurent series. Several directions are
    only accepted when every group is holomorphic and nonvanishing, so the
    limit does not depend on how the point is approached. Factors with a
    constant argument form their own group in a fresh variable t -> 0
    (argument t + c) and must balance to order 0.

    Args:
        product: The formal product
        s0: Rational value of the single parameter, or a mapping name -> value

    Returns:
        LaurentData with fe-canonicalized leading coefficient

    Raises:
        LaurentError: If the product does not factor into independent pieces
    """
    point = _resolve_point(product, s0)
    groups: Dict[Optional[Tuple], List[Tuple[int, SymbolicConstant]]] = {}

    for atom, exponent in product.atoms:
        key, local = _direction(atom.argument, point)
        order, leading = _atom_term(atom, local)
        groups.setdefault(key, []).append((order * exponent, leading ** exponent))

    for poly, exponent in product.polys:
        key, local = _direction(poly, point)
        order, leading = _poly_term(local)
        groups.setdefault(key, []).append((order * exponent, leading ** exponent))

    orders = {key: sum(o for o, _ in terms) for key, terms in groups.items()}
    directions = [key for key in groups if key is not None]

    if orders.get(None, 0) != 0:
        raise LaurentError(
            f"Constant factors of {product.render()} have net order {orders[None]}; "
            f"the value is not defined."
        )
    if len(directions) > 1 and any(orders[key] != 0 for key in directions):
        detail = ", ".join(f"{_describe(key)}: {orders[key]}" for key in directions)
        raise LaurentError(
            f"Product {product.render()} does not factor into independent limits "
            f"(orders by direction: {detail})"
        )

    leading = SymbolicConstant(product.scalar)
    for terms in groups.values():
        for _, factor in terms:
            leading = leading * factor
    total = sum(orders[key] for key in directions)
    leading = fe_canonicalize(leading)
    get_logger().debug(
        f"order_and_leading({product.render()}) at {_describe_point(point)}: "
        f"order={total}, leading={leading.render()}"
    )
    return LaurentData(total, leading)


def _describe(key: Tuple) -> str:
    return "+".join(
        name if c == 1 else f"{format_rational(c)}{name}" for name, c in key
    )


def _describe_point(point: Mapping) -> str:
    if not point:
        return "constant"
    return ", ".join(f"{sym.name}={format_rational(v)}" for sym, v in point.items())
