from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Tuple
import sympy

from ..enums import EType
from ..lfun import LAtom, LProduct, SymbolicConstant, order_and_leading
from ..logger import get_logger
from ..roots import AffineWeight, WeylElement, act, build_relative, format_affine, format_rational, to_sympy, weyl_group

S1, S2, S3, S4 = sympy.symbols("s1 s2 s3 s4")


@dataclass(frozen=True)
class WeightPath:
    """
    A weight lambda(params) in relative fundamental-weight coordinates,
    approached at ``target``.

    Example:
        >>> print(WeightPath(EType.FXK, (-1, S2, -1), {"s2": 2}).absolute())
        (-1, s2, -1, -1)
    """
    etype: EType
    coords: Tuple[sympy.Expr, ...]
    target: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        datum = build_relative(self.etype)
        if len(self.coords) != datum.rank:
            raise ValueError(
                f"Path for {self.etype.value} needs {datum.rank} relative coordinates, "
                f"got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(sympy.expand(to_sympy(c)) for c in self.coords))
        object.__setattr__(self, "target", {str(k): Fraction(v) for k, v in dict(self.target).items()})
        missing = sorted(sym.name for sym in self.symbols if sym.name not in self.target)
        if missing:
            raise ValueError(f"Path target gives no value for {missing}")
        symbols = self.symbols
        for expr in self.coords:
            if symbols and sympy.Poly(expr, *symbols).total_degree() > 1:
                raise ValueError(f"Path coordinate {expr} is not affine in its parameters")

    def __hash__(self) -> int:
        return hash((self.etype, self.coords, tuple(sorted(self.target.items()))))

    @property
    def symbols(self) -> Tuple[sympy.Symbol, ...]:
        found = set()
        for expr in self.coords:
            found |= expr.free_symbols
        return tuple(sorted(found, key=lambda x: x.name))

    def absolute(self) -> AffineWeight:
        """Spread each letter's coordinate over the nodes of its Galois orbit."""
        datum = build_relative(self.etype)
        values = [0, 0, 0, 0]
        for letter, nodes in enumerate(datum.letter_map):
            for node in nodes:
                values[node - 1] = self.coords[letter]
        return AffineWeight(tuple(values))

    def at_target(self) -> AffineWeight:
        return self.absolute().subs(self.target)

    def __str__(self) -> str:
        coords = ", ".join(format_affine(c) for c in self.coords)
        target = ", ".join(f"{k}→{format_rational(v)}" for k, v in sorted(self.target.items()))
        return f"λ({coords})" + (f" as {target}" if target else "")


def normalization_product(etype: EType, path: WeightPath) -> LProduct:
    """
    prod over relative positive roots of zeta_{F_a}(<lambda, a> + 1)(<lambda, a> - 1)(<lambda, a> + 1).

    Example:
        >>> normalization_product(EType.SPLIT, WeightPath(EType.SPLIT, (S1, S2, S3, S4))).count_atoms()
        12
    """
    if path.etype != etype:
        raise ValueError(f"Path lives on {path.etype.value}, not on {etype.value}")
    weight = path.absolute()
    atoms = []
    polys = []
    for rel in build_relative(etype).relative_positive:
        pairing = sympy.expand(rel.pairing(weight.coords))
        atoms.append((LAtom(rel.field, pairing + 1), 1))
        polys.append((pairing - 1, 1))
        polys.append((pairing + 1, 1))
    return LProduct(atoms, polys)


def leading_constant(etype: EType, path: WeightPath, known_series_order: int) -> SymbolicConstant:
    """
    Constant c with E^sharp(lambda_target) = c * (leading term of the series).

    The series along the path has a pole of order ``known_series_order``; the
    prefactor must vanish to exactly that order.

    Raises:
        LaurentError: If the prefactor does not factor at the target
        ValueError: If the prefactor order differs from ``known_series_order``
    """
    product = normalization_product(etype, path)
    laurent = order_and_leading(product, path.target)
    if laurent.order != known_series_order:
        raise ValueError(
            f"Prefactor along {path} vanishes to order {laurent.order}, "
            f"expected {known_series_order} to balance the series"
        )
    get_logger().debug(f"Leading constant along {path}: {laurent.leading.render()}")
    return laurent.leading


def invariance_witness(etype: EType, weight: AffineWeight, other: AffineWeight) -> Optional[WeylElement]:
    """
    A relative Weyl element w with w . weight = other, or None.

    Example:
        >>> invariance_witness(EType.SPLIT, AffineWeight.of(-1, 2, -1, -1), AffineWeight.of(-1, -1, 1, 1)) is not None
        True
    """
    for w in (weight, other):
        if not w.is_galois_invariant(etype):
            raise ValueError(f"Weight {w} is not Galois invariant for {etype.value}")
    for w in weyl_group(etype).elements:
        if act(w, weight) == other:
            return w
    return None
