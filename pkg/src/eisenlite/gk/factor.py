from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..characters import TorusCharacter
from ..errors import HolomorphyError
from ..lfun import AtomCharacter, LAtom, LProduct, LaurentData, SymbolicConstant, order_and_leading
from ..logger import get_logger
from ..roots import WeylElement, format_rational, inversion_set, to_fraction

# Normalized local operators are holomorphic for pairings > -1; at exactly -1
# the global factor already vanishes.
HOLOMORPHY_BOUND = Fraction(-1)


@dataclass(frozen=True)
class GKResult:
    """J(w, chi) as a formal product, with its order and leading term at s0."""
    product: LProduct
    order: Optional[int] = None
    leading: Optional[SymbolicConstant] = None

    @property
    def pole_order(self) -> int:
        return -self.order if self.order is not None and self.order < 0 else 0

    def to_json(self) -> dict:
        data = {"product": self.product.render()}
        if self.order is not None:
            data["order"] = self.order
            data["leading"] = self.leading.to_json()
        return data


def _atom_character(chi: TorusCharacter, field, exponent: int) -> AtomCharacter:
    label = chi.tag.atom_label(field, exponent)
    if label is None:
        return AtomCharacter()
    return AtomCharacter(label, chi.tag.is_quadratic)


def gk_product(w: WeylElement, chi: TorusCharacter) -> LProduct:
    """
    prod over inversion roots of L(<lambda, a>, mu o a) / L(<lambda, a> + 1, mu o a).

    The atom character is chi raised to the pairing of the finite exponent
    vector with the coroot, composed with the norm of the root's field.
    """
    if w.etype != chi.etype:
        raise ValueError(
            f"Weyl element {w} acts on {w.etype.value}, character lives on {chi.etype.value}"
        )
    product = LProduct()
    for root, field in inversion_set(w):
        pairing = root.pairing(chi.affine.coords)
        exponent = root.pairing(chi.finite)
        atom = LAtom(field, pairing, _atom_character(chi, field, exponent))
        product = product * LProduct.ratio(atom)
    return product


def check_holomorphy(w: WeylElement, chi: TorusCharacter, s0) -> None:
    """
    Raises:
        HolomorphyError: If some inversion-root pairing is below -1 at s0
    """
    weight = chi.affine.subs(s0).coords
    for root, _ in inversion_set(w):
        value = to_fraction(root.pairing(weight))
        if value < HOLOMORPHY_BOUND:
            raise HolomorphyError(
                f"Operator for {w} is not known to be holomorphic at s0={s0}: "
                f"<lambda, {root.label}> = {format_rational(value)} < -1"
            )


def j_factor(w: WeylElement, chi: TorusCharacter, s0=None, check: bool = True) -> GKResult:
    """
    Global Gindikin-Karpelevich factor J(w, chi).

    Args:
        w: Weyl element over the character's relative datum
        chi: Character, usually chi_s or a twist of it
        s0: Point at which order and leading term are computed (None: product only)
        check: Assert holomorphy of the normalized operators at s0

    Returns:
        GKResult

    Example:
        >>> j_factor(w3, twist(w21321, chi_s(EType.FXK, CharKind.QUAD_K_NORMNONTRIVIAL))).product.render()
        'L_K(s-1/2,χ∘Nm)/L_K(s+1/2,χ∘Nm)'
    """
    product = gk_product(w, chi)
    if s0 is None:
        return GKResult(product)
    if check:
        check_holomorphy(w, chi, s0)
    laurent: LaurentData = order_and_leading(product, s0)
    get_logger().debug(f"J({w}) = {product.render()}; order {laurent.order} at {s0}")
    return GKResult(product, laurent.order, laurent.leading)


def leading_operator_coefficient(w: WeylElement, chi: TorusCharacter, s0) -> SymbolicConstant:
    """Leading coefficient of (s - s0)^(-order) J(w, chi) at s0."""
    return j_factor(w, chi, s0).leading
