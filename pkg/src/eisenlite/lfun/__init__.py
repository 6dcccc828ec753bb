from .constant import Generator, SymbolicConstant
from .atoms import TRIVIAL, AtomCharacter, LAtom, LProduct
from .laurent import LaurentData, fe_canonicalize, order_and_leading

__all__ = [
    # Constants
    "Generator",
    "SymbolicConstant",
    # Formal products
    "TRIVIAL",
    "AtomCharacter",
    "LAtom",
    "LProduct",
    # Laurent calculus
    "LaurentData",
    "fe_canonicalize",
    "order_and_leading",
]
