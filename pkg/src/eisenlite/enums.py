from enum import Enum

class EType(Enum):
    """Isomorphism class of the etale cubic algebra E over F."""
    SPLIT = "split"
    FXK = "fxk"
    CUBIC = "cubic"

class Field(Enum):
    """Field of definition attached to a Galois orbit of roots."""
    F = "F"
    K = "K"
    E = "E"

class CharKind(Enum):
    TRIVIAL = "trivial"
    QUAD_F = "quad"
    QUAD_K_NORMTRIVIAL = "quad-k-normtrivial"
    QUAD_K_NORMNONTRIVIAL = "quad-k-normnontrivial"
    CUBIC_E = "cubic-e"

class Parabolic(Enum):
    HEISENBERG = "heisenberg"
    P234 = "p234"

class LocalAlgebra(Enum):
    INERT_FIELD = "inert-field"
    FXK_FIELD = "fxk-field"
    SPLIT = "split"

class LocalChar(Enum):
    TRIVIAL = "trivial"
    QUAD_NORMTRIVIAL = "quad-normtrivial"
    QUAD_NORMNONTRIVIAL = "quad-normnontrivial"

class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
