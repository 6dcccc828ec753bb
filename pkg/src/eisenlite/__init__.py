"""
eisenlite - exact pole and residue bookkeeping for degenerate Eisenstein series

Symbolic Weyl-group, Gindikin-Karpelevich and cancellation machinery for the
Heisenberg parabolic of quasi-split Spin(8), plus the residual-spectrum and
Siegel-Weil verifications built on it.
"""

from .enums import CharKind, EType, Field, LocalAlgebra, LocalChar, OutputFormat, Parabolic
from .errors import (
    HolomorphyError,
    IncompatibleCharacterError,
    InadmissiblePlaceError,
    LaurentError,
    UnknownClassStructureError,
)
from .logger import get_logger, set_log_level
from . import roots, characters, lfun, gk, ctan, residue, jacquet, siegelweil

__version__ = "0.1.0"

__all__ = [
    "CharKind",
    "EType",
    "Field",
    "LocalAlgebra",
    "LocalChar",
    "OutputFormat",
    "Parabolic",
    "HolomorphyError",
    "IncompatibleCharacterError",
    "InadmissiblePlaceError",
    "LaurentError",
    "UnknownClassStructureError",
    "get_logger",
    "set_log_level",
    "roots",
    "characters",
    "lfun",
    "gk",
    "ctan",
    "residue",
    "jacquet",
    "siegelweil",
]
