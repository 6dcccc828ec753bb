class IncompatibleCharacterError(ValueError):
    """A character tag was combined with an etale algebra it does not live on."""


class LaurentError(ValueError):
    """A product has no well-defined order or leading term at the requested point."""


class HolomorphyError(ValueError):
    """A normalized operator is not known to be holomorphic at the requested point."""


class UnknownClassStructureError(ValueError):
    """No residue class-sum data is recorded for the requested global case."""


class InadmissiblePlaceError(ValueError):
    """A place type, local character or local quotient tag is not admissible."""
