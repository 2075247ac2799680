"""Exception hierarchy shared by all modules."""


class SatGBError(Exception):
    pass


class StructureError(SatGBError, ValueError):
    """Malformed input: length or dimension mismatch, bad construction data."""


class DomainError(SatGBError, ValueError):
    """Structurally valid input outside an operation's domain
    (zero vector, non-homogeneous vector, mismatched components, ...)."""


class NonPositiveGradingError(SatGBError):
    """Computation refused: termination is only guaranteed for positive gradings."""


class EngineTimeout(SatGBError):
    """A run exceeded its time budget."""
