"""Exception hierarchy shared across the package.

Every error raised by library code derives from :class:`FocklatError`, so
callers (the CLI in particular) can map failures to structured error
reports without catching bare exceptions.
"""


class FocklatError(Exception):
    """Base class for all focklat errors."""


class StatisticsMismatch(FocklatError):
    """Two values with different particle statistics were combined."""


class SectorMismatch(FocklatError):
    """Two states with different total particle numbers were compared."""


class ZeroVector(FocklatError):
    """An operation that needs a nonzero vector received the zero vector."""


class CapExceeded(FocklatError):
    """An enumeration would produce more items than the configured cap."""


class SizeExceeded(FocklatError):
    """A lattice construction would exceed the table-size guard."""


class UnknownElement(FocklatError):
    """An element id or name does not belong to the lattice."""


class InvalidDiagram(FocklatError):
    """An orthogonality diagram violates its structural invariants."""


class NotOrthomodular(FocklatError):
    """A structure failed the orthomodular-lattice laws."""


class NotEmbedding(FocklatError):
    """A map between lattices is not an injective ortholattice embedding."""


class NotSaturated(FocklatError):
    """An extended lattice lacks a least central element above some element."""


class DomainMismatch(FocklatError):
    """A homomorphism's domain differs from the one required."""


class ExpressionError(FocklatError):
    """A state expression failed to parse.

    Carries the 1-based line and column of the offending character.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
