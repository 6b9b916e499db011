"""Exceptions raised by the doily engine."""


class DoilyError(Exception):
    """Base class for all engine errors."""


class DimensionError(DoilyError, ValueError):
    """Vector lengths do not match the operation."""


class DomainError(DoilyError, ValueError):
    """Argument outside the domain of the operation."""


class CapacityError(DoilyError, ValueError):
    """Exhaustive search would leave desk scale."""


class GeometryError(DoilyError, ValueError):
    """Incidence data violates the point-line geometry invariants."""


class ClassificationError(DoilyError):
    """A Veldkamp line core-set matches no known type."""


class IsomorphismError(DoilyError):
    """Veldkamp space does not map onto PG(4,2)."""


class CorrespondenceError(DoilyError):
    """Pauli operators and W(2) points disagree on commutation."""


class StructureError(DoilyError):
    """A grid could not be arranged as a 3x3 square."""


class UsageError(DoilyError):
    """Bad command line usage."""
