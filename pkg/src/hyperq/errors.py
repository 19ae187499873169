"""Exceptions shared across the package."""


class EngineError(ValueError):
    """Base class for domain errors raised by the engine."""


class ZeroGermError(EngineError):
    """An operation that needs a nonzero germ received zero."""


class DegenerateDiagonalError(EngineError):
    """The denominator of a two-variable germ vanishes on the diagonal."""


class NotFinitePointError(EngineError):
    """The germ is not a finite point of the requested structure."""


class StructureMismatchError(EngineError):
    """Operands belong to different metric structures."""


class ModulusViolationError(EngineError):
    """A declared Cauchy modulus failed its sampled certificate."""


class UniverseMismatchError(EngineError):
    """Coded sets over different universes cannot be combined."""


class NonMonotoneGeneratorError(EngineError):
    """A set family declared monotone is not."""


class NotDisjointError(EngineError):
    """Sets required to be disjoint overlap."""


class ModeViolationError(EngineError):
    """A sigma-family's declared mode failed its sampled check."""


class OutOfAlgebraError(EngineError):
    """The expression leaves the supported interval algebra."""


class LimitUndecidableError(EngineError):
    """No exact closed form for the requested limit could be established."""
