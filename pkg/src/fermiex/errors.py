"""Exception types shared across the package."""


class FermiexError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(FermiexError):
    """Operands have incompatible particle counts or dimensions."""


class ZeroStateError(FermiexError):
    """An operation that needs a nonzero state received a vanishing one."""


class NormalizationError(FermiexError):
    """An input that must be unit-normalized is not (pass normalize=True to renormalize)."""


class InvalidDensityError(FermiexError):
    """A matrix presented as a density matrix fails its invariants."""


class ExcludedStateError(FermiexError):
    """Construction hit a 0/0 degeneracy: numerator and normalizer vanish together.

    `condition` names the clause that triggered the degeneracy, using the same
    tags as :class:`fermiex.antisym.ExclusionVerdict`.
    """

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class NotAntisymmetricError(FermiexError):
    """A two-fermion amplitude matrix is not antisymmetric."""


class SymmetryError(FermiexError):
    """A tensor required to be fully symmetric is not."""


class ConfigError(FermiexError):
    """The basis lacks configuration (labels) needed by the operation."""


class LabelError(FermiexError):
    """A vector cannot be identified with a single labeled basis state."""


class ParseError(FermiexError):
    """A state or matrix file is malformed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DuplicateError(ParseError):
    """The same index tuple appears more than once in a file."""
