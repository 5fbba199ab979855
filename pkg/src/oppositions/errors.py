"""Exception types shared across the package."""


class OppositionError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(OppositionError):
    """Malformed input text."""

    def __init__(self, message, position=None, expected=()):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected)

    def __str__(self):
        msg = super().__str__()
        if self.position is not None:
            msg = f"{msg} (at position {self.position})"
        if self.expected:
            msg = f"{msg}; expected one of: {', '.join(self.expected)}"
        return msg


class UnsupportedForm(OppositionError):
    """Modal and other recognized-but-uncompiled constructs."""


class UnknownName(OppositionError):
    """Name does not match the proposition-name grammar."""


class DuplicateCommitment(OppositionError):
    """Two import commitments target the same predicate."""


class NotRepresentable(OppositionError):
    """Formula has no rendering in the requested syntax."""


class Unclassifiable(OppositionError):
    """Formula fits none of the recognized form schemes."""


class LengthMismatch(OppositionError):
    """Bitstrings of different lengths were combined."""


class EmptyUniverse(OppositionError):
    """Operation requires at least one model."""


class NotCellConstant(OppositionError):
    """Formula is not constant on a partition cell."""
