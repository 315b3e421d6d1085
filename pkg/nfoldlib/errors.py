"""
Exceptions raised by `nfoldlib`.

Library errors derive from ``ValueError`` so that callers catching contract violations keep working.
``VerificationError`` marks a failed theorem check and derives from ``AssertionError``.
"""


class AlgebraParseError(ValueError):
    """Syntax or reference error in an algebra description."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnsupportedAlgebraError(ValueError):
    """The algebra lies outside the supported class (non-admissible, not string, bands)."""


class GuardExceededError(ValueError):
    """A configured computation bound was exceeded."""


class DecompositionError(ValueError):
    """A module could not be decomposed against the catalog."""


class VerificationError(AssertionError):
    """A machine-checked theorem failed on the given input."""
