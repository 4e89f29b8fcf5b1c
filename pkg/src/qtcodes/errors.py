"""Exception hierarchy shared across the package.

Each error class carries the CLI exit code it maps to, so the command
layer can translate failures without a lookup table.
"""


class QtError(Exception):
    """Base class for all package-specific errors."""

    exit_code = 1


class PreconditionError(QtError):
    """A construction hypothesis does not hold for the given inputs."""

    exit_code = 2


class GuardError(QtError):
    """An enumeration was refused because it would exceed a size guard."""

    exit_code = 3


class EmptySearchError(QtError):
    """A search space contained no feasible candidate."""

    exit_code = 4


class PolyParseError(QtError):
    """A polynomial string could not be parsed.

    `position` is the character offset of the offending token in the
    original input, for error messages that point at the problem.
    """

    exit_code = 5

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
