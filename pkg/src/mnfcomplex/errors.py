"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`MnfError`,
so callers (the CLI in particular) can tell a user mistake from a bug.
"""


class MnfError(Exception):
    pass


class InvalidComplex(MnfError, ValueError):
    pass


class AntichainViolation(InvalidComplex):
    """One proposed minimal non-face contains another, or repeats one."""


class SizeViolation(InvalidComplex):
    """A proposed minimal non-face has fewer than two vertices."""


class RangeViolation(MnfError, ValueError):
    """A vertex label lies outside the ground set ``1..n``."""


class InvalidParameter(MnfError, ValueError):
    pass


class NotAFace(MnfError, ValueError):
    pass


class NotInLattice(MnfError, KeyError):
    pass


class Irrecoverable(MnfError, ValueError):
    """A nerve that cannot come from an unsuspended complex."""


class TooLarge(MnfError, RuntimeError):
    """An internal size limit was hit."""


class BoundsExceeded(MnfError, ValueError):
    pass


class CheckpointCorrupt(MnfError, RuntimeError):
    pass


class ConfigMismatch(MnfError, ValueError):
    pass


class ParseError(MnfError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
