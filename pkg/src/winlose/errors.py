"""Exception types shared across the solver."""


class WinLoseError(Exception):
    """Base class for all errors raised by this package."""


class ShapeMismatch(WinLoseError):
    """Matrix or profile dimensions do not agree."""


class NotACycle(WinLoseError):
    """A vertex sequence is not a simple directed cycle of the graph."""


class SubdividedCycle(WinLoseError):
    """A cycle still contains helper vertices introduced during decomposition."""


class Disconnected(WinLoseError):
    """The underlying undirected graph is not connected."""


class NotBiconnected(WinLoseError):
    """The underlying undirected graph is not biconnected."""


class UnsupportedComponent(WinLoseError):
    """A decomposition component falls outside the supported graph classes."""


class GuaranteeViolation(WinLoseError):
    """A structurally guaranteed search came up empty; indicates a bug."""


class StitchDirectionMismatch(WinLoseError):
    """Two cycles cannot be stitched because their shared-pair traversals conflict."""


class StitchSelectionFailed(WinLoseError):
    """No combination of component cycles assembles into a global cycle."""


class StitchVerificationError(WinLoseError):
    """A stitched cycle failed final verification against the host graph."""


class ParseError(WinLoseError):
    """A game or profile file is malformed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", entry {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class TooLarge(WinLoseError):
    """The instance exceeds the configured exhaustive-search bounds."""
