"""Exception hierarchy shared across the package.

Every error raised by chartnav derives from ChartNavError so callers can
catch the whole family at the service boundary.
"""

from __future__ import annotations


class ChartNavError(Exception):
    """Base class for all chartnav errors."""


# -- chart model -------------------------------------------------------------

class SpecParseError(ChartNavError):
    """Malformed chart document. Carries the path to the offending node."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class UnsupportedMarkError(SpecParseError):
    pass


class MissingDataError(SpecParseError):
    pass


class MissingEncodingError(SpecParseError):
    pass


class TransformError(ChartNavError):
    """A transform references a missing field or mismatched types."""


class UnknownColumnError(ChartNavError):
    pass


class UnknownParamError(ChartNavError):
    pass


class ParamRangeError(ChartNavError):
    pass


# -- tree / navigation -------------------------------------------------------

class UnknownAddressError(ChartNavError):
    pass


class NotAGroupNodeError(ChartNavError):
    pass


class EmptyInputError(ChartNavError):
    pass


# -- color naming ------------------------------------------------------------

class MalformedHexError(ChartNavError):
    pass


# -- gateway -----------------------------------------------------------------

class GatewayError(ChartNavError):
    pass


class GatewayTimeout(GatewayError):
    pass


class TransportError(GatewayError):
    pass


class ReplayMismatchError(GatewayError):
    """Prompt digest diverged from the recorded transcript."""

    def __init__(self, expected: str, got: str):
        super().__init__(
            f"replay mismatch: transcript recorded digest {expected}, "
            f"rendered prompt has digest {got}"
        )
        self.expected = expected
        self.got = got


class ReplayExhaustedError(GatewayError):
    pass


class ZeroVectorError(GatewayError):
    pass


class DimensionMismatchError(GatewayError):
    pass


# -- pipeline ----------------------------------------------------------------

class FormatError(ChartNavError):
    """Model output did not follow the required wire format after a re-ask."""


class InsufficientBankError(ChartNavError):
    pass


class AgentLoopTimeout(ChartNavError):
    """Tabular agent exceeded its step or wall-clock budget."""


# -- eval harness ------------------------------------------------------------

class InsufficientItemsError(ChartNavError):
    pass


class LengthMismatchError(ChartNavError):
    pass


class DegenerateRankingError(ChartNavError):
    """All pairs tied in one sequence; tau-b is undefined."""


class JudgeParseError(ChartNavError):
    pass


# -- service -----------------------------------------------------------------

class UnknownSessionError(ChartNavError):
    pass


class ConcurrentQueryError(ChartNavError):
    pass
