"""
Exceptions raised by cluster_tube

Every concrete error carries a short code naming the failure category and
an optional message. Codes are stable and show up in CLI reports.
"""

from typing import Optional


class ClusterTubeError(Exception):
    """An empty exception class to categorize errors raised by cluster_tube"""


class TubeError(ClusterTubeError):
    """TubeError wraps a categorized failure with an optional message"""

    code = "TubeError"

    def __init__(self, msg: Optional[str] = None) -> None:
        super().__init__(msg)
        self.error_message = msg

    def __str__(self) -> str:
        if self.error_message is None:
            return self.code
        return "{}: {}".format(self.code, self.error_message.strip())


class InvalidLength(TubeError):
    code = "InvalidLength"


class InvalidRank(TubeError):
    code = "InvalidRank"


class RankMismatch(TubeError):
    code = "RankMismatch"


class WingUndefined(TubeError):
    code = "WingUndefined"


class NotExchangePair(TubeError):
    code = "NotExchangePair"


class InternalInvariantBroken(TubeError):
    """Raised when a computed object violates a structural invariant (a bug, never user input)"""

    code = "InternalInvariantBroken"


class BadDirection(TubeError):
    code = "BadDirection"


class LaurentViolation(TubeError):
    code = "LaurentViolation"


class Undefined(TubeError):
    code = "Undefined"


class GradingViolation(TubeError):
    code = "GradingViolation"


class NotRigid(TubeError):
    code = "NotRigid"


class InShift(TubeError):
    code = "InShift"


class UsageError(TubeError):
    code = "UsageError"


class SeedCapExceeded(TubeError):
    code = "SeedCapExceeded"


class ConfigurationError(TubeError):
    code = "ConfigurationError"


class WorkerFailure(TubeError):
    """Raised when a suite worker process exits before answering its tasks"""

    code = "WorkerFailure"
