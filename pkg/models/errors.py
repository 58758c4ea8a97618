"""
Exception types shared across the lab.
"""

from typing import Any, Optional


class EnumerationGuardError(ValueError):
    """Raised when an exhaustive enumeration is asked for an instance past its guard"""


class NotApplicableError(ValueError):
    """Raised when a quantity is undefined for the given graph (e.g. empty core)"""


class InvalidAugmentedCoreError(ValueError):
    """Raised when a set of records violates an augmented-core rule"""

    def __init__(self, rule: str, message: Optional[str] = None):
        self.rule = rule
        super().__init__(message or f"augmented core violates rule '{rule}'")


class InvalidSwitchError(InvalidAugmentedCoreError):
    """Raised when a pair of oriented kernel edges is not a valid switching"""


class RejectionCapExceeded(RuntimeError):
    """Raised when a rejection sampler exhausts its attempt budget"""

    def __init__(self, sampler: str, attempts: int, accepted: int = 0):
        self.sampler = sampler
        self.attempts = attempts
        self.accepted = accepted
        rate = accepted / attempts if attempts else 0.0
        super().__init__(
            f"{sampler}: no sample after {attempts} attempts "
            f"(estimated acceptance rate {rate:.3g}); "
            f"raise sampler.max_rejections or pick another sampler"
        )


class VerificationFailure(AssertionError):
    """Raised by the verify suite; carries the serialized counterexample"""

    def __init__(self, suite: str, counterexample: Any):
        self.suite = suite
        self.counterexample = counterexample
        super().__init__(f"verify suite '{suite}' failed on {counterexample!r}")
