"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """Raised when a computation would exceed a configured size or time budget.

    Carries enough context to report what was attempted and what the limit was.
    """

    def __init__(self, message, requested=None, bound=None):
        super().__init__(message)
        self.requested = requested
        self.bound = bound


class DiscrepancyError(AssertionError):
    """Raised when a fast criterion and its brute-force oracle disagree.

    This is always a bug in one of the two implementations, never a normal
    runtime condition, hence the AssertionError base.
    """

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail
