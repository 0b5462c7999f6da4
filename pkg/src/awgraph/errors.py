"""Shared exception types."""


class AwgraphError(Exception):
    """Base class for all errors raised by this package."""


class BudgetExceededError(AwgraphError):
    """A search or enumeration exceeded its configured node-expansion budget.

    Raised instead of returning a possibly wrong answer; the partial state is
    discarded.
    """
