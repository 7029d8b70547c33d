"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input text. ``line`` is 1-based, or None for whole-input errors."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class DisconnectedGraphError(ValueError):
    def __init__(self, what="operation"):
        super().__init__(f"{what} requires connected graph")


class TransitError(ValueError):
    """A pair map violates the transit function conditions (t1)-(t3)."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """Exact game search would exceed the configured state budget."""
