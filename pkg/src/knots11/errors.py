"""Exception types shared across the package."""


class DomainError(ValueError):
    """Invalid input: bad parameters, malformed words, non-admissible tuples."""


class WordSyntaxError(DomainError):
    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


class ConsistencyError(RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""
