"""Exception hierarchy shared by the matrix builders and the engines."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class NotContractibleError(DomainError):
    """The requested column (or row) does not hold exactly two nonzeros."""


class CapExceededError(DomainError):
    """An exponential-cost engine refused an input above its size cap."""

    def __init__(self, engine: str, n: int, cap: int):
        self.engine = engine
        self.n = n
        self.cap = cap
        super().__init__(f"{engine}: matrix order {n} exceeds the configured cap of {cap}")


class NegativeEntryError(DomainError):
    pass


class StuckContractionError(DomainError):
    pass
