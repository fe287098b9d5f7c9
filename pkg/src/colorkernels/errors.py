"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class EnvelopeExceeded(RuntimeError):
    """A computation was refused because its input exceeds the configured size guard."""


class NotCograph(PreconditionError):
    """Raised by cotree construction; ``witness`` is an induced P4 in path order."""

    def __init__(self, witness):
        super().__init__(f"graph contains induced P4 {witness}")
        self.witness = tuple(witness)


class ParseError(ValueError):
    """Malformed instance or CNF text."""
