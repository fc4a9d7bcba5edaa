"""Exception hierarchy shared by all modules."""


class BraidCoverError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BraidCoverError, ValueError):
    """A numeric parameter lies outside its admissible range."""


class SchemaError(BraidCoverError, ValueError):
    """Structural mismatch: unknown label, wrong domain, wrong arity."""


class CompositionError(BraidCoverError, ValueError):
    """Two letters or words are not composable in the groupoid."""


class PreconditionError(BraidCoverError, ValueError):
    pass


class ResourceError(BraidCoverError, RuntimeError):
    """An exhaustive search was asked to exceed its size bound."""
