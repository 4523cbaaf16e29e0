"""Exception types shared by the library and mapped to CLI exit codes."""


class RankabilityError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InvalidArgumentError(RankabilityError, ValueError):
    """Malformed input: bad shapes, negative counts, non-permutations."""

    exit_code = 2


class DomainError(RankabilityError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    exit_code = 2


class ResourceLimitError(RankabilityError):
    """The requested problem size exceeds a configured memory/time limit."""

    exit_code = 3


class InternalAssertionError(RankabilityError, AssertionError):
    """A numerical self-check failed; indicates a bug, not bad input."""

    exit_code = 4
