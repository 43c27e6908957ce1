"""Exception types raised by hypermatch.

Input problems derive from ValueError and failed computations from
RuntimeError. Each class carries the CLI exit code it maps to.
"""


class HypermatchError(Exception):
    """Base mixin for all hypermatch errors."""

    exit_code = 1


class StructuralError(HypermatchError, ValueError):
    """An edge, vertex set or matrix does not fit the hypergraph structure."""

    exit_code = 2


class DomainError(HypermatchError, ValueError):
    """A parameter lies outside the domain of the operation."""

    exit_code = 2


class PositivityError(DomainError):
    """A weight that must be positive is zero or negative."""


class ParseError(HypermatchError, ValueError):
    """An instance document is malformed."""

    exit_code = 2

    def __init__(self, message, locus=None):
        self.locus = locus
        if locus is not None:
            message = f"{message} (at {locus})"
        super().__init__(message)


class StateError(HypermatchError, RuntimeError):
    """An object was passed in a state the operation cannot accept."""

    exit_code = 2


class CapacityError(HypermatchError, RuntimeError):
    """A computation would exceed its configured budget."""

    exit_code = 3

    def __init__(self, message, required=None, budget=None):
        self.required = required
        self.budget = budget
        super().__init__(message)


class NonConvergenceError(HypermatchError, RuntimeError):
    """Scaling stopped before reaching the requested tolerance."""

    exit_code = 4

    def __init__(self, message, outcome=None):
        self.outcome = outcome
        super().__init__(message)
