"""Typed failure modes shared across the engine.

Three flavours matter to callers and are kept apart deliberately:

* bad input (syntax, unknown names, violated preconditions),
* honest "ran out of budget" outcomes (`NotCertifiedByOrder`),
* theorem hypotheses that simply do not hold for the given data.

The service and the CLI map these onto HTTP status codes and process exit
codes; nothing here is ever swallowed silently.
"""

from __future__ import annotations


class GermforgeError(Exception):
    """Base class for every error raised by this package."""


class ExprSyntaxError(GermforgeError):
    """Malformed expression text. Carries the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(GermforgeError):
    """An identifier that is not declared in the active variable context."""

    def __init__(self, name: str, position: int = -1):
        at = f" (at position {position})" if position >= 0 else ""
        super().__init__(f"unknown variable '{name}'{at}")
        self.name = name
        self.position = position


class ContextMismatch(GermforgeError):
    """Operands live in different variable contexts."""


class InvalidInput(GermforgeError):
    """A documented precondition was violated (e.g. a quotient generator
    with a nonzero constant term, or a germ that does not fix the origin)."""


class NonSingularGerm(GermforgeError):
    """Raised where a singularity is required but the input has a nonzero
    linear part."""


class NotCertifiedByOrder(GermforgeError):
    """The computation did not stabilise within the jet budget.

    This is not an error in the input: the answer may be infinite or may
    merely need a larger budget, and we refuse to guess which.
    """

    def __init__(self, budget: int, detail: str = ""):
        tail = f": {detail}" if detail else ""
        super().__init__(f"not certified within jet order {budget}{tail}")
        self.budget = budget


class NotStable(GermforgeError):
    """An unfolding claimed to be stable has positive codimension."""

    def __init__(self, lower_bound: int):
        super().__init__(
            f"unfolding is not stable (codimension >= {lower_bound})"
        )
        self.lower_bound = lower_bound


class NotAnUnfoldingOf(GermforgeError):
    """The given family does not restrict to the given germ at parameter 0."""


class InvalidAugmentingFunction(GermforgeError):
    """Augmenting functions must vanish at the origin and be singular there."""


class HypothesesUnmet(GermforgeError):
    """A theorem-backed construction was asked for outside its hypotheses."""


class GermFileError(GermforgeError):
    """A germ definition file could not be interpreted."""
