"""Map-germs, unfoldings, and the augmentation construction.

A :class:`MapGerm` is a polynomial map fixing the origin, written in a
variable context whose names are the source coordinates.  An
:class:`Unfolding` is again a map-germ, but over a context that mixes source
coordinates with parameter-role variables, and by convention it carries the
parameters along as its trailing components: (x, l) -> (f_l(x), l).

Augmentation plugs a singular function g of fresh variables into the
parameter slot of a one-parameter stable unfolding and carries the new
variables along:  (x, z) -> (f_{g(z)}(x), z).  Stability of the unfolding is
certified elsewhere (see ae_calculus.check_opsu); here it is recorded on the
:class:`Opsu` wrapper, which also remembers when the caller merely asserted
it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ContextMismatch,
    InvalidAugmentingFunction,
    InvalidInput,
    NotAnUnfoldingOf,
)
from .poly import Polynomial, VarContext


@dataclass(frozen=True)
class MapGerm:
    """A polynomial map-germ (K^n, 0) -> (K^p, 0)."""

    ctx: VarContext
    components: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InvalidInput("a map-germ needs at least one component")
        for c in self.components:
            if c.ctx != self.ctx:
                raise ContextMismatch("component context differs from germ context")
            if c.constant_term() != 0:
                raise InvalidInput("map-germ components must vanish at the origin")

    @property
    def n(self) -> int:
        return len(self.ctx)

    @property
    def p(self) -> int:
        return len(self.components)

    def display(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class Unfolding:
    """An unfolding written as a map-germ: (x, l) -> (f_l(x), l).

    The context mixes the source variables with parameter-role variables;
    the last ``m`` components must be exactly the parameter variables, in
    context order.
    """

    ctx: VarContext
    components: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        params = self.parameter_names
        if not params:
            raise InvalidInput("an unfolding needs at least one parameter variable")
        if len(self.components) <= len(params):
            raise InvalidInput("an unfolding needs components besides its parameters")
        for c in self.components:
            if c.ctx != self.ctx:
                raise ContextMismatch("component context differs from unfolding context")
            if c.constant_term() != 0:
                raise InvalidInput("unfolding components must vanish at the origin")
        trailing = self.components[-len(params) :]
        for name, comp in zip(params, trailing):
            if comp != Polynomial.variable(self.ctx, name):
                raise InvalidInput(
                    "the trailing components must be the parameter variables, in order"
                )

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return self.ctx.with_role("parameter")

    @property
    def m(self) -> int:
        return len(self.parameter_names)

    @property
    def p(self) -> int:
        return len(self.components) - self.m

    def base(self) -> MapGerm:
        """The germ this unfolds: parameters to zero, trailing components dropped."""
        source_names = tuple(
            n for n in self.ctx.names if self.ctx.role_of(n) != "parameter"
        )
        restricted = self.ctx.restrict(source_names)
        zeros = {name: 0 for name in self.parameter_names}
        comps = tuple(
            c.substitute(zeros).restricted(restricted) for c in self.components[: self.p]
        )
        return MapGerm(restricted, comps)

    def as_map_germ(self) -> MapGerm:
        """Forget the unfolding structure; parameters become plain source."""
        return MapGerm(self.ctx, self.components)

    def display(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class Opsu:
    """A one-parameter stable unfolding with its stability evidence.

    ``certificate`` is the jet order at which stability was certified, or
    the string "asserted" when the caller vouched for it.
    """

    unfolding: Unfolding
    certificate: int | str

    def __post_init__(self) -> None:
        if self.unfolding.m != 1:
            raise InvalidInput("a one-parameter stable unfolding has exactly one parameter")

    @property
    def parameter(self) -> str:
        return self.unfolding.parameter_names[0]


@dataclass(frozen=True)
class SubstantialFlag:
    """Caller's assertion that the unfolding admits a liftable vector field
    whose last component projects onto the unfolding parameter.

    Detection is out of scope, so the flag is never inferred: it records a
    hypothesis under which the codimension product for augmentations is
    exact even when the augmenting function is not quasihomogeneous.
    """

    asserted: bool = False


def validate_augmenting_function(g: Polynomial) -> None:
    if g.is_zero() or g.constant_term() != 0:
        raise InvalidAugmentingFunction(
            "augmenting functions must be nonzero and vanish at the origin"
        )
    if not g.linear_part().is_zero():
        raise InvalidAugmentingFunction(
            "augmenting functions must be singular at the origin (no linear part)"
        )


def augment(f: MapGerm, opsu: Opsu, g: Polynomial) -> MapGerm:
    """The augmentation of f by g via a one-parameter stable unfolding.

    Substitutes g (in fresh variables) for the unfolding parameter and
    carries the new variables along as extra components.
    """
    unfolding = opsu.unfolding
    if unfolding.base() != f:
        raise NotAnUnfoldingOf("the unfolding does not restrict to the given germ")
    validate_augmenting_function(g)
    for name in g.ctx.names:
        if f.ctx.has(name):
            raise InvalidInput(
                f"augmenting variable '{name}' collides with a source variable"
            )
    combined = f.ctx.extend(g.ctx.names, "augmenting")
    g_embedded = g.embed(combined)
    lam = opsu.parameter
    comps = [
        c.substitute({lam: g_embedded}) for c in unfolding.components[: unfolding.p]
    ]
    comps += [Polynomial.variable(combined, z) for z in g.ctx.names]
    return MapGerm(combined, tuple(comps))
