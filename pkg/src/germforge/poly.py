"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping ``exponent tuple -> Fraction`` attached to a
:class:`VarContext` that fixes the variable names, their order, and their
roles.  Zero coefficients are never stored, so equality of the term dicts is
equality of polynomials.  All term enumeration that can reach output is done
in graded lexicographic order (total degree first, then the exponent tuple),
which keeps every downstream report deterministic.

Coefficients are ``fractions.Fraction`` throughout; there is no floating
point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import ContextMismatch, InvalidInput, NonSingularGerm, UnknownVariable

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

ROLES = ("source", "target", "parameter", "augmenting")


def grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    """Sort key realising the graded lexicographic order (ascending)."""
    return (sum(exps), exps)


@dataclass(frozen=True)
class VarContext:
    """An ordered list of named variables, each with a role.

    Roles ("source", "target", "parameter", "augmenting") carry no algebraic
    meaning here; they let the germ layer tell apart the coordinates a family
    deforms, the ones it unfolds along, and the ones an augmentation adds.
    """

    names: tuple[str, ...]
    roles: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.roles):
            raise InvalidInput("variable names and roles differ in length")
        if len(set(self.names)) != len(self.names):
            raise InvalidInput(f"duplicate variable names in {self.names}")
        for role in self.roles:
            if role not in ROLES:
                raise InvalidInput(f"unknown variable role '{role}'")

    @classmethod
    def of(cls, names: Iterable[str], role: str = "source") -> "VarContext":
        names = tuple(names)
        return cls(names, (role,) * len(names))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    def has(self, name: str) -> bool:
        return name in self.names

    def role_of(self, name: str) -> str:
        return self.roles[self.index(name)]

    def with_role(self, role: str) -> tuple[str, ...]:
        return tuple(n for n, r in zip(self.names, self.roles) if r == role)

    def extend(self, names: Iterable[str], role: str) -> "VarContext":
        names = tuple(names)
        for n in names:
            if n in self.names:
                raise InvalidInput(f"variable '{n}' already in context")
        return VarContext(self.names + names, self.roles + (role,) * len(names))

    def restrict(self, names: Iterable[str]) -> "VarContext":
        keep = tuple(names)
        for n in keep:
            self.index(n)
        return VarContext(keep, tuple(self.role_of(n) for n in keep))


@lru_cache(maxsize=None)
def monomials_up_to(nvars: int, max_degree: int) -> tuple[Exponents, ...]:
    """All exponent tuples of total degree <= max_degree, graded-lex ascending."""
    out: list[Exponents] = []

    def rec(prefix: list[int], remaining: int, budget: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], remaining - 1, budget - e)

    rec([], nvars, max_degree)
    out.sort(key=grlex_key)
    return tuple(out)


class Polynomial:
    """Immutable sparse polynomial over a fixed :class:`VarContext`."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VarContext, terms: Mapping[Exponents, Scalar]):
        clean: dict[Exponents, Fraction] = {}
        nvars = len(ctx)
        for exps, coeff in terms.items():
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise InvalidInput(f"bad exponent tuple {exps} for {nvars} variables")
            c = Fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx: VarContext) -> "Polynomial":
        return cls(ctx, {})

    @classmethod
    def const(cls, ctx: VarContext, value: Scalar) -> "Polynomial":
        return cls(ctx, {(0,) * len(ctx): Fraction(value)})

    @classmethod
    def variable(cls, ctx: VarContext, name: str) -> "Polynomial":
        i = ctx.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(ctx)))
        return cls(ctx, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, ctx: VarContext, exps: Exponents, coeff: Scalar = 1) -> "Polynomial":
        return cls(ctx, {tuple(exps): Fraction(coeff)})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self) -> int | None:
        """Lowest total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.ctx), Fraction(0))

    def linear_part(self) -> "Polynomial":
        return Polynomial(
            self.ctx, {e: c for e, c in self.terms.items() if sum(e) == 1}
        )

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.ctx, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in ascending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def support(self) -> list[Exponents]:
        return [e for e, _ in self.sorted_terms()]

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * len(self.ctx)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.ctx.names, used) if u)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatch(
                    f"contexts differ: {self.ctx.names} vs {other.ctx.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.ctx, other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in q.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial(self.ctx, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers must be nonnegative integers")
        result = Polynomial.const(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_monomial(self, exps: Exponents, coeff: Scalar = 1) -> "Polynomial":
        """Fast multiplication by a single monomial."""
        c0 = Fraction(coeff)
        return Polynomial(
            self.ctx,
            {tuple(a + b for a, b in zip(e, exps)): c * c0 for e, c in self.terms.items()},
        )

    def mul_truncated(self, other: "Polynomial", max_degree: int) -> "Polynomial":
        """Product with every term of total degree > max_degree dropped."""
        q = self._coerce(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > max_degree:
                continue
            for e2, c2 in q.terms.items():
                if d1 + sum(e2) > max_degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial(self.ctx, terms)

    def jet(self, order: int) -> "Polynomial":
        """Truncation: keep terms of total degree <= order."""
        return Polynomial(
            self.ctx, {e: c for e, c in self.terms.items() if sum(e) <= order}
        )

    # -- calculus -----------------------------------------------------

    def diff(self, name: str) -> "Polynomial":
        i = self.ctx.index(name)
        terms: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            lowered = exps[:i] + (e - 1,) + exps[i + 1 :]
            terms[lowered] = terms.get(lowered, Fraction(0)) + c * e
        return Polynomial(self.ctx, terms)

    def substitute(
        self, bindings: Mapping[str, "Polynomial | Scalar"]
    ) -> "Polynomial":
        """Simultaneous substitution of polynomials for variables.

        All polynomial binding values must share one context; that context
        becomes the context of the result.  Variables of ``self`` that are
        not bound must exist (by name) in the target context and pass
        through unchanged.  Scalar binding values are promoted to constants.
        """
        if not bindings:
            return self
        target: VarContext | None = None
        for value in bindings.values():
            if isinstance(value, Polynomial):
                if target is None:
                    target = value.ctx
                elif value.ctx != target:
                    raise ContextMismatch("binding values live in different contexts")
        if target is None:
            target = self.ctx
        images: list[Polynomial | None] = [None] * len(self.ctx)
        for name, value in bindings.items():
            i = self.ctx.index(name)
            images[i] = (
                value if isinstance(value, Polynomial) else Polynomial.const(target, value)
            )
        for i, name in enumerate(self.ctx.names):
            if images[i] is None:
                images[i] = Polynomial.variable(target, name)

        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                if e == 1:
                    powers[key] = images[i]  # type: ignore[assignment]
                else:
                    powers[key] = power(i, e - 1) * images[i]
            return powers[key]

        out = Polynomial.zero(target)
        for exps, c in self.sorted_terms():
            term = Polynomial.const(target, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def embed(self, ctx: VarContext) -> "Polynomial":
        """Reinterpret in a larger context, matching variables by name."""
        if ctx == self.ctx:
            return self
        positions = [ctx.index(n) for n in self.ctx.names]
        nvars = len(ctx)
        terms: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            out = [0] * nvars
            for pos, e in zip(positions, exps):
                out[pos] = e
            terms[tuple(out)] = c
        return Polynomial(ctx, terms)

    def restricted(self, ctx: VarContext) -> "Polynomial":
        """Reinterpret in a smaller context; dropped variables must not occur."""
        if ctx == self.ctx:
            return self
        keep = {n: ctx.index(n) for n in self.ctx.names if ctx.has(n)}
        nvars = len(ctx)
        terms: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            out = [0] * nvars
            for name, e in zip(self.ctx.names, exps):
                if name in keep:
                    out[keep[name]] = e
                elif e:
                    raise ContextMismatch(
                        f"variable '{name}' occurs but is not in the target context"
                    )
            terms[tuple(out)] = c
        return Polynomial(ctx, terms)

    # -- equality and display ------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash((self.ctx, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for exps, coeff in sorted(
            self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True
        ):
            mono = monomial_str(self.ctx, exps)
            mag = abs(coeff)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def monomial_str(ctx: VarContext, exps: Exponents) -> str:
    """Render an exponent tuple using the expression grammar."""
    parts = []
    for name, e in zip(ctx.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def jacobian(g: Polynomial, names: Iterable[str] | None = None) -> list[Polynomial]:
    """Partial derivatives of g, one per variable, in context order."""
    if names is None:
        names = g.ctx.names
    return [g.diff(n) for n in names]


def hessian_at_origin(g: Polynomial) -> list[list[Fraction]]:
    """Matrix of second partials at 0 over the full context, exact."""
    names = g.ctx.names
    rows: list[list[Fraction]] = []
    first = [g.diff(n) for n in names]
    for gi in first:
        rows.append([gi.diff(n).constant_term() for n in names])
    return rows


def hessian_corank_at_origin(g: Polynomial) -> int:
    """Corank of the Hessian of g at 0.

    g must define a singular germ: zero constant term and zero linear part,
    otherwise the Hessian corank is not an invariant of the problem we care
    about.
    """
    if g.constant_term() != 0:
        raise InvalidInput("function does not vanish at the origin")
    if not g.linear_part().is_zero():
        raise NonSingularGerm("function has a nonzero linear part at the origin")
    h = hessian_at_origin(g)
    return len(h) - _dense_rank(h)


def _dense_rank(matrix: list[list[Fraction]]) -> int:
    """Rank of a small dense matrix by exact Gaussian elimination."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col] / inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
