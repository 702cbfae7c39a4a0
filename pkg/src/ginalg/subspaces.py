"""Canonical echelon bases for subspaces of one graded piece.

A Subspace is stored as a reduced echelon basis: each basis form is monic
at its leading monomial, leading monomials are pairwise distinct, and no
basis form contains another's leading monomial.  Reduced echelon form is
unique, so subspace equality is a syntactic check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .forms import (
    REVLEX,
    Exponent,
    Form,
    CoordinateChange,
    apply_change,
    format_monomial,
    initial_monomial,
    monomial_key,
    monomials_of_degree,
    restrict,
    sort_monomials,
)


class Subspace:
    __slots__ = ("num_vars", "degree", "order", "basis")

    def __init__(self, num_vars: int, degree: int, order: str, basis: tuple[Form, ...]):
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def leading_monomials(self) -> tuple[Exponent, ...]:
        return tuple(initial_monomial(f, self.order) for f in self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.num_vars == other.num_vars
            and self.degree == other.degree
            and self.order == other.order
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.num_vars, self.degree, self.order, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(s={self.num_vars}, d={self.degree}, order={self.order}, dim={self.dim})"


@dataclass(frozen=True)
class MonomialSet:
    """A set of equal-degree exponents; in(V) and gin V in one degree."""

    num_vars: int
    degree: int
    exps: frozenset

    def __len__(self) -> int:
        return len(self.exps)

    def sorted(self, order: str = REVLEX) -> list[Exponent]:
        return sort_monomials(order, self.exps)

    def strings(self, order: str = REVLEX) -> list[str]:
        return [format_monomial(e) for e in self.sorted(order)]

    def drop_last_variable(self) -> MonomialSet:
        """Delete monomials divisible by the last variable, keep the rest verbatim."""
        kept = frozenset(e[:-1] for e in self.exps if e[-1] == 0)
        return MonomialSet(self.num_vars - 1, self.degree, kept)


def _reduce_against(f: Form, rows: list[Form], order: str) -> Form:
    # rows are reduced: no row contains another row's pivot, so one pass suffices
    for row in rows:
        pivot = initial_monomial(row, order)
        coeff = f.coefficient(pivot)
        if coeff != 0:
            f = f - row * coeff
    return f


def echelonize(
    forms,
    order: str = REVLEX,
    *,
    num_vars: int | None = None,
    degree: int | None = None,
) -> Subspace:
    """Reduced echelon basis of the span; canonical regardless of input order."""
    forms = list(forms)
    for f in forms:
        if num_vars is None:
            num_vars = f.num_vars
        elif f.num_vars != num_vars:
            raise ValueError("mixed variable counts in echelonize input")
        if f.is_zero():
            continue
        if degree is None:
            degree = f.degree
        elif f.degree != degree:
            raise ValueError(f"mixed degrees in echelonize input: {degree} and {f.degree}")
    if num_vars is None or degree is None:
        raise ValueError("echelonize needs num_vars and degree when no nonzero form is given")

    rows: list[Form] = []
    for f in forms:
        if f.is_zero():
            continue
        f = _reduce_against(f, rows, order)
        if f.is_zero():
            continue
        pivot = initial_monomial(f, order)
        f = f / f.terms[pivot]
        rows = [row - f * row.coefficient(pivot) for row in rows]
        rows.append(f)
    rows.sort(key=lambda r: monomial_key(order, initial_monomial(r, order)), reverse=True)
    return Subspace(num_vars, degree, order, tuple(rows))


def initial_subspace(space: Subspace) -> MonomialSet:
    """The leading monomials of the echelon basis; |in(V)| = dim V."""
    return MonomialSet(space.num_vars, space.degree, frozenset(space.leading_monomials()))


def reduce_form(space: Subspace, f: Form) -> Form:
    """Normal form of f against the echelon basis."""
    if f.num_vars != space.num_vars:
        raise ValueError("form and subspace over different variable counts")
    if not f.is_zero() and f.degree != space.degree:
        raise ValueError(f"degree mismatch: form has {f.degree}, subspace has {space.degree}")
    return _reduce_against(f, list(space.basis), space.order)


def contains(space: Subspace, f: Form) -> bool:
    return reduce_form(space, f).is_zero()


def transform_subspace(space: Subspace, change: CoordinateChange) -> Subspace:
    return echelonize(
        [apply_change(f, change) for f in space.basis],
        space.order,
        num_vars=space.num_vars,
        degree=space.degree,
    )


def restrict_subspace(space: Subspace, linear: Form) -> Subspace:
    """Image of the subspace in the quotient by the hyperplane linear = 0."""
    return echelonize(
        [restrict(f, linear) for f in space.basis],
        space.order,
        num_vars=space.num_vars - 1,
        degree=space.degree,
    )


def random_form(rng: random.Random, num_vars: int, degree: int, bound: int) -> Form:
    """Integer coefficients drawn uniformly from [-bound, bound] on every monomial."""
    terms = {e: Fraction(rng.randint(-bound, bound)) for e in monomials_of_degree(num_vars, degree)}
    return Form(num_vars, degree, terms)


def random_subspace(
    num_vars: int,
    degree: int,
    dim: int,
    seed: int,
    bound: int = 10,
    order: str = REVLEX,
) -> Subspace:
    """Span of dim random forms, re-drawn until independent; deterministic in seed."""
    ambient = comb(degree + num_vars - 1, num_vars - 1)
    if not 0 <= dim <= ambient:
        raise ValueError(f"dim {dim} out of range 0..{ambient}")
    rng = random.Random(seed)
    chosen: list[Form] = []
    space = echelonize([], order, num_vars=num_vars, degree=degree)
    while space.dim < dim:
        candidate = random_form(rng, num_vars, degree, bound)
        extended = echelonize(chosen + [candidate], order, num_vars=num_vars, degree=degree)
        if extended.dim > space.dim:
            chosen.append(candidate)
            space = extended
    return space


def full_graded_piece(num_vars: int, degree: int, order: str = REVLEX) -> Subspace:
    return echelonize(
        [Form.monomial(num_vars, e) for e in monomials_of_degree(num_vars, degree)],
        order,
        num_vars=num_vars,
        degree=degree,
    )
