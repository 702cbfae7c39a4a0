"""Monomial-ideal combinatorics: minimal generators, Hilbert functions,
Borel-fixedness, colon by the last variable, and enumeration of the
admissible initial-ideal candidates cut out by those constraints."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .forms import (
    REVLEX,
    Exponent,
    format_monomial,
    monomial_key,
    monomials_of_degree,
    parse_form,
)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _canonical_sort(gens) -> tuple[Exponent, ...]:
    # ascending degree, then descending revlex within a degree
    return tuple(
        sorted(gens, key=lambda e: (sum(e), tuple(-k for k in monomial_key(REVLEX, e))))
    )


@dataclass(frozen=True)
class MonomialIdeal:
    """Finite minimal generator set; construct through minimalize()."""

    num_vars: int
    gens: tuple[Exponent, ...]

    def degrees(self) -> list[int]:
        return [sum(e) for e in self.gens]

    def strings(self) -> list[str]:
        return [format_monomial(e) for e in self.gens]

    def __str__(self) -> str:
        return ", ".join(self.strings()) if self.gens else "0"

    def __len__(self) -> int:
        return len(self.gens)


def minimalize(gens, num_vars: int) -> MonomialIdeal:
    """Drop every monomial divisible by another; result is the minimal basis."""
    unique = list(dict.fromkeys(tuple(e) for e in gens))
    kept = [
        m
        for i, m in enumerate(unique)
        if not any(_divides(other, m) for j, other in enumerate(unique) if j != i and other != m)
    ]
    return MonomialIdeal(num_vars, _canonical_sort(kept))


def contains_monomial(ideal: MonomialIdeal, exps: Exponent) -> bool:
    exps = tuple(exps)
    return any(_divides(g, exps) for g in ideal.gens)


def ideal_monomials_of_degree(ideal: MonomialIdeal, degree: int) -> list[Exponent]:
    return [e for e in monomials_of_degree(ideal.num_vars, degree) if contains_monomial(ideal, e)]


def hilbert_function(ideal: MonomialIdeal, degree: int) -> int:
    """dim of the degree-d piece of the quotient ring S/J (quotient convention)."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    total = comb(degree + ideal.num_vars - 1, ideal.num_vars - 1)
    return total - len(ideal_monomials_of_degree(ideal, degree))


def is_borel_fixed(ideal: MonomialIdeal) -> bool:
    """Characteristic-zero criterion: every exchange (x_j/x_i)*m, j < i, stays inside."""
    for g in ideal.gens:
        for i, e in enumerate(g):
            if e == 0:
                continue
            for j in range(i):
                moved = list(g)
                moved[i] -= 1
                moved[j] += 1
                if not contains_monomial(ideal, tuple(moved)):
                    return False
    return True


def colon_by_last_variable(ideal: MonomialIdeal) -> MonomialIdeal:
    """J : x_s, generated by g/x_s for generators divisible by x_s, else g."""
    moved = []
    for g in ideal.gens:
        if g[-1] > 0:
            moved.append(g[:-1] + (g[-1] - 1,))
        else:
            moved.append(g)
    return minimalize(moved, ideal.num_vars)


def is_saturated_in_last_variable(ideal: MonomialIdeal) -> bool:
    return colon_by_last_variable(ideal) == ideal


def parse_ideal(text: str, num_vars: int) -> MonomialIdeal:
    """Comma-separated monic monomials, e.g. "x1^2, x1*x2, x3^4"."""
    gens = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        f = parse_form(chunk, num_vars)
        if len(f.terms) != 1:
            raise ValueError(f"not a monomial: {chunk!r}")
        ((exps, coeff),) = f.terms.items()
        if coeff != 1:
            raise ValueError(f"monomial generators must have coefficient 1: {chunk!r}")
        gens.append(exps)
    return minimalize(gens, num_vars)


def format_ideal(ideal: MonomialIdeal) -> str:
    return str(ideal)


# -- candidate enumeration ---------------------------------------------------


def _shift_up(monomials: set, num_vars: int) -> set:
    """All products of the given monomials with one variable."""
    out = set()
    for m in monomials:
        for i in range(num_vars):
            out.add(m[:i] + (m[i] + 1,) + m[i + 1 :])
    return out


def _is_borel_closed_set(monomials: set) -> bool:
    for m in monomials:
        for i, e in enumerate(m):
            if e == 0:
                continue
            for j in range(i):
                moved = list(m)
                moved[i] -= 1
                moved[j] += 1
                if tuple(moved) not in monomials:
                    return False
    return True


def _borel_closed_extensions(base: set, degree: int, size: int, num_vars: int):
    """Borel-closed degree-d sets of the given size containing base."""
    if len(base) > size:
        return
    pool = [m for m in monomials_of_degree(num_vars, degree) if m not in base]
    if size - len(base) > len(pool):
        return
    for extra in combinations(pool, size - len(base)):
        candidate = base | set(extra)
        if _is_borel_closed_set(candidate):
            yield candidate


def enumerate_gin_candidates(num_vars: int, quotient_hf, dmax: int) -> list[MonomialIdeal]:
    """All monomial ideals with generators of degree <= dmax matching the
    quotient Hilbert function through dmax+1, Borel-fixed, and saturated in
    the last variable.

    quotient_hf values beyond the given list repeat the last entry
    (a stabilizing tail).  Saturation plus Borel-fixedness confine minimal
    generators to the first num_vars - 1 variables: a generator divisible
    by x_s would have m/x_s in J : x_s = J, contradicting minimality.  The
    search therefore runs over Borel-closed monomial sets in those
    variables, degree by degree; every candidate is re-verified against
    the three defining predicates before being returned, and the
    confinement is asserted per candidate rather than assumed.
    """
    hf = list(quotient_hf)
    if not hf:
        raise ValueError("quotient Hilbert function must be nonempty")
    if dmax < 1:
        raise ValueError("dmax must be at least 1")
    if num_vars < 2:
        raise ValueError("need at least two variables")

    def hf_at(d: int) -> int:
        return hf[d] if d < len(hf) else hf[-1]

    s = num_vars
    # A saturated ideal with last-variable-free generators is determined by
    # its last-variable-free slices T_d; the ideal's degree-d monomial count
    # is the running sum of |T_e| for e <= d.
    ideal_counts = []
    for d in range(dmax + 2):
        count = comb(d + s - 1, s - 1) - hf_at(d)
        if count < 0:
            return []
        ideal_counts.append(count)
    slice_sizes = [ideal_counts[0]] + [
        ideal_counts[d] - ideal_counts[d - 1] for d in range(1, dmax + 2)
    ]
    if any(t < 0 for t in slice_sizes) or slice_sizes[0] > 0:
        return []
    if any(slice_sizes[d] > comb(d + s - 2, s - 2) for d in range(dmax + 2)):
        return []

    results: list[MonomialIdeal] = []

    def extend(d: int, previous: set, chosen: list[set]) -> None:
        if d > dmax:
            monomials = [m + (0,) for layer in chosen for m in layer]
            candidate = minimalize(monomials, s)
            assert all(g[-1] == 0 for g in candidate.gens), "generator involves the last variable"
            if not all(hilbert_function(candidate, e) == hf_at(e) for e in range(dmax + 2)):
                return
            if not is_borel_fixed(candidate) or not is_saturated_in_last_variable(candidate):
                return
            results.append(candidate)
            return
        base = _shift_up(previous, s - 1) if previous else set()
        for layer in _borel_closed_extensions(base, d, slice_sizes[d], s - 1):
            extend(d + 1, layer, chosen + [layer])

    extend(1, set(), [])
    # same comparison as the canonical generator storage order
    results.sort(key=lambda J: [(sum(g), tuple(-k for k in monomial_key(REVLEX, g))) for g in J.gens])
    return results
