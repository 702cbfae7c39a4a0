import random
from fractions import Fraction
from math import comb

import pytest

from ginalg import (
    REVLEX,
    CoordinateChange,
    Form,
    contains,
    echelonize,
    full_graded_piece,
    initial_subspace,
    monomials_of_degree,
    parse_form,
    random_subspace,
    restrict_subspace,
    transform_subspace,
)


def F(text, s):
    return parse_form(text, s)


def test_echelonize_elimination():
    space = echelonize([F("x1^2 + x2^2", 2), F("x2^2", 2)])
    assert [f for f in space.basis] == [F("x1^2", 2), F("x2^2", 2)]


def test_echelonize_dependence():
    f = F("2*x1*x3 - 4*x2^2", 3)
    space = echelonize([f, f * 2])
    assert space.dim == 1
    assert space.basis[0] == F("x2^2 - 1/2*x1*x3", 3)  # monic at the revlex pivot


def test_echelonize_leading_monomials():
    space = echelonize([F("x1*x3 - x2^2", 3), F("x1^2", 3)])
    assert set(space.leading_monomials()) == {(2, 0, 0), (0, 2, 0)}


def test_echelonize_mixed_degrees():
    with pytest.raises(ValueError, match="mixed degrees"):
        echelonize([F("x1", 2), F("x1^2", 2)])


def test_echelonize_canonical_under_shuffle_and_scale():
    rng = random.Random(3)
    base = [F("x1^2 + x2*x3", 3), F("x1*x2 - x3^2", 3), F("x2^2 + 2*x3^2", 3)]
    reference = echelonize(base)
    for _ in range(10):
        shuffled = base[:]
        rng.shuffle(shuffled)
        scaled = [f * Fraction(rng.randint(1, 5), rng.randint(1, 5)) for f in shuffled]
        again = echelonize(scaled)
        assert again == reference
        assert again.basis == reference.basis  # bit-equal canonical form


def test_initial_subspace():
    assert initial_subspace(echelonize([F("x1^2", 2), F("x1*x2", 2)])).exps == {(2, 0), (1, 1)}
    assert initial_subspace(echelonize([F("x1*x3 - x2^2", 3)])).exps == {(0, 2, 0)}
    full = full_graded_piece(3, 2)
    assert initial_subspace(full).exps == set(monomials_of_degree(3, 2))


def test_initial_subspace_cardinality_is_dim():
    for seed in range(10):
        space = random_subspace(3, 3, 1 + seed % 8, seed=seed)
        assert len(initial_subspace(space)) == space.dim


def test_contains():
    space = echelonize([F("x1^2", 2), F("x2^2", 2)])
    assert contains(space, F("3*x1^2 - x2^2", 2))
    assert not contains(space, F("x1*x2", 2))
    assert contains(space, Form.zero(2, 2))
    with pytest.raises(ValueError, match="degree mismatch"):
        contains(space, F("x1^3", 2))


def test_monotonicity_of_initial_subspace():
    for seed in range(8):
        big = random_subspace(3, 3, 5, seed=seed)
        small = echelonize(big.basis[:3], num_vars=3, degree=3)
        assert all(contains(big, f) for f in small.basis)
        assert initial_subspace(small).exps <= initial_subspace(big).exps


def test_transform_subspace():
    space = echelonize([F("x1^2", 2)])
    assert transform_subspace(space, CoordinateChange.identity(2)) == space
    swap = CoordinateChange([[0, 1], [1, 0]])
    assert transform_subspace(space, swap) == echelonize([F("x2^2", 2)])
    rng = random.Random(11)
    for seed in range(6):
        V = random_subspace(3, 2, 3, seed=seed)
        rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        try:
            change = CoordinateChange(rows)
        except ValueError:
            continue
        assert transform_subspace(V, change).dim == V.dim


def test_restrict_subspace():
    space = echelonize([F("x1*x4", 4), F("x2^2", 4)])
    restricted = restrict_subspace(space, F("x4", 4))
    assert restricted.dim == 1 and restricted.basis[0] == F("x2^2", 3)
    space = echelonize([F("x1^2", 3), F("x1*x2", 3)])
    assert restrict_subspace(space, F("x3", 3)).dim == 2


def test_revlex_restriction_identity():
    # in(V|_{x_s=0}) = in(V)|_{x_s=0}, a sample; the full sweep runs in acceptance
    for seed in range(25):
        s, d = 3 + seed % 2, 2 + seed % 2
        dim = 1 + seed % comb(d + s - 1, s - 1)
        V = random_subspace(s, d, dim, seed=100 + seed)
        lhs = initial_subspace(restrict_subspace(V, Form.variable(s, s)))
        rhs = initial_subspace(V).drop_last_variable()
        assert lhs == rhs


def test_random_subspace_contract():
    assert random_subspace(3, 2, 0, seed=1).dim == 0
    assert random_subspace(3, 2, 6, seed=1).dim == 6  # full graded piece
    assert random_subspace(3, 2, 3, seed=9) == random_subspace(3, 2, 3, seed=9)
    assert random_subspace(3, 2, 3, seed=9) != random_subspace(3, 2, 3, seed=10)
    with pytest.raises(ValueError, match="out of range"):
        random_subspace(3, 2, 7, seed=0)
