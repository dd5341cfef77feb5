import itertools
import random

import pytest

from twistchar.braidchar import braiding_character
from twistchar.errors import EnumerationLimitError
from twistchar.graded import Twist
from twistchar.oracle import (GradedVectorSpace, act_on_degrees, categorical_trace, compose,
                              koszul_sign, perm_action, projector_dim)
from twistchar.symgroup import cycle_type, from_cycles

from brute import rank, swap_sign_by_transpositions

TRIV, KOS = Twist.trivial(), Twist.koszul()


def test_koszul_sign_examples():
    swap = from_cycles([(1, 2)], 2)
    assert koszul_sign(swap, (1, 1)) == -1
    assert koszul_sign(swap, (1, 2)) == 1
    assert koszul_sign(from_cycles([(1, 2, 3)], 3), (1, 1, 1)) == 1


@pytest.mark.parametrize("m", range(1, 6))
def test_koszul_sign_matches_adjacent_swaps(m):
    rng = random.Random(m)
    for perm in itertools.permutations(range(m)):
        degs = tuple(rng.randint(0, 3) for _ in range(m))
        assert koszul_sign(perm, degs) == swap_sign_by_transpositions(perm, degs)


def test_koszul_sign_cocycle():
    rng = random.Random(7)
    for _ in range(300):
        m = rng.randint(1, 6)
        sigma = tuple(rng.sample(range(m), m))
        tau = tuple(rng.sample(range(m), m))
        degs = tuple(rng.randint(-2, 3) for _ in range(m))
        lhs = koszul_sign(compose(sigma, tau), degs)
        rhs = koszul_sign(sigma, act_on_degrees(tau, degs)) * koszul_sign(tau, degs)
        assert lhs == rhs


def test_perm_action_examples():
    line = GradedVectorSpace.concentrated(1, degree=1)
    plane = GradedVectorSpace.concentrated(2, degree=0)
    assert perm_action((0, 1), plane, 2, KOS).to_dense() == [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert perm_action((1, 0), line, 2, KOS).to_dense() == [[-1]]
    # basis order 00, 01, 10, 11
    assert perm_action((1, 0), plane, 2, TRIV).to_dense() == [
        [1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


@pytest.mark.parametrize("twist", [TRIV, KOS])
def test_perm_action_is_homomorphism(twist):
    rng = random.Random(11)
    space = GradedVectorSpace(((0, 1), (1, 0)))
    for _ in range(60):
        m = rng.randint(1, 4)
        sigma = tuple(rng.sample(range(m), m))
        tau = tuple(rng.sample(range(m), m))
        lhs = perm_action(compose(sigma, tau), space, m, twist)
        rhs = perm_action(sigma, space, m, twist) @ perm_action(tau, space, m, twist)
        assert lhs.entries == rhs.entries


def test_perm_action_cap():
    with pytest.raises(EnumerationLimitError):
        perm_action(tuple(range(13)), GradedVectorSpace.concentrated(2), 13, TRIV)


def test_categorical_trace_examples():
    plane1 = GradedVectorSpace.concentrated(2, degree=1)
    assert categorical_trace(perm_action((0, 1), plane1, 2, KOS), 2, KOS) == 4
    three_cycle = perm_action(from_cycles([(1, 2, 3)], 3), plane1, 3, KOS)
    assert three_cycle.naive_trace() == 2
    assert categorical_trace(three_cycle, 3, KOS) == -2
    line = GradedVectorSpace.concentrated(1, degree=1)
    assert categorical_trace(perm_action((1, 0), line, 2, KOS), 2, KOS) == -1


def test_per_basis_degrees_agree_with_total_degree():
    space = GradedVectorSpace.concentrated(2, degree=1)
    for perm in itertools.permutations(range(3)):
        mat = perm_action(perm, space, 3, KOS)
        assert categorical_trace(mat, None, KOS) == categorical_trace(mat, 3, KOS)


@pytest.mark.parametrize("twist", [TRIV, KOS])
def test_trace_is_conjugation_invariant(twist):
    space = GradedVectorSpace(((0, 0), (1, 1), (2, 1)))
    m = 3
    perms = list(itertools.permutations(range(m)))
    traces = {}
    for perm in perms:
        t = categorical_trace(perm_action(perm, space, m, twist), None, twist)
        traces.setdefault(cycle_type(perm), set()).add(t)
    assert all(len(v) == 1 for v in traces.values())


@pytest.mark.parametrize("twist", [TRIV, KOS])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_trace_equals_closed_form_on_every_element(twist, d):
    space = GradedVectorSpace.concentrated(d, degree=1)
    for m in range(5):
        table = braiding_character(twist, d, m)
        for perm in itertools.permutations(range(m)):
            trace = categorical_trace(perm_action(perm, space, m, twist), m, twist)
            assert trace == table.value_at(cycle_type(perm))


def test_projector_dim_examples():
    assert projector_dim(GradedVectorSpace.concentrated(2, 0), 2, TRIV) == 3
    assert projector_dim(GradedVectorSpace.concentrated(2, 1), 2, KOS) == 1
    assert projector_dim(GradedVectorSpace.concentrated(1, 1), 2, KOS) == 0


@pytest.mark.parametrize("twist", [TRIV, KOS])
@pytest.mark.parametrize("d,m", [(1, 3), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_projector_dim_is_signed_rank(twist, d, m):
    space = GradedVectorSpace.concentrated(d, degree=1)
    n = d ** m
    total = [[0] * n for _ in range(n)]
    for perm in itertools.permutations(range(m)):
        dense = perm_action(perm, space, m, twist).to_dense()
        total = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(total, dense)]
    sign = (-1) ** m if twist is KOS else 1
    result = projector_dim(space, m, twist)
    assert result.denominator == 1
    assert result == sign * rank(total)


def test_mixed_degree_projector_is_integral():
    # one even and one odd generator: Sym^2 has dimension 1 + 1 + 0 in the super sense
    space = GradedVectorSpace(((0, 0), (1, 1)))
    for m in range(5):
        assert projector_dim(space, m, KOS).denominator == 1
    assert projector_dim(space, 2, KOS) == 0
