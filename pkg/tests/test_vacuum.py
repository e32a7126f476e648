import random
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan_ladder.algebra import (AM, AP, BM, BP, AlgebraElement, cubic_quartic_model,
                                   hamiltonian_element, harmonic_model, quartic_model,
                                   random_element, sextic_model)
from jordan_ladder.field import ParamRatio, parse
from jordan_ladder.vacuum import (VacuumVector, apply, apply_by_normal_order, pairing,
                                  pairing_by_normal_order, transpose, vacuum_expectation)

NAMED = [harmonic_model(), quartic_model(), cubic_quartic_model(), sextic_model()]
Ap, Am, Bp, Bm = (AlgebraElement.gen(g) for g in (AP, AM, BP, BM))
a, b = ParamRatio.var("a"), ParamRatio.var("b")
V0 = VacuumVector.vacuum()
M = VacuumVector.monomial


def test_transpose_examples():
    assert transpose(Ap) == -Am
    assert transpose(Bm) == -Bp
    assert transpose(Ap * Bp) == Bm * Am
    assert transpose(AlgebraElement.scalar(3)) == AlgebraElement.scalar(3)


@given(st.integers(0, 10 ** 6))
def test_transpose_involution_and_antimorphism(seed):
    rng = random.Random(seed)
    x, y = random_element(rng, max_length=3), random_element(rng, max_length=3)
    assert transpose(transpose(x)) == x
    assert transpose(x * y) == transpose(y) * transpose(x)


def test_lowering_annihilates_vacuum():
    for model in NAMED:
        assert not apply(Am, V0, model)
        assert not apply(Bm, V0, model)


def test_raising_is_free():
    m = quartic_model()
    assert apply(Ap * Ap * Bp, V0, m) == M(2, 1)
    assert apply(Ap, M(0, 2), m) == M(1, 2)


def test_apply_examples():
    m = quartic_model()
    assert apply(Am, M(0, 1), m) == M(0, 0, a * -2)
    assert apply(Bm, M(1, 0), m) == M(0, 0, a * -2)
    # B- B+ |0> = [B-, B+] |0> = -4b - (3 omega/a^2) (A+)^2 |0>
    want = VacuumVector({(0, 0): parse("-4*b"), (2, 0): parse("-3*omega/a^2")})
    assert apply(Bm, M(0, 1), m) == want


def test_vacuum_expectation_examples():
    m = quartic_model()
    assert vacuum_expectation(AlgebraElement.scalar(1), m) == 1
    assert vacuum_expectation(Am * Bp, m) == a * -2
    assert vacuum_expectation(Bm * Bp, m) == b * -4
    assert not vacuum_expectation(Ap * Am, m)


def test_pairing_examples():
    m = quartic_model()
    assert pairing(V0, V0, m) == 1
    assert pairing(M(1, 0), M(0, 1), m) == a * 2
    assert pairing(M(0, 1), M(0, 1), m) == b * 4
    assert not pairing(M(1, 0), M(1, 0), m)


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_three_routes_agree(model):
    rng = random.Random(3)
    for _ in range(15):
        x = random_element(rng, max_length=4)
        v = VacuumVector({(rng.randint(0, 3), rng.randint(0, 2)): rng.randint(1, 4) for _ in range(3)})
        assert apply(x, v, model) == apply_by_normal_order(x, v, model)
    keys = [(i, j) for i in range(4) for j in range(4 - i)]
    for p in keys:
        for q in keys:
            u, v = M(*p), M(*q)
            assert pairing(u, v, model) == pairing_by_normal_order(u, v, model)


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_pairing_symmetric(model):
    keys = [(i, j) for i in range(5) for j in range(5 - i)]
    for p in keys:
        for q in keys:
            assert pairing(M(*p), M(*q), model) == pairing(M(*q), M(*p), model)


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_h_pseudo_hermitian(model):
    h = hamiltonian_element(model)
    assert transpose(h) == h
    keys = [(i, j) for i in range(4) for j in range(4 - i)]
    for p in keys:
        for q in keys:
            u, v = M(*p), M(*q)
            assert pairing(u, apply(h, v, model), model) == pairing(apply(h, u, model), v, model)


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_lowering_chain_to_vacuum(model):
    for n in range(9):
        assert not apply(Am, M(n, 0), model)
        v = apply(AlgebraElement.word((AM,) * n), M(0, n), model)
        assert v == M(0, 0, (a * -2) ** n * factorial(n))
        # B- on (B+)^n |0> strictly lowers the B+ power
        if n:
            assert all(j < n for _, j in apply(Bm, M(0, n), model).support())


def test_vector_arithmetic():
    u = VacuumVector({(1, 0): 2, (0, 1): parse("b")})
    assert u - u == VacuumVector()
    assert u * 0 == VacuumVector()
    assert (u * 2).coefficient(1, 0) == 4
    assert u.total_degree() == 1 and VacuumVector().total_degree() == -1
    assert "Ap" in str(u)
