import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordan_ladder.algebra import (AM, AP, BM, BP, AlgebraElement, commutator_table,
                                   cubic_quartic_model, custom_model, hamiltonian_element,
                                   harmonic_model, quartic_model, random_element, sextic_model)
from jordan_ladder.chain import eigenstate, energy
from jordan_ladder.field import ParamRatio, parse
from jordan_ladder.pde import (MomentTable, PrefactorFn, apply_element, apply_operator,
                               exp_series, from_vacuum, integral_pairing, normalized_pairing,
                               random_prefactor, verify_commutator, verify_identity)
from jordan_ladder.vacuum import VacuumVector, apply, pairing

NAMED = [harmonic_model(), quartic_model(), cubic_quartic_model(), sextic_model()]
Ap, Am, Bp, Bm = (AlgebraElement.gen(g) for g in (AP, AM, BP, BM))
a = ParamRatio.var("a")
ONE = PrefactorFn.one()


def test_lowering_kills_ground_state():
    for model in NAMED:
        assert not apply_operator("Am", ONE, model)
        assert not apply_operator("Bm", ONE, model)


def test_raising_examples():
    m = quartic_model()
    assert apply_operator("Ap", ONE, m) == PrefactorFn({(0, 1): a * -2})
    # B+ Psi0 = -2(a z + F') Psi0 with F' = 2b zbar + 2 omega zbar^3
    want = PrefactorFn({(1, 0): a * -2, (0, 1): parse("-4*b"), (0, 3): parse("-4*omega")})
    assert apply_operator("Bp", ONE, m) == want


def test_unknown_operator():
    with pytest.raises(ValueError):
        apply_operator("Cp", ONE, quartic_model())


def test_moments_and_series():
    mt = MomentTable()
    assert mt(0, 0) == (a * 2).inverse()
    assert mt(2, 2) == (a * 2).inverse() ** 3 * 2
    assert not mt(1, 2)
    e = exp_series(harmonic_model(), 4)
    b = ParamRatio.var("b")
    assert e == [ParamRatio.one(), ParamRatio.zero(), b * -2, ParamRatio.zero(), b * b * 2]


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_eigenstates_are_triangular_and_exact(model):
    for n in range(7):
        f = from_vacuum(eigenstate(n), model)
        assert f == PrefactorFn({(0, n): ParamRatio.one()})
        hf = apply_operator("H", f, model)
        assert hf == f * energy(n)


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_representation_equivalence(model):
    rng = random.Random(11)
    for _ in range(10):
        x = random_element(rng, max_length=3)
        v = VacuumVector({(rng.randint(0, 3), rng.randint(0, 2)): rng.randint(1, 4) for _ in range(2)})
        assert apply_element(x, from_vacuum(v, model), model) == from_vacuum(apply(x, v, model), model)


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_pairing_matches_integral(model):
    keys = [(i, j) for i in range(4) for j in range(4 - i)]
    for p in keys:
        for q in keys:
            u, v = VacuumVector.monomial(*p), VacuumVector.monomial(*q)
            got = normalized_pairing(from_vacuum(u, model), from_vacuum(v, model), model)
            assert got == pairing(u, v, model)


def test_integral_pairing_keeps_pi_formal():
    m = harmonic_model()
    val = integral_pairing(ONE, ONE, m)
    assert val.coeff == (a * 2).inverse()
    assert str(val).startswith("pi*")


@pytest.mark.parametrize("model", NAMED, ids=lambda m: m.name)
def test_commutators_differential(model):
    t = commutator_table(model)
    for (g, h), claimed in t.items():
        assert verify_commutator(g, h, claimed, model, trials=4)
    h = hamiltonian_element(model)
    assert verify_identity(h, "H", model, trials=6)
    assert verify_commutator(h, Ap, Ap * (a * 4), model, trials=6)


def test_wrong_claim_detected():
    m = quartic_model()
    assert not verify_commutator(Am, Bp, AlgebraElement.scalar(a * 2), m, trials=3)
    assert not verify_commutator("Bm", "Bp", AlgebraElement.scalar(parse("-4*b")), m, trials=3)


def test_custom_model_commutator():
    m = custom_model("2:b,5:c5")
    t = commutator_table(m)
    assert verify_commutator(BM, BP, t[(BM, BP)], m, trials=5)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_prefactor_algebra(seed):
    rng = random.Random(seed)
    f, g, h = (random_prefactor(rng, max_degree=4) for _ in range(3))
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f) == PrefactorFn()
    assert (f * g).degree() <= f.degree() + g.degree()
