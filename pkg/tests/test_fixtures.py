import pytest

from jordan_ladder.algebra import model_by_name
from jordan_ladder.chain import check_chain, solve_chain
from jordan_ladder.field import parse
from jordan_ladder.fixtures import (EXACT, MISMATCH, MISSING, SIGN, TYPO, FixtureError,
                                    available_fixtures, compare_to_paper, demonstrate_typos,
                                    fixture_for, harmonic_fixture, load_fixture,
                                    model_for_fixture, parse_fixture, printed_chain)

SAMPLE = """
# comment
@model quartic
@n 1
@prefactor 1/(16*a*b)
1 1 0 b/a quartic-text/Psi1,1/t1 high
1 0 1 -1 quartic-text/Psi1,1/t2 high
1 3 0 3*omega/(4*a^3) quartic-text/Psi1,1/t3 high "a note"
"""


def test_parse_sample():
    fx = parse_fixture(SAMPLE)
    assert fx.model == "quartic" and fx.n == 1
    assert len(fx.lines) == 3 and fx.lines[2].note == "a note"
    assert fx.levels() == [1] and fx.flagged() == []
    assert fx.state(1).coefficient(3, 0) == parse("3*omega/(64*a^4*b)")


@pytest.mark.parametrize("bad", [
    SAMPLE.replace("@n 1\n", ""),
    SAMPLE.replace(" high \"a", " maybe \"a"),
    SAMPLE.replace("b/a quartic", "b/(a quartic"),
    SAMPLE + "1 1 0 1 quartic-text/Psi1,1/t1 high\n",
    SAMPLE + "1 1 0\n",
])
def test_parse_errors(bad):
    with pytest.raises(FixtureError):
        parse_fixture(bad)


def test_available():
    have = available_fixtures()
    assert ("quartic", 5) in have and ("sextic", 2) in have and ("cubic-quartic", 1) in have
    with pytest.raises(FixtureError):
        load_fixture("quartic", 9)
    with pytest.raises(FixtureError):
        fixture_for("sextic", 7)


@pytest.mark.parametrize("model,n", [(m, n) for m, n in available_fixtures()])
def test_printed_tables(model, n):
    fx = load_fixture(model, n)
    chain = solve_chain(model_for_fixture(fx), n)
    report = compare_to_paper(chain, fx)
    assert report.ok
    assert not any(e.status in (MISSING, MISMATCH, SIGN) for e in report.entries)
    demos = demonstrate_typos(chain, fx)
    for e in report.entries:
        if e.status == TYPO:
            assert demos[e.citation], e.citation
    assert check_chain(chain) == []


def test_flag_counts():
    a4 = compare_to_paper(solve_chain(model_by_name("quartic"), 4), load_fixture("quartic", 4))
    a5 = compare_to_paper(solve_chain(model_by_name("quartic"), 5), load_fixture("quartic", 5))
    assert a4.counts().get(TYPO) == 1
    assert a5.counts().get(TYPO) == 6
    assert len(load_fixture("quartic", 5).flagged()) == 7


def test_dimensional_typo_in_n5():
    fx = load_fixture("quartic", 5)
    chain = solve_chain(model_by_name("quartic"), 5)
    (line,) = [ln for ln in fx.flagged() if (ln.m, ln.i, ln.j) == (2, 7, 0)]
    assert "2*b)" in line.text.replace(" ", "")
    assert check_chain(printed_chain(chain, fx, [line]))


@pytest.mark.parametrize("n", range(1, 5))
def test_harmonic_fixture(n):
    report = compare_to_paper(solve_chain(model_by_name("harmonic"), n), harmonic_fixture(n))
    assert all(e.status == EXACT for e in report.entries)


def test_missing_and_sign_detected():
    fx = parse_fixture(SAMPLE.replace("1 0 1 -1", "1 0 1 1").replace(
        "1 3 0 3*omega/(4*a^3) quartic-text/Psi1,1/t3 high \"a note\"\n", ""))
    report = compare_to_paper(solve_chain(model_by_name("quartic"), 1), fx)
    kinds = report.counts()
    assert kinds == {EXACT: 1, SIGN: 1, MISSING: 1}
    assert not report.ok and len(report.problems()) == 2


def test_level_mismatch():
    with pytest.raises(FixtureError):
        compare_to_paper(solve_chain(model_by_name("quartic"), 2), parse_fixture(SAMPLE))
