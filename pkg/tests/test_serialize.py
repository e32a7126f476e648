import json

import pytest

from jordan_ladder.algebra import custom_model, model_by_name
from jordan_ladder.chain import solve_chain
from jordan_ladder.serialize import (alpha_prefactor, chain_from_json, chain_to_dict,
                                     chain_to_json, chain_to_latex, chain_to_text, latex_coeff)
from jordan_ladder.field import parse


@pytest.mark.parametrize("name,n", [("quartic", 3), ("cubic-quartic", 2), ("harmonic", 0)])
def test_json_roundtrip(name, n):
    ch = solve_chain(model_by_name(name), n)
    back = chain_from_json(chain_to_json(ch))
    assert back.states == ch.states and back.model == ch.model and back.energy == ch.energy


def test_json_custom_roundtrip():
    ch = solve_chain(custom_model("2:b,5:c5"), 1)
    back = chain_from_json(chain_to_json(ch))
    assert back.states == ch.states


def test_json_schema_and_determinism():
    ch = solve_chain(model_by_name("quartic"), 2)
    doc = chain_to_dict(ch, ["quartic-list/Psi2,1/t1"])
    assert set(doc) == {"schema", "model", "f", "n", "energy", "c_squared", "states", "citations"}
    assert doc["states"][0]["terms"] == [{"i": 2, "j": 0, "coeff": "1/(4*a^2)"}]
    assert chain_to_json(ch) == chain_to_json(solve_chain(model_by_name("quartic"), 2))


def test_json_rejects_tampering():
    doc = json.loads(chain_to_json(solve_chain(model_by_name("quartic"), 1)))
    bad = dict(doc, c_squared="2")
    with pytest.raises(ValueError):
        chain_from_json(json.dumps(bad))
    bad = dict(doc, f={"2": "b"})
    with pytest.raises(ValueError):
        chain_from_json(json.dumps(bad))
    bad = dict(doc, states=doc["states"][:1])
    with pytest.raises(ValueError):
        chain_from_json(json.dumps(bad))


def test_latex_quartic_n1():
    tex = chain_to_latex(solve_chain(model_by_name("quartic"), 1))
    assert (r"\Psi_{1,1} &= \frac{c_{1,0}}{16ab} \biggl\{\frac{b}{a} A^+ - B^+ + "
            r"\frac{3\omega}{4a^{3}} (A^+)^{3}\biggr\} \Psi_0") in tex
    assert tex.startswith("\\begin{align}") and tex.rstrip().endswith("\\end{align}")


def test_latex_helpers():
    assert alpha_prefactor(2) == parse("1/(32*a^2*b)")
    assert latex_coeff(parse("-1")) == (-1, "")
    assert latex_coeff(parse("3*omega - 4*b^2")) == (1, r"(3\omega - 4b^{2})")
    assert latex_coeff(parse("(3*omega-4*b^2)/(4*a*b)")) == (1, r"\frac{3\omega - 4b^{2}}{4ab}")


def test_text_output():
    txt = chain_to_text(solve_chain(model_by_name("quartic"), 1))
    assert "[3,0] 3*omega/(64*a^4*b)" in txt
    assert txt.splitlines()[1] == "n = 1  E_n = 8*a  c^2 = 16*a*b"
