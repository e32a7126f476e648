"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from jordan_ladder.field import ParamPoly, ParamRatio

VARS = ("a", "b", "omega", "epsilon")

small_ints = st.integers(min_value=-6, max_value=6)
exponents = st.tuples(*[st.integers(0, 3) for _ in VARS])


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.lists(st.tuples(exponents, small_ints), min_size=0, max_size=max_terms))
    out = ParamPoly()
    for exps, c in terms:
        out = out + _mono(exps, c)
    return out


def _mono(exps, c):
    p = ParamPoly.constant(c)
    for name, e in zip(VARS, exps):
        if e:
            p = p * ParamPoly.variable(name, e)
    return p


@st.composite
def ratios(draw):
    num = draw(polys())
    den = draw(polys(max_terms=3).filter(bool))
    return ParamRatio(num, den)


points = st.fixed_dictionaries({
    "a": st.integers(1, 9), "b": st.integers(1, 9),
    "omega": st.integers(-9, 9), "epsilon": st.integers(-9, 9)})
