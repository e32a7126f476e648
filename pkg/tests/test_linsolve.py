import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan_ladder.field import ParamRatio, parse
from jordan_ladder.linsolve import InconsistentSystem, UnderdeterminedSystem, solve

R = parse


def test_symbolic_two_by_two():
    # a x + b y = 1, x - y = omega
    eqs = [({"x": R("a"), "y": R("b")}, R("1")), ({"x": R("1"), "y": R("-1")}, R("omega"))]
    sol = solve(eqs, ["x", "y"])
    assert sol["x"] == R("(1 + b*omega)/(a + b)")
    assert sol["y"] == R("(1 - a*omega)/(a + b)")


def test_inconsistent():
    eqs = [({"x": R("a")}, R("1")), ({"x": R("2*a")}, R("3"))]
    with pytest.raises(InconsistentSystem) as info:
        solve(eqs, ["x"])
    assert info.value.residuals


def test_underdetermined_reports_kernel():
    eqs = [({"x": R("1"), "y": R("b")}, R("a"))]
    with pytest.raises(UnderdeterminedSystem) as info:
        solve(eqs, ["x", "y"])
    exc = info.value
    assert exc.kernel_dimension == 1
    (vec,) = exc.kernel
    assert vec.get("x", ParamRatio.zero()) + R("b") * vec.get("y", ParamRatio.zero()) == 0


def test_unknown_column():
    with pytest.raises(ValueError):
        solve([({"z": R("1")}, R("0"))], ["x"])


def test_zero_rows_ignored():
    sol = solve([({"x": R("0")}, R("0")), ({"x": R("b")}, R("b^2"))], ["x"])
    assert sol == {"x": R("b")}


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_random_systems_residual(mat, xs):
    # exact solutions satisfy every equation; singular matrices raise
    cols = ["u", "v", "w"]
    a = ParamRatio.var("a")
    eqs = []
    for row in mat:
        coeffs = {c: ParamRatio(k) * (a + k) for c, k in zip(cols, row)}
        rhs = sum((coeffs[c] * x for c, x in zip(cols, xs)), ParamRatio.zero())
        eqs.append((coeffs, rhs))
    try:
        sol = solve(eqs, cols)
    except UnderdeterminedSystem:
        return
    for coeffs, rhs in eqs:
        assert sum((coeffs[c] * sol[c] for c in cols), ParamRatio.zero()) == rhs
