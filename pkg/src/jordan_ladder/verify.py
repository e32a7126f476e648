"""Verification suites shared by the CLI and the acceptance tests.

Every check returns ``Check(name, ok, detail)``; nothing here raises on a
failed identity.
"""
import random
import time
from dataclasses import dataclass

from . import pde
from .algebra import (AM, AP, BM, BP, AlgebraElement, Generator, commutator, commutator_table,
                      energy, hamiltonian_element, model_by_name, normal_order, printed_hamiltonian_element,
                      zbar_element)
from .chain import (ChainError, check_chain, expected_jordan_matrix, harmonic_closed_form,
                    jordan_matrix, solve_chain)
from .field import ParamRatio, parse
from .fixtures import FixtureError, compare_to_paper, demonstrate_typos, load_fixture
from .vacuum import VacuumVector, pairing_for


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _timed(name, fn):
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except ChainError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, ok, detail, time.perf_counter() - t)


# ---------------------------------------------------------------------------
# printed operator identities


def _gens():
    return tuple(AlgebraElement.gen(g) for g in (AP, AM, BP, BM))


def fsecond_element(model):
    """F''(zbar) with zbar = (Am - Ap)/(2a)."""
    zb = zbar_element()
    out = AlgebraElement()
    for d, c in model.fsecond_coeffs().items():
        out = out + (zb ** d) * c
    return out


def general_h_b(model, sign):
    """[H, B+-] = +-(4a B+- + 4 F''(zbar) A+-)."""
    ap, am, bp, bm = _gens()
    a = ParamRatio.var("a")
    b, g = (bp, ap) if sign > 0 else (bm, am)
    return (b * (a * 4) + fsecond_element(model) * 4 * g) * sign


def printed_identities(model):
    """{label: (lhs pair or None, claimed element)} for the typeset
    commutators of a named model.  Custom models get the general F'' form."""
    ap, am, bp, bm = _gens()
    a = ParamRatio.var("a")
    b, w, e = parse("b"), parse("omega"), parse("epsilon")
    plus, minus = ap - am, am - ap
    out = {
        "[H,Ap] = 4a Ap": (("H", "Ap"), ap * (a * 4)),
        "[H,Am] = -4a Am": (("H", "Am"), am * (a * -4)),
        "[Am,Ap] = 0": (("Am", "Ap"), AlgebraElement()),
        "[Ap,Bm] = 2a": (("Ap", "Bm"), AlgebraElement.scalar(a * 2)),
        "[Am,Bp] = -2a": (("Am", "Bp"), AlgebraElement.scalar(a * -2)),
        "[Ap,Bp] = 0": (("Ap", "Bp"), AlgebraElement()),
        "[Am,Bm] = 0": (("Am", "Bm"), AlgebraElement()),
    }
    name = model.name
    if name == "harmonic":
        hb = {s: (bp if s > 0 else bm) * (a * 4 * s) + (ap if s > 0 else am) * (b * 8 * s) for s in (1, -1)}
        bb = AlgebraElement.scalar(b * -4)
    elif name == "quartic":
        hb = {s: ((bp if s > 0 else bm) * (a * 4) + (ap if s > 0 else am) * (b * 8)
                  + plus * plus * (ap if s > 0 else am) * (w * 6 / a ** 2)) * s for s in (1, -1)}
        bb = AlgebraElement.scalar(b * -4) - plus * plus * (w * 3 / a ** 2)
    elif name == "cubic-quartic":
        hb = {s: ((bp if s > 0 else bm) * (a * 4) + (ap if s > 0 else am) * (b * 8)
                  + minus * (ap if s > 0 else am) * (e * 8 / a)
                  + minus * minus * (ap if s > 0 else am) * (w * 6 / a ** 2)) * s for s in (1, -1)}
        bb = AlgebraElement.scalar(b * -4) - minus * (e * 4 / a) - minus * minus * (w * 3 / a ** 2)
    elif name == "sextic":
        p4 = plus * plus * plus * plus
        hb = {s: ((bp if s > 0 else bm) * (a * 4) + (ap if s > 0 else am) * (b * 8)
                  + plus * plus * (ap if s > 0 else am) * (w * 6 / a ** 2)
                  + p4 * (ap if s > 0 else am) * (e * 5 / (a ** 4 * 2))) * s for s in (1, -1)}
        bb = AlgebraElement.scalar(b * -4) - plus * plus * (w * 3 / a ** 2) - p4 * (e * 5 / (a ** 4 * 4))
    else:
        hb = {s: general_h_b(model, s) for s in (1, -1)}
        bb = fsecond_element(model) * -2
    out["[H,Bp]"] = (("H", "Bp"), hb[1])
    out["[H,Bm]"] = (("H", "Bm"), hb[-1])
    out["[Bm,Bp]"] = (("Bm", "Bp"), bb)
    return out


def _alg(x, model):
    if x == "H":
        return hamiltonian_element(model)
    return AlgebraElement.gen(Generator.from_label(x))


def check_operator_identities(model, trials=20, seed=0, max_degree=6):
    """Each printed identity as (a) an algebra identity after normal ordering
    and (b) a differential-operator identity on random prefactors."""
    checks = []
    rng = random.Random(seed)
    for label, ((x, y), claimed) in printed_identities(model).items():
        def alg(x=x, y=y, claimed=claimed):
            lhs = normal_order(commutator(_alg(x, model), _alg(y, model)), model)
            return lhs == normal_order(claimed, model), ""

        def diff(x=x, y=y, claimed=claimed):
            ok = pde.verify_commutator(x, y, claimed, model, trials=trials, rng=rng, max_degree=max_degree)
            return ok, f"{trials} random prefactors, degree <= {max_degree}"
        checks.append(_timed(f"{model.name}: {label} (algebra)", alg))
        checks.append(_timed(f"{model.name}: {label} (differential)", diff))

    def h_form():
        ok = pde.verify_identity("H", hamiltonian_element(model), model, trials=trials, rng=rng,
                                 max_degree=max_degree)
        return ok, "-4 d d + 4a^2 z zbar + 4a zbar F' = -2(Ap Bm + Bp Am) + 4a"
    checks.append(_timed(f"{model.name}: H ladder form (differential)", h_form))
    return checks


def check_printed_hamiltonian_fails(model, trials=5, seed=0):
    """The typeset sign +2(Ap Bm + Bp Am) + 4a must NOT reproduce H."""
    def run():
        rng = random.Random(seed)
        bad = printed_hamiltonian_element()
        agrees = pde.verify_identity("H", bad, model, trials=trials, rng=rng)
        # with the printed sign, [H, Ap] would be -4a Ap
        c = normal_order(commutator(bad, AlgebraElement.gen(AP)), model)
        return (not agrees) and c == AlgebraElement.gen(AP) * (ParamRatio.var("a") * -4), \
            "printed sign gives 8a - H"
    return _timed(f"{model.name}: printed H sign rejected", run)


def check_algebra_axioms(model):
    """Antisymmetry and Jacobi on the commutator table."""
    def run():
        table = commutator_table(model)
        gens = list(Generator)
        for g in gens:
            for h in gens:
                if table[(g, h)] != -table[(h, g)]:
                    return False, f"antisymmetry fails for {g.label},{h.label}"
        el = {g: AlgebraElement.gen(g) for g in gens}
        for x in gens:
            for y in gens:
                for z in gens:
                    j = (commutator(el[x], commutator(el[y], el[z]))
                         + commutator(el[y], commutator(el[z], el[x]))
                         + commutator(el[z], commutator(el[x], el[y])))
                    if normal_order(j, model):
                        return False, f"Jacobi fails for {x.label},{y.label},{z.label}"
        return True, "16 pairs, 64 triples"
    return _timed(f"{model.name}: antisymmetry and Jacobi", run)


# ---------------------------------------------------------------------------
# pairing


def monomials(max_total):
    return [(i, d - i) for d in range(max_total + 1) for i in range(d, -1, -1)]


def check_pairing_oracle(model, max_total=6):
    def run():
        G = pairing_for(model)
        mons = monomials(max_total)
        fs = {k: pde.from_vacuum(VacuumVector.monomial(*k), model) for k in mons}
        bad = [(p, q) for p in mons for q in mons
               if pde.normalized_pairing(fs[p], fs[q], model) != G.basis(p, q)]
        return not bad, f"{len(mons) ** 2} monomial pairs, i+j <= {max_total}" + (f", first bad {bad[0]}" if bad else "")
    return _timed(f"{model.name}: algebraic pairing = integral pairing", run)


def check_norms(model):
    def run():
        one = pde.PrefactorFn.one()
        val = pde.integral_pairing(one, one, model)
        want = (ParamRatio.var("a") * 2).inverse()
        return val.coeff == want, f"integral_pairing(1,1) = {val}"
    return _timed(f"{model.name}: <<Psi0|Psi0>> = pi/(2a)", run)


# ---------------------------------------------------------------------------
# chains


def chain_checks(chain, oracle=True):
    """cond1, cond2, Jordan-block pattern and (optionally) the PDE chain equation."""
    model, n = chain.model, chain.n
    tag = f"{model.name} n={n}"
    checks = []

    def invariants():
        failures = check_chain(chain)
        return not failures, "; ".join(str(f) for f in failures[:3])
    checks.append(_timed(f"{tag}: cond1 + cond2", invariants))

    def gram00():
        G = pairing_for(model)
        v = chain.c_squared * G(chain.states[0], chain.states[0])
        return v == (1 if n == 0 else 0), f"c^2 G(Phi0, Phi0) = {v}"
    checks.append(_timed(f"{tag}: self-orthogonality", gram00))

    def jordan():
        return jordan_matrix(chain) == expected_jordan_matrix(n), "E_n anti-diagonal + shifted ones"
    checks.append(_timed(f"{tag}: Jordan block pattern", jordan))

    if oracle:
        def pde_chain():
            h_minus = [pde.from_vacuum(v, model) for v in chain.states]
            e = energy(n)
            for m, f in enumerate(h_minus):
                lhs = pde.apply_operator("H", f, model) - f * e
                rhs = h_minus[m - 1] if m else pde.PrefactorFn()
                if lhs != rhs:
                    return False, f"m={m}"
            return True, "differential (H - E_n) on every state"
        checks.append(_timed(f"{tag}: chain equation (differential)", pde_chain))
    return checks


def check_harmonic_closed_form(n):
    def run():
        chain = solve_chain(model_by_name("harmonic"), n)
        bad = [m for m in range(n + 1) if chain.states[m] != harmonic_closed_form(n, m)]
        return not bad, f"m = 0..{n}" + (f", differs at {bad}" if bad else "")
    return _timed(f"harmonic n={n}: closed form", run)


def verify_model(model, depth, trials=20, pairing_degree=6, seed=0):
    """Everything ``jordan-ladder verify`` runs, as a list of Checks."""
    checks = list(check_operator_identities(model, trials=trials, seed=seed))
    checks.append(check_printed_hamiltonian_fails(model))
    checks.append(check_algebra_axioms(model))
    checks.append(check_norms(model))
    checks.append(check_pairing_oracle(model, pairing_degree))
    for n in range(depth + 1):
        try:
            chain = solve_chain(model, n)
        except ChainError as exc:
            checks.append(Check(f"{model.name} n={n}: solve", False, f"{type(exc).__name__}: {exc}"))
            continue
        checks.extend(chain_checks(chain))
        if model.name == "harmonic":
            checks.append(check_harmonic_closed_form(n))
        checks.extend(fixture_checks(chain))
    return checks


def fixture_checks(chain):
    if chain.model.name == "custom":
        return []
    try:
        fx = load_fixture(chain.model.name, chain.n)
    except FixtureError:
        return []
    tag = f"{chain.model.name} n={chain.n}"

    def compare():
        report = compare_to_paper(chain, fx)
        c = report.counts()
        return report.ok, ", ".join(f"{k}: {v}" for k, v in sorted(c.items()))

    def typos():
        report = compare_to_paper(chain, fx)
        differing = {e.citation for e in report.entries if e.status == "known-typo-candidate"}
        demo = demonstrate_typos(chain, fx)
        unproven = sorted(c for c in differing if not demo.get(c))
        return not unproven, f"{len(differing)} flagged line(s) differ, each breaks cond1/cond2" \
            if not unproven else f"no failure shown for {unproven}"
    return [_timed(f"{tag}: printed table", compare), _timed(f"{tag}: flagged lines disproved", typos)]
