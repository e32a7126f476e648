"""Jordan chains Phi_{n,0..n} of H at E_n = 4a(n+1).

Conventions: states are stored with the normalization c_{n,0} stripped, so
Psi_{n,m} = c_{n,0} Phi_{n,m}; the pairing works in units of N0 =
<<Psi0|Psi0>> and ``c_squared`` is (16ab)^n in those units.  The chain
conditions are

    (H - E_n) Phi_{n,0} = 0,   (H - E_n) Phi_{n,m} = Phi_{n,m-1},
    c^2 G(Phi_{n,m}, Phi_{n,m'}) = delta(m + m', n).
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb, factorial

from .algebra import ModelSpec, energy, hamiltonian_element, harmonic_model
from .field import ParamRatio
from .linsolve import InconsistentSystem, UnderdeterminedSystem, solve
from .vacuum import VacuumVector, _acc, apply, pairing_for

log = logging.getLogger(__name__)

MAX_ESCALATION = 3


class ChainError(ArithmeticError):
    pass


class UnderdeterminedAfterConstraints(ChainError):
    def __init__(self, message, kernel_dimension, kernel=None, step=None):
        super().__init__(message)
        self.kernel_dimension = kernel_dimension
        self.kernel = kernel or []
        self.step = step


class InconsistentChainSystem(ChainError):
    def __init__(self, message, step=None, escalation=None, residuals=()):
        super().__init__(message)
        self.step = step
        self.escalation = escalation
        self.residuals = list(residuals)


class ChainVerificationError(ChainError):
    def __init__(self, message, failures):
        super().__init__(message)
        self.failures = failures


@dataclass
class JordanChain:
    model: ModelSpec
    n: int
    energy: ParamRatio
    states: list
    c_squared: ParamRatio
    diagnostics: dict = field(default_factory=dict)

    def state(self, m):
        return self.states[m]


def eigenstate(n):
    """Phi_{n,0} = (-1/(2a))^n (A+)^n |0>, i.e. zbar^n Psi0."""
    coeff = (ParamRatio.var("a") * (-2)) ** (-n)
    return VacuumVector._raw({(n, 0): coeff})


def c_squared(n):
    return (ParamRatio.var("a") * ParamRatio.var("b") * 16) ** n


def build_ansatz(model, n, m, escalation=0):
    """Candidate monomials (i, j) for Phi_{n,m}.

    Layer k raises the total degree by a sum of k anharmonic shifts (deg F - 2
    for each term of F) and allows B+ powers up to m - k; lowered layers drop
    the degree by a sum of shifts s, each costing s + 1 of the B+ budget.
    Escalation widens the budget and, from level 2 on, admits every shift up
    to the largest one.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    shifts = model.shifts()
    if escalation >= 2 or (escalation and not shifts):
        shifts = list(range(1, max(shifts, default=1) + 1))
    budget = m + escalation
    out = set()

    def add_layer(deg, jmax):
        for j in range(0, min(n, jmax) + 1):
            if deg - j >= 0:
                out.add((deg - j, j))

    totals = {0}
    for k in range(budget + 1):
        for t in totals:
            add_layer(n + t, budget - k)
        totals = {t + s for t in totals for s in shifts}
        if not totals:
            break
    for r in range(1, budget + 1):
        for combo in combinations_with_replacement(shifts, r):
            cost = sum(s + 1 for s in combo)
            if cost <= budget and n - sum(combo) >= 0:
                add_layer(n - sum(combo), budget - cost)
    return sorted(out, key=lambda ij: (ij[0] + ij[1], ij[1]))


class _Shifted:
    """(H - E) on vacuum monomials, memoized per level."""

    def __init__(self, model, n):
        self.model = model
        self.h = hamiltonian_element(model)
        self.e = energy(n)
        self._cols = {}

    def column(self, key):
        col = self._cols.get(key)
        if col is None:
            col = dict(apply(self.h, VacuumVector._raw({key: ParamRatio.one()}), self.model).coeffs)
            _acc(col, key, -self.e)
            self._cols[key] = col
        return col

    def __call__(self, v):
        out = {}
        for key, c in v.coeffs.items():
            for k2, c2 in self.column(key).items():
                _acc(out, k2, c * c2)
        return VacuumVector._raw(out)


def _solve_step(op, model, n, m, prev, escalation):
    pin = (n, 0)
    while True:
        cols = [k for k in build_ansatz(model, n, m, escalation) if k != pin]
        rows = {}
        for col in cols:
            for r, c in op.column(col).items():
                rows.setdefault(r, {})[col] = c
        for r in prev.coeffs:
            rows.setdefault(r, {})
        eqs = [(coeffs, prev.coefficient(*r)) for r, coeffs in rows.items()]
        try:
            sol = solve(eqs, cols)
        except InconsistentSystem as exc:
            if escalation >= MAX_ESCALATION:
                raise InconsistentChainSystem(
                    f"(H-E_{n}) Phi_{n},{m} = Phi_{n},{m - 1} has no solution in the ansatz "
                    f"after {escalation} escalations", step=m, escalation=escalation,
                    residuals=exc.residuals) from exc
            escalation += 1
            log.info("n=%d m=%d: ansatz too small, escalating to %d", n, m, escalation)
            continue
        except UnderdeterminedSystem as exc:
            raise UnderdeterminedAfterConstraints(
                f"step m={m}: residual kernel of dimension {exc.kernel_dimension} "
                f"beyond the eigenvector direction", exc.kernel_dimension, exc.kernel,
                step=m) from exc
        return VacuumVector({k: v for k, v in sol.items() if v}), escalation, len(cols)


def solve_chain(model, n, verify=True):
    """Solve (cond1) and (cond2) for the level-n chain of ``model``."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    op = _Shifted(model, n)
    G = pairing_for(model)
    csq = c_squared(n)
    raw = [eigenstate(n)]
    escalation = 0
    sizes = []
    for m in range(1, n + 1):
        vec, escalation, size = _solve_step(op, model, n, m, raw[-1], escalation)
        raw.append(vec)
        sizes.append(size)

    # Any chain is Phi_m = sum_k tau_k R_{m-k} with tau_0 = 1.  Its Gram matrix
    # is Hankel, rho_s = G(R_p, R_q) for p + q = s, and vanishes below s = n.
    tau = [ParamRatio.one()]
    if n:
        rho = {n: G(raw[0], raw[n])}
        for k in range(1, n + 1):
            rho[n + k] = G(raw[n], raw[k])
        if not rho[n]:
            raise UnderdeterminedAfterConstraints(
                "G(Phi_n0, Phi_nn) vanishes; normalization cannot fix the chain", 1)
        if rho[n] * csq != 1:
            raise InconsistentChainSystem(
                f"c^2 G(Phi_n0, Phi_nn) = {rho[n] * csq}, expected 1", step=n)
        sq = [ParamRatio.one()]  # coefficients of tau * tau
        for k in range(1, n + 1):
            conv = ParamRatio.zero()
            for l in range(1, k):
                conv = conv + tau[l] * tau[k - l]
            acc = conv * rho[n]
            for u in range(k):
                acc = acc + sq[u] * rho[n + k - u]
            tk = -acc / (rho[n] * 2)
            tau.append(tk)
            sq.append(tk * 2 + conv)
    states = []
    for m in range(n + 1):
        v = VacuumVector()
        for k in range(m + 1):
            if tau[k]:
                v = v + raw[m - k] * tau[k]
        states.append(v)
    chain = JordanChain(model=model, n=n, energy=energy(n), states=states, c_squared=csq,
                        diagnostics={"escalation": escalation, "ansatz_sizes": sizes,
                                     "gauge": [str(t) for t in tau]})
    if verify:
        failures = check_chain(chain)
        if failures:
            raise ChainVerificationError(f"chain n={n} fails {len(failures)} invariant(s)",
                                         failures)
    return chain


def check_chain(chain):
    """List of failed invariants (empty when the chain is exact)."""
    model, n = chain.model, chain.n
    op = _Shifted(model, n)
    failures = []
    if op(chain.states[0]):
        failures.append(("cond1", 0, "(H-E) Phi_0 != 0"))
    for m in range(1, n + 1):
        if op(chain.states[m]) != chain.states[m - 1]:
            failures.append(("cond1", m, f"(H-E) Phi_{m} != Phi_{m - 1}"))
    gram = gram_matrix(chain)
    for m in range(n + 1):
        for mp in range(n + 1):
            want = 1 if m + mp == n else 0
            if gram[m][mp] != want:
                failures.append(("cond2", (m, mp), f"c^2 G = {gram[m][mp]}, expected {want}"))
    return failures


def gram_matrix(chain):
    G = pairing_for(chain.model)
    s = chain.states
    return [[chain.c_squared * G(s[m], s[mp]) for mp in range(len(s))] for m in range(len(s))]


def jordan_matrix(chain):
    """c^2 G(Phi_m, H Phi_m'); expected E_n delta(m+m', n) + delta(m+m', n+1)."""
    G = pairing_for(chain.model)
    h = hamiltonian_element(chain.model)
    hs = [apply(h, v, chain.model) for v in chain.states]
    s = chain.states
    return [[chain.c_squared * G(s[m], hs[mp]) for mp in range(len(s))] for m in range(len(s))]


def expected_jordan_matrix(n):
    e = energy(n)
    out = []
    for m in range(n + 1):
        row = []
        for mp in range(n + 1):
            v = ParamRatio.zero()
            if m + mp == n:
                v = e
            elif m + mp == n + 1:
                v = ParamRatio.one()
            row.append(v)
        out.append(row)
    return out


def harmonic_closed_form(n, m):
    """Binomial closed form of Phi_{n,m} for F = b zbar^2.

    Phi_{n,m} = 1/((2b)^n (8a^2)^m m!) sum_{q=n-m}^{n} (-1)^(m-q) C(m, n-q)
                b^q a^(m-q) (A+)^q (B+)^(n-q) |0>
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    a, b = ParamRatio.var("a"), ParamRatio.var("b")
    pref = ((b * 2) ** n * (a * a * 8) ** m * factorial(m)).inverse()
    out = {}
    for q in range(n - m, n + 1):
        c = pref * (comb(m, n - q) * (-1) ** ((m - q) % 2)) * b ** q * a ** (m - q)
        if c:
            out[(q, n - q)] = c
    return VacuumVector._raw(out)


def harmonic_product_form(n, m):
    """Same state as harmonic_closed_form, from
    (-A+)^(n-m) (b A+ - a B+)^m / (2^(n+3m) a^(n+m) b^m m!)."""
    a, b = ParamRatio.var("a"), ParamRatio.var("b")
    pref = (ParamRatio(2 ** (n + 3 * m)) * a ** (n + m) * b ** m * factorial(m)).inverse()
    out = {}
    for r in range(m + 1):
        # (b A+)^(m-r) (-a B+)^r, all operators commute
        c = pref * comb(m, r) * b ** (m - r) * (-a) ** r * (-1) ** (n - m)
        out[(n - m + m - r, r)] = c
    return VacuumVector({k: v for k, v in out.items()})


def harmonic_chain(n):
    return solve_chain(harmonic_model(), n)
