"""Differential-operator oracle.

Wavefunctions are p(z, zbar) * Psi0 with Psi0 = exp(-a z zbar - F(zbar)); a
prefactor is stored as {(p, q): coeff} for z^p zbar^q.  The operators act on
the prefactor through d_z Psi0 = -a zbar Psi0 and d_zbar Psi0 = (-a z - F')Psi0.

The scalar product is the formal Gaussian integral
int f g exp(-2a z zbar - 2F(zbar)) d^2x, evaluated with the moment rule
int z^m zbar^n exp(-2a z zbar) d^2x = delta(m, n) pi n!/(2a)^(n+1).  Only
finitely many terms of the series of exp(-2F) can meet a z-power, so the
result is exact; pi is kept as a formal factor.
"""
import random
from dataclasses import dataclass
from math import factorial

from .algebra import AM, AP, BM, BP, AlgebraElement, Generator, _acc
from .field import ParamRatio, PoleError, as_ratio

OPERATORS = ("Ap", "Am", "Bp", "Bm", "H", "dz", "dzb", "z", "zb")


class PrefactorFn:
    """Polynomial prefactor sum c_pq z^p zbar^q of Psi0.  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        out = {}
        for (p, q), c in (coeffs or {}).items():
            c = as_ratio(c)
            if c:
                out[(int(p), int(q))] = c
        self.coeffs = out

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def one(cls):
        return cls._raw({(0, 0): ParamRatio.one()})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PrefactorFn):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _acc(out, k, c)
        return PrefactorFn._raw(out)

    def __neg__(self):
        return PrefactorFn._raw({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PrefactorFn):
            out = {}
            for (p1, q1), c1 in self.coeffs.items():
                for (p2, q2), c2 in other.coeffs.items():
                    _acc(out, (p1 + p2, q1 + q2), c1 * c2)
            return PrefactorFn._raw(out)
        c = as_ratio(other)
        if not c:
            return PrefactorFn()
        return PrefactorFn._raw({k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def coefficient(self, p, q):
        return self.coeffs.get((p, q), ParamRatio.zero())

    def z_degree(self):
        return max((p for p, _ in self.coeffs), default=-1)

    def degree(self):
        return max((p + q for p, q in self.coeffs), default=-1)

    def subs(self, assignment):
        out = {}
        for k, c in self.coeffs.items():
            v = c.subs(assignment)
            if v:
                out[k] = v
        return PrefactorFn._raw(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (p, q), c in sorted(self.coeffs.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            mono = "*".join(s for s in (_pw("z", p), _pw("zb", q)) if s) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PrefactorFn({self})"


def _pw(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


# ---------------------------------------------------------------------------
# operators


def _shift(f, dp, dq, c):
    return {(p + dp, q + dq): v * c for (p, q), v in f.coeffs.items()}


def _fprime(model):
    """F'(zbar) as a prefactor."""
    return PrefactorFn._raw({(0, k): c for k, c in model.fprime_coeffs().items()})


def _d_z(f):
    # bare partial derivative of the prefactor
    return PrefactorFn._raw({(p - 1, q): c * p for (p, q), c in f.coeffs.items() if p})


def _d_zb(f):
    return PrefactorFn._raw({(p, q - 1): c * q for (p, q), c in f.coeffs.items() if q})


def _times(f, dp, dq, c):
    return PrefactorFn._raw(_shift(f, dp, dq, c)) if c else PrefactorFn()


def apply_operator(op, f, model):
    """Act with one of OPERATORS (or a Generator) on the wavefunction f * Psi0."""
    if isinstance(op, Generator):
        op = op.label
    a = ParamRatio.var("a")
    if op == "z":
        return _times(f, 1, 0, 1)
    if op == "zb":
        return _times(f, 0, 1, 1)
    if op == "dz":
        return _d_z(f) - _times(f, 0, 1, a)
    if op == "dzb":
        return _d_zb(f) - _times(f, 1, 0, a) - _fprime(model) * f
    if op in ("Ap", "Am"):
        # A+- = d_z -+ a zbar
        s = 1 if op == "Ap" else -1
        return apply_operator("dz", f, model) - _times(f, 0, 1, a * s)
    if op in ("Bp", "Bm"):
        # B+- = d_zbar -+ a z -+ F'
        s = 1 if op == "Bp" else -1
        g = apply_operator("dzb", f, model)
        return g - (_times(f, 1, 0, a) + _fprime(model) * f) * s
    if op == "H":
        # -4 d_z d_zbar + 4a^2 z zbar + 4a zbar F'(zbar)
        g = apply_operator("dz", apply_operator("dzb", f, model), model) * (-4)
        g = g + _times(f, 1, 1, a * a * 4)
        return g + _times(_fprime(model) * f, 0, 1, a * 4)
    raise ValueError(f"unknown operator {op!r}; choose from {OPERATORS}")


def apply_element(x, f, model):
    """Act with an AlgebraElement, composing apply_operator right to left."""
    out = PrefactorFn()
    for w, c in x.terms.items():
        g = f
        for gen in reversed(w):
            if not g:
                break
            g = apply_operator(gen, g, model)
        out = out + g * c
    return out


def _act(x, f, model):
    if isinstance(x, AlgebraElement):
        return apply_element(x, f, model)
    return apply_operator(x, f, model)


def from_vacuum(v, model):
    """Prefactor of sum c_ij (A+)^i (B+)^j Psi0."""
    out = PrefactorFn()
    cache = {}
    for (i, j), c in v.coeffs.items():
        key = (i, j)
        g = cache.get(key)
        if g is None:
            g = PrefactorFn.one()
            for _ in range(j):
                g = apply_operator("Bp", g, model)
            for _ in range(i):
                g = apply_operator("Ap", g, model)
            cache[key] = g
        out = out + g * c
    return out


# ---------------------------------------------------------------------------
# integrals


@dataclass(frozen=True)
class PiMultiple:
    """coeff * pi with pi formal."""

    coeff: ParamRatio

    def __truediv__(self, other):
        if isinstance(other, PiMultiple):
            return self.coeff / other.coeff
        return PiMultiple(self.coeff / as_ratio(other))

    def __bool__(self):
        return bool(self.coeff)

    def __str__(self):
        return f"pi*({self.coeff})"


class MomentTable:
    """int z^m zbar^n exp(-2a z zbar) d^2x = delta(m, n) pi n!/(2a)^(n+1)."""

    def __init__(self):
        self._cache = {}
        self._inv2a = (ParamRatio.var("a") * 2).inverse()

    def __call__(self, m, n):
        if m != n:
            return ParamRatio.zero()
        val = self._cache.get(n)
        if val is None:
            val = self._cache[n] = self._inv2a ** (n + 1) * factorial(n)
        return val


_moments = MomentTable()


def exp_series(model, order):
    """Coefficients e_0..e_order of exp(-2F(zbar)) in powers of zbar.

    From E' = -2F'E: k e_k = sum_j (-2 j f_j) e_(k-j).
    """
    e = [ParamRatio.one()]
    for k in range(1, order + 1):
        acc = ParamRatio.zero()
        for j, c in model.fcoeffs.items():
            if j <= k and e[k - j]:
                acc = acc + c * (-2 * j) * e[k - j]
        e.append(acc / k)
    return e


def integral_pairing(f, g, model):
    """int f g exp(-2a z zbar - 2F(zbar)) d^2x as a PiMultiple."""
    h = f * g
    top = h.z_degree()
    if top < 0:
        return PiMultiple(ParamRatio.zero())
    e = exp_series(model, top)
    total = ParamRatio.zero()
    for (p, q), c in h.coeffs.items():
        k = p - q  # series power needed to balance the z power
        if 0 <= k < len(e) and e[k]:
            total = total + c * e[k] * _moments(p, p)
    return PiMultiple(total)


def normalized_pairing(f, g, model):
    """integral_pairing in units of N0 = integral_pairing(1, 1)."""
    one = PrefactorFn.one()
    return integral_pairing(f, g, model) / integral_pairing(one, one, model)


# ---------------------------------------------------------------------------
# random checks


def random_prefactor(rng, max_degree=6, max_terms=6, coeff_range=5):
    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        p = rng.randint(0, d)
        coeffs[(p, d - p)] = rng.randint(-coeff_range, coeff_range) or 1
    return PrefactorFn(coeffs)


def random_assignment(rng, names):
    """Small positive a, b and small nonzero integers for the rest."""
    out = {}
    for name in sorted(names):
        if name in ("a", "b"):
            out[name] = rng.randint(1, 5)
        else:
            out[name] = rng.choice([-3, -2, -1, 1, 2, 3])
    return out


def _element_vars(x):
    names = set()
    if isinstance(x, AlgebraElement):
        for c in x.terms.values():
            names.update(c.variables())
    return names


def verify_commutator(x, y, claimed, model, trials=20, rng=None, max_degree=6):
    """Check [X, Y] f = claimed f on random prefactors at random parameter points.

    X and Y are operator names, Generators or AlgebraElements; ``claimed`` is
    an AlgebraElement (or anything acceptable to ``_act``).  Returns True only
    if every trial agrees exactly.
    """
    rng = rng or random.Random(0)
    names = {"a"} | model.variables() | _element_vars(x) | _element_vars(y) | _element_vars(claimed)
    for _ in range(trials):
        for _attempt in range(20):
            point = random_assignment(rng, names)
            try:
                m = model.subs(point)
                xs = x.subs(point) if isinstance(x, AlgebraElement) else x
                ys = y.subs(point) if isinstance(y, AlgebraElement) else y
                cs = claimed.subs(point) if isinstance(claimed, AlgebraElement) else claimed
                break
            except PoleError:
                continue
        else:
            raise PoleError("no pole-free parameter point found")
        f = random_prefactor(rng, max_degree=max_degree)
        lhs = _act(xs, _act(ys, f, m), m) - _act(ys, _act(xs, f, m), m)
        rhs = _act(cs, f, m)
        # the model coefficients still carry "a" symbolically: substitute it too
        if lhs.subs(point) != rhs.subs(point):
            return False
    return True


def verify_identity(lhs, rhs, model, trials=20, rng=None, max_degree=6):
    """Check lhs f = rhs f on random prefactors and parameter points."""
    rng = rng or random.Random(0)
    names = {"a"} | model.variables() | _element_vars(lhs) | _element_vars(rhs)
    for _ in range(trials):
        point = random_assignment(rng, names)
        m = model.subs(point)
        ls = lhs.subs(point) if isinstance(lhs, AlgebraElement) else lhs
        rs = rhs.subs(point) if isinstance(rhs, AlgebraElement) else rhs
        f = random_prefactor(rng, max_degree=max_degree)
        if _act(ls, f, m).subs(point) != _act(rs, f, m).subs(point):
            return False
    return True


__all__ = ["PrefactorFn", "apply_operator", "apply_element", "from_vacuum", "PiMultiple",
           "MomentTable", "exp_series", "integral_pairing", "normalized_pairing",
           "random_prefactor", "random_assignment", "verify_commutator", "verify_identity",
           "OPERATORS", "AP", "AM", "BP", "BM"]
