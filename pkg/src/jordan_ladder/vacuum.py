"""Vacuum representation, transpose, vacuum expectation and the pairing G.

States are combinations of (A+)^i (B+)^j |0>, keyed by (i, j).  The pairing
is G(P, Q) = <0| transpose(P) Q |0> in units of <<Psi0|Psi0>>, where the
transpose reverses words and maps A+- -> -A-+, B+- -> -B-+ (integration by
parts under the non-conjugating product).
"""
from .algebra import AM, AP, BM, BP, AlgebraElement, Generator, _acc, normal_order
from .field import ParamRatio, as_ratio


class VacuumVector:
    """sum c_ij (A+)^i (B+)^j |0>.  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        out = {}
        for (i, j), c in (coeffs or {}).items():
            c = as_ratio(c)
            if c:
                out[(int(i), int(j))] = c
        self.coeffs = out

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def vacuum(cls):
        return cls._raw({(0, 0): ParamRatio.one()})

    @classmethod
    def monomial(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, VacuumVector):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _acc(out, k, c)
        return VacuumVector._raw(out)

    def __neg__(self):
        return VacuumVector._raw({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_ratio(c)
        if not c:
            return VacuumVector()
        return VacuumVector._raw({k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def coefficient(self, i, j):
        return self.coeffs.get((i, j), ParamRatio.zero())

    def support(self):
        return set(self.coeffs)

    def total_degree(self):
        return max((i + j for i, j in self.coeffs), default=-1)

    def sorted_items(self):
        """Items ordered by B+ power, then A+ power."""
        return sorted(self.coeffs.items(), key=lambda t: (t[0][1], t[0][0]))

    def operator(self):
        """The operator polynomial sum c_ij Ap^i Bp^j."""
        return AlgebraElement._raw({(AP,) * i + (BP,) * j: c for (i, j), c in self.coeffs.items()})

    def subs(self, assignment):
        out = {}
        for k, c in self.coeffs.items():
            v = c.subs(assignment)
            if v:
                out[k] = v
        return VacuumVector._raw(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in self.sorted_items():
            mono = "*".join(p for p in (_pw("Ap", i), _pw("Bp", j)) if p) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts) + " |0>"

    def __repr__(self):
        return f"VacuumVector({self})"


def _pw(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


# ---------------------------------------------------------------------------

_TRANSPOSE = {AP: AM, AM: AP, BP: BM, BM: BP}


def transpose(x):
    """Linear antiautomorphism A+- -> -A-+, B+- -> -B-+ (order reversed)."""
    out = {}
    for w, c in x.terms.items():
        tw = tuple(_TRANSPOSE[g] for g in reversed(w))
        _acc(out, tw, -c if len(w) % 2 else c)
    return AlgebraElement._raw(out)


class VacuumModule:
    """Memoized action of the four generators on the vacuum basis."""

    def __init__(self, model):
        self.model = model
        self.two_a = ParamRatio.var("a") * 2
        self._lower_b = {0: {}}
        self._bm = {}

    def act(self, g, key):
        """Generator g applied to (A+)^i (B+)^j |0>, as {(i, j): coeff}."""
        i, j = key
        if g == AP:
            return {(i + 1, j): ParamRatio.one()}
        if g == BP:
            return {(i, j + 1): ParamRatio.one()}
        if g == AM:
            return {(i, j - 1): -self.two_a * j} if j else {}
        memo = self._bm.get(key)
        if memo is None:
            memo = {(p + i, q): c for (p, q), c in self.lower_b(j).items()}
            if i:
                _acc(memo, (i - 1, j), -self.two_a * i)
            self._bm[key] = memo
        return memo

    def lower_b(self, j):
        """B- (B+)^j |0> = B+ B- (B+)^(j-1)|0> + [B-, B+] (B+)^(j-1)|0>."""
        memo = self._lower_b.get(j)
        if memo is not None:
            return memo
        out = {}
        for (p, q), c in self.lower_b(j - 1).items():
            _acc(out, (p, q + 1), c)
        for (p, q), c in self.model.bracket_terms().items():
            # Ap^p Am^q on (B+)^(j-1)|0>
            if q > j - 1:
                continue
            f = c
            for t in range(q):
                f = f * (-self.two_a * (j - 1 - t))
            _acc(out, (p, j - 1 - q), f)
        self._lower_b[j] = out
        return out

    def act_vector(self, g, coeffs):
        out = {}
        for key, c in coeffs.items():
            for key2, c2 in self.act(g, key).items():
                _acc(out, key2, c * c2)
        return out

    def apply_word(self, word, coeffs):
        for g in reversed(word):
            if not coeffs:
                break
            coeffs = self.act_vector(g, coeffs)
        return coeffs

    def apply(self, x, v):
        out = {}
        for w, c in x.terms.items():
            for key, c2 in self.apply_word(w, v.coeffs).items():
                _acc(out, key, c * c2)
        return VacuumVector._raw(out)


_modules = {}


def module_for(model):
    key = (model.name, frozenset(model.fcoeffs.items()))
    m = _modules.get(key)
    if m is None:
        m = _modules[key] = VacuumModule(model)
    return m


def apply(x, v, model):
    """Act with the algebra element x on the vacuum vector v."""
    if isinstance(x, (str, Generator)):
        x = AlgebraElement.gen(x)
    return module_for(model).apply(x, v)


def apply_by_normal_order(x, v, model):
    """Same result as ``apply``, via normal ordering x * P_v and dropping words
    that end in a lowering operator."""
    prod = normal_order(x * v.operator(), model)
    out = {}
    for w, c in prod.terms.items():
        if w and w[-1] in (BM, AM):
            continue
        i = sum(1 for g in w if g == AP)
        _acc(out, (i, len(w) - i), c)
    return VacuumVector._raw(out)


def vacuum_expectation(x, model):
    """Coefficient of the empty word of normal_order(x); units of <<Psi0|Psi0>>."""
    return normal_order(x, model).coefficient(())


class Pairing:
    """The bilinear pairing G on vacuum vectors, with memoized basis entries."""

    def __init__(self, model):
        self.model = model
        self.module = module_for(model)
        self._basis = {}

    def basis(self, p, q):
        """G((A+)^i(B+)^j|0>, (A+)^k(B+)^l|0>) for p=(i, j), q=(k, l)."""
        key = (p, q)
        val = self._basis.get(key)
        if val is not None:
            return val
        i, j = p
        k, l = q
        # transpose(Ap^i Bp^j) = (-1)^(i+j) Bm^j Am^i; selection rule: the
        # lowering operators must consume every raising one
        coeffs = {q: ParamRatio.one()}
        coeffs = self.module.apply_word((BM,) * j + (AM,) * i, coeffs)
        val = coeffs.get((0, 0), ParamRatio.zero())
        if (i + j) % 2:
            val = -val
        self._basis[key] = val
        return val

    def __call__(self, u, v):
        total = ParamRatio.zero()
        for p, c in u.coeffs.items():
            acc = ParamRatio.zero()
            for q, d in v.coeffs.items():
                g = self.basis(p, q)
                if g:
                    acc = acc + g * d
            if acc:
                total = total + c * acc
        return total


_pairings = {}


def pairing_for(model):
    key = (model.name, frozenset(model.fcoeffs.items()))
    p = _pairings.get(key)
    if p is None:
        p = _pairings[key] = Pairing(model)
    return p


def pairing(p, q, model):
    """G(p, q) in units of <<Psi0|Psi0>>."""
    return pairing_for(model)(p, q)


def pairing_by_normal_order(p, q, model):
    return vacuum_expectation(transpose(p.operator()) * q.operator(), model)
