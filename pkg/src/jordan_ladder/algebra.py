"""Free algebra on A+, B+, B-, A- over ParamRatio, and its normal ordering.

Normal order is Ap < Bp < Bm < Am, so every normal word has the shape
Ap^i Bp^j Bm^k Am^l.  The model enters only through [Bm, Bp] = -2 F''(zbar)
with zbar = (Am - Ap)/(2a).
"""
import enum
from math import comb

from .field import ParamRatio, as_ratio, parse


class Generator(enum.IntEnum):
    AP = 0
    BP = 1
    BM = 2
    AM = 3

    @property
    def label(self):
        return _LABELS[self]

    @classmethod
    def from_label(cls, text):
        try:
            return _FROM_LABEL[text]
        except KeyError:
            raise ValueError(f"unknown generator {text!r}") from None


AP, BP, BM, AM = Generator.AP, Generator.BP, Generator.BM, Generator.AM
_LABELS = {AP: "Ap", BP: "Bp", BM: "Bm", AM: "Am"}
_FROM_LABEL = {v: k for k, v in _LABELS.items()}
_FROM_LABEL.update({"A+": AP, "B+": BP, "B-": BM, "A-": AM})


def is_normal(word):
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def word_to_string(word):
    """Run-length text form, e.g. (AP, AP, BP) -> 'Ap^2*Bp'; empty word -> '1'."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = j - i
        parts.append(_LABELS[word[i]] + (f"^{n}" if n > 1 else ""))
        i = j
    return "*".join(parts)


def word_from_string(text):
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for factor in text.split("*"):
        name, _, power = factor.strip().partition("^")
        out.extend([Generator.from_label(name)] * (int(power) if power else 1))
    return tuple(out)


def normal_word(i, j, k, l):
    return (AP,) * i + (BP,) * j + (BM,) * k + (AM,) * l


def word_exponents(word):
    """(i, j, k, l) of a normal word."""
    counts = [0, 0, 0, 0]
    for g in word:
        counts[g] += 1
    return tuple(counts)


class AlgebraElement:
    """Finite linear combination of words with ParamRatio coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for w, c in (terms or {}).items():
            c = as_ratio(c)
            if c:
                out[tuple(Generator(g) for g in w)] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, c):
        return cls({(): c})

    @classmethod
    def gen(cls, g):
        if isinstance(g, str):
            g = Generator.from_label(g)
        return cls._raw({(Generator(g),): ParamRatio.one()})

    @classmethod
    def word(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if isinstance(other, (int, ParamRatio)):
            return self == AlgebraElement.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_element(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out[w] + c if w in out else c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_element(other))

    def __rsub__(self, other):
        return _as_element(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, ParamRatio, str)):
            c = as_ratio(other)
            if not c:
                return AlgebraElement()
            return AlgebraElement._raw({w: v * c for w, v in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, ParamRatio, str)):
            return self * other
        return multiply(_as_element(other), self)

    def __pow__(self, n):
        result = AlgebraElement.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, word):
        return self.terms.get(tuple(word), ParamRatio.zero())

    def max_length(self):
        return max((len(w) for w in self.terms), default=0)

    def is_normal_ordered(self):
        return all(is_normal(w) for w in self.terms)

    def subs(self, assignment):
        out = {}
        for w, c in self.terms.items():
            v = c.subs(assignment)
            if v:
                out[w] = v
        return AlgebraElement._raw(out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        return f"AlgebraElement({render_element(self)!r})"


def _as_element(x):
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.scalar(as_ratio(x))


def render_element(x):
    if not x.terms:
        return "0"
    parts = []
    for w, c in x.sorted_terms():
        if not w:
            parts.append(f"({c})")
        elif c == 1:
            parts.append(word_to_string(w))
        else:
            parts.append(f"({c})*{word_to_string(w)}")
    return " + ".join(parts)


def multiply(x, y):
    """Concatenation product in the free algebra (no reordering)."""
    out = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            w = w1 + w2
            v = c1 * c2
            if w in out:
                v = out[w] + v
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return AlgebraElement._raw(out)


def commutator(x, y):
    return multiply(x, y) - multiply(y, x)


# ---------------------------------------------------------------------------
# models


class ModelSpec:
    """Anharmonicity polynomial F(zbar) = sum_k f_k zbar^k, k >= 2."""

    def __init__(self, fcoeffs, name="custom"):
        coeffs = {}
        for k, c in dict(fcoeffs).items():
            k = int(k)
            c = as_ratio(c)
            if not c:
                continue
            if k < 2:
                raise ValueError(f"F must start at zbar^2 (got power {k}); F(0)=0 and no linear term")
            coeffs[k] = c
        self.fcoeffs = dict(sorted(coeffs.items()))
        self.name = name
        self._bracket = None

    def __eq__(self, other):
        return isinstance(other, ModelSpec) and self.fcoeffs == other.fcoeffs

    def __hash__(self):
        return hash(frozenset(self.fcoeffs.items()))

    def __repr__(self):
        return f"ModelSpec({self.name!r}, F={self.f_string()})"

    @property
    def degree(self):
        return max(self.fcoeffs, default=2)

    def f_string(self):
        if not self.fcoeffs:
            return "0"
        return " + ".join(f"({c})*zbar^{k}" for k, c in self.fcoeffs.items())

    def shifts(self):
        """Positive degree shifts d, d-2, ... for each power d = k-2 in F''.

        Each A- in (A- - A+)^d contracts against one B+, so a power d of F''
        moves the total degree of a vacuum monomial by d, d-2, ..., -d.
        """
        out = set()
        for k in self.fcoeffs:
            out.update(range(k - 2, 0, -2))
        return sorted(out)

    def variables(self):
        names = set()
        for c in self.fcoeffs.values():
            names.update(c.variables())
        return names

    def fprime_coeffs(self):
        return {k - 1: c * k for k, c in self.fcoeffs.items()}

    def fsecond_coeffs(self):
        return {k - 2: c * (k * (k - 1)) for k, c in self.fcoeffs.items()}

    def bracket_terms(self):
        """[Bm, Bp] = -2F''(zbar) as {(p, q): coeff} meaning Ap^p Am^q.

        Expanded with zbar = (Am - Ap)/(2a); Ap and Am commute.
        """
        if self._bracket is None:
            a = ParamRatio.var("a")
            out = {}
            for d, c in self.fsecond_coeffs().items():
                base = c * (-2) / (a * 2) ** d
                for r in range(d + 1):
                    coeff = base * (comb(d, r) * (-1) ** r)
                    key = (r, d - r)
                    v = out[key] + coeff if key in out else coeff
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
            self._bracket = out
        return self._bracket

    def subs(self, assignment):
        return ModelSpec({k: c.subs(assignment) for k, c in self.fcoeffs.items()},
                         name=self.name)


def harmonic_model():
    return ModelSpec({2: parse("b")}, name="harmonic")


def quartic_model():
    return ModelSpec({2: parse("b"), 4: parse("omega/2")}, name="quartic")


def cubic_quartic_model():
    return ModelSpec({2: parse("b"), 3: parse("2*epsilon/3"), 4: parse("omega/2")},
                     name="cubic-quartic")


def sextic_model():
    return ModelSpec({2: parse("b"), 4: parse("omega/2"), 6: parse("epsilon/3")},
                     name="sextic")


NAMED_MODELS = {
    "harmonic": harmonic_model,
    "quartic": quartic_model,
    "cubic-quartic": cubic_quartic_model,
    "sextic": sextic_model,
}


def model_by_name(name):
    try:
        return NAMED_MODELS[name]()
    except KeyError:
        raise ValueError(f"unknown model {name!r}; choose from {sorted(NAMED_MODELS)}") from None


def custom_model(spec):
    """Parse ``"2:b,5:c5"`` into F = b zbar^2 + c5 zbar^5."""
    coeffs = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        k, sep, c = item.partition(":")
        if not sep:
            raise ValueError(f"bad F term {item!r}; expected power:coefficient")
        coeffs[int(k)] = parse(c)
    if not coeffs:
        raise ValueError("custom F has no terms")
    return ModelSpec(coeffs, name="custom")


# ---------------------------------------------------------------------------
# normal ordering


def zbar_element():
    """zbar = (Am - Ap)/(2a)."""
    half = ParamRatio.one() / (ParamRatio.var("a") * 2)
    return AlgebraElement._raw({(AM,): half, (AP,): -half})


def _acc(out, key, c):
    if key in out:
        c = out[key] + c
        if c:
            out[key] = c
        else:
            del out[key]
    elif c:
        out[key] = c


class NormalOrderer:
    """Memoized left multiplication of generators on normal words.

    Normal words are keyed by exponent tuples (i, j, k, l) for
    Ap^i Bp^j Bm^k Am^l.
    """

    def __init__(self, model):
        self.model = model
        self.two_a = ParamRatio.var("a") * 2
        self._left = {}
        self._bm_tail = {}

    def left_mul(self, g, key):
        memo = self._left.get((g, key))
        if memo is not None:
            return memo
        i, j, k, l = key
        if g == AP:
            out = {(i + 1, j, k, l): ParamRatio.one()}
        elif g == BP:
            out = {(i, j + 1, k, l): ParamRatio.one()}
        elif g == AM:
            out = {(i, j, k, l + 1): ParamRatio.one()}
            if j:
                out[(i, j - 1, k, l)] = -self.two_a * j
        else:
            out = {}
            for (p, q, r, s), c in self._bm_on(j, k, l).items():
                out[(p + i, q, r, s)] = c
            if i:
                _acc(out, (i - 1, j, k, l), -self.two_a * i)
        self._left[(g, key)] = out
        return out

    def _bm_on(self, j, k, l):
        """Bm * Bp^j Bm^k Am^l."""
        memo = self._bm_tail.get((j, k, l))
        if memo is not None:
            return memo
        if j == 0:
            out = {(0, 0, k + 1, l): ParamRatio.one()}
        else:
            out = {}
            for (p, q, r, s), c in self._bm_on(j - 1, k, l).items():
                _acc(out, (p, q + 1, r, s), c)
            # [Bm, Bp] Bp^(j-1) Bm^k Am^l with [Bm, Bp] = sum c Ap^p Am^q
            for (p, q), c in self.model.bracket_terms().items():
                tail = {(0, j - 1, k, l): ParamRatio.one()}
                for _ in range(q):
                    tail = self._apply_gen(AM, tail)
                for (p2, q2, r2, s2), c2 in tail.items():
                    _acc(out, (p2 + p, q2, r2, s2), c * c2)
        self._bm_tail[(j, k, l)] = out
        return out

    def _apply_gen(self, g, elem):
        out = {}
        for key, c in elem.items():
            for key2, c2 in self.left_mul(g, key).items():
                _acc(out, key2, c * c2)
        return out

    def order_word(self, word):
        elem = {(0, 0, 0, 0): ParamRatio.one()}
        for g in reversed(word):
            elem = self._apply_gen(g, elem)
        return elem

    def normal_order(self, x):
        out = {}
        for w, c in x.terms.items():
            for key, c2 in self.order_word(w).items():
                _acc(out, key, c * c2)
        return AlgebraElement._raw({normal_word(*key): c for key, c in out.items()})


_orderers = {}


def orderer_for(model):
    key = (model.name, frozenset(model.fcoeffs.items()))
    o = _orderers.get(key)
    if o is None:
        o = _orderers[key] = NormalOrderer(model)
    return o


def normal_order(x, model):
    """Canonical normal-ordered form of x under the model's commutation rules."""
    return orderer_for(model).normal_order(_as_element(x))


def _rewrite_rule(g, h, model):
    """Replacement for the inverted pair g h (g > h) as {word: coeff}."""
    minus_two_a = ParamRatio.var("a") * (-2)
    out = {(h, g): ParamRatio.one()}
    if (g, h) in ((AM, BP), (BM, AP)):
        out[()] = minus_two_a
    elif (g, h) == (BM, BP):
        for (p, q), c in model.bracket_terms().items():
            out[(AP,) * p + (AM,) * q] = c
    return out


def rewrite_measure(word):
    """(number of B letters, inversion count); strictly decreases per rewrite."""
    nb = sum(1 for g in word if g in (BP, BM))
    inv = sum(1 for s in range(len(word)) for t in range(s + 1, len(word))
              if word[s] > word[t])
    return (nb, inv)


def rewrite_normal_order(x, model, rng=None, check_measure=False):
    """Normal order by literal one-step rewriting of adjacent inverted pairs.

    With ``rng`` the redex (word and position) is chosen at random; the result
    must not depend on the choice.  ``check_measure`` asserts that every
    produced word has a strictly smaller ``rewrite_measure``.
    """
    x = _as_element(x)
    terms = dict(x.terms)
    while True:
        pending = [w for w in terms if not is_normal(w)]
        if not pending:
            return AlgebraElement._raw(terms)
        if rng is None:
            w = min(pending, key=lambda t: (len(t), t))
            sites = [s for s in range(len(w) - 1) if w[s] > w[s + 1]]
            s = sites[0]
        else:
            w = rng.choice(sorted(pending, key=lambda t: (len(t), t)))
            sites = [s for s in range(len(w) - 1) if w[s] > w[s + 1]]
            s = rng.choice(sites)
        c = terms.pop(w)
        before = rewrite_measure(w) if check_measure else None
        for rep, c2 in _rewrite_rule(w[s], w[s + 1], model).items():
            new = w[:s] + rep + w[s + 2:]
            if check_measure:
                after = rewrite_measure(new)
                assert after < before, (w, new, before, after)
            _acc(terms, new, c * c2)


def commutator_table(model):
    """[g, h] for all 16 generator pairs, normal ordered."""
    gens = list(Generator)
    return {(g, h): normal_order(commutator(AlgebraElement.gen(g), AlgebraElement.gen(h)), model)
            for g in gens for h in gens}


def hamiltonian_element(model=None):
    """H = -2(Ap Bm + Bp Am) + 4a, already normal ordered.

    The sign in front of the bracket is the one for which H equals the
    differential operator -4 d_z d_zbar + 4a^2 z zbar + 4a zbar F'(zbar); it is
    independent of F.
    """
    a = ParamRatio.var("a")
    return AlgebraElement._raw({(AP, BM): ParamRatio(-2), (BP, AM): ParamRatio(-2), (): a * 4})


def printed_hamiltonian_element():
    """2(Ap Bm + Bp Am) + 4a as typeset in the source; equals 8a - H."""
    a = ParamRatio.var("a")
    return AlgebraElement._raw({(AP, BM): ParamRatio(2), (BP, AM): ParamRatio(2), (): a * 4})


def energy(n):
    """E_n = 4a(n+1)."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    return ParamRatio.var("a") * (4 * (n + 1))


def random_word(rng, length):
    return tuple(Generator(rng.randrange(4)) for _ in range(length))


def random_element(rng, max_terms=3, max_length=4, coeff_range=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_word(rng, rng.randint(0, max_length))
        terms[w] = rng.randint(-coeff_range, coeff_range) or 1
    return AlgebraElement(terms)

