"""Exact multivariate polynomials and rational functions over Q.

Exponent vectors are packed into a single Python int, ``FIELD_BITS`` bits per
variable, with variable positions taken from a process-wide registry.  The
model parameters ``a, b, omega, epsilon`` are registered first; any other
name is registered on first use, so custom anharmonicities need no changes
here.

``ParamRatio`` values are always reduced (gcd of numerator and denominator is
a unit) with a denominator whose leading coefficient is positive.
"""
import math
import re
import threading
from fractions import Fraction
from functools import reduce

from .kernels import (poly_add, poly_mul, poly_mul_term, poly_scale,
                      poly_sub)

FIELD_BITS = 16
_FMASK = (1 << (FIELD_BITS - 1)) - 1  # usable exponent bits; top bit is a guard
MAX_EXPONENT = _FMASK

_names = []
_index = {}
_guard = 0
_lock = threading.Lock()


class PoleError(ZeroDivisionError):
    """Denominator vanishes at the requested point."""


def var_index(name):
    i = _index.get(name)
    if i is not None:
        return i
    global _guard
    with _lock:
        if name in _index:
            return _index[name]
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise ValueError(f"invalid variable name {name!r}")
        i = len(_names)
        _names.append(name)
        _index[name] = i
        _guard |= 1 << (FIELD_BITS * i + FIELD_BITS - 1)
        return i


for _v in ("a", "b", "omega", "epsilon"):
    var_index(_v)


def variable_names():
    return tuple(_names)


def mono_exponents(m):
    """Exponent tuple of a packed monomial over all registered variables."""
    out = []
    while m:
        out.append(m & _FMASK)
        m >>= FIELD_BITS
    return tuple(out)


def mono_from_exponents(exps):
    m = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} out of range")
        m |= e << (FIELD_BITS * i)
    return m


def mono_degree(m):
    return sum(mono_exponents(m))


def mono_var_degree(m, i):
    return (m >> (FIELD_BITS * i)) & _FMASK


def mono_divides(d, m):
    g = _guard
    return ((m | g) - d) & g == g


def mono_gcd(ms):
    it = iter(ms)
    first = mono_exponents(next(it))
    low = list(first)
    for m in it:
        e = mono_exponents(m)
        if len(e) < len(low):
            del low[len(e):]
        for k in range(len(low)):
            if e[k] < low[k]:
                low[k] = e[k]
        if not any(low):
            return 0
    return mono_from_exponents(low)


def mono_lcm(m1, m2):
    e1, e2 = mono_exponents(m1), mono_exponents(m2)
    n = max(len(e1), len(e2))
    e1 = e1 + (0,) * (n - len(e1))
    e2 = e2 + (0,) * (n - len(e2))
    return mono_from_exponents([max(x, y) for x, y in zip(e1, e2)])


def _order_key(m):
    return (mono_degree(m), mono_exponents(m))


def _display_key(m):
    # ascending total degree; within a degree, variables in registry order first
    e = mono_exponents(m)
    e = e + (0,) * (len(_names) - len(e))
    return (sum(e), tuple(-x for x in e))


# ---------------------------------------------------------------------------
# raw dict-level helpers


def _content(p):
    return reduce(math.gcd, p.values(), 0)


def _leading(p):
    return max(p, key=_order_key)


def _div_mono(p, mono, c=1):
    if c == 1:
        return {m - mono: v for m, v in p.items()}
    return {m - mono: v // c for m, v in p.items()}


def _lex_lead(p):
    # integer comparison of packed keys is a lex order (last variable most
    # significant), good enough for division
    return max(p)


def _exact_div(p, q):
    """p / q if q divides p exactly, else None."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return {}
    if len(q) == 1:
        (mq, cq), = q.items()
        for m, c in p.items():
            if c % cq or not mono_divides(mq, m):
                return None
        return {m - mq: c // cq for m, c in p.items()}
    lq = _lex_lead(q)
    lc = q[lq]
    r = dict(p)
    quo = {}
    while r:
        lr = max(r)
        if not mono_divides(lq, lr):
            return None
        c, rem = divmod(r[lr], lc)
        if rem:
            return None
        mono = lr - lq
        quo[mono] = c
        for m, v in q.items():
            k = m + mono
            nv = r.get(k, 0) - v * c
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
    return quo


def _vars_in(p):
    present = 0
    for m in p:
        present |= m
    out = []
    i = 0
    while present:
        if present & _FMASK:
            out.append(i)
        present >>= FIELD_BITS
        i += 1
    return out


class _HeuristicFailed(Exception):
    pass


def _eval_var(p, i, x):
    shift = FIELD_BITS * i
    out = {}
    for m, c in p.items():
        e = (m >> shift) & _FMASK
        k = m - (e << shift)
        v = out.get(k, 0) + c * x ** e
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _interpolate(h, x, i):
    shift = FIELD_BITS * i
    half = x // 2
    out = {}
    e = 0
    while h:
        g = {}
        for m, c in h.items():
            r = c % x
            if r > half:
                r -= x
            if r:
                g[m] = r
        for m, c in g.items():
            out[m + (e << shift)] = c
        h = {m: q for m, q in ((m, (c - g.get(m, 0)) // x) for m, c in h.items()) if q}
        e += 1
    return out


def _heu_gcd(f, g, vs):
    cf, cg = _content(f), _content(g)
    c = math.gcd(cf, cg)
    if not vs:
        return {0: c}
    if cf != 1:
        f = {m: v // cf for m, v in f.items()}
    if cg != 1:
        g = {m: v // cg for m, v in g.items()}
    i = vs[-1]
    rest = vs[:-1]
    nf = max(abs(v) for v in f.values())
    ng = max(abs(v) for v in g.values())
    bound = 2 * min(nf, ng) + 29
    lf = abs(f[_leading(f)])
    lg = abs(g[_leading(g)])
    x = max(min(bound, 99 * math.isqrt(bound)), 2 * min(nf // lf, ng // lg) + 2)
    for _ in range(6):
        ff = _eval_var(f, i, x)
        gg = _eval_var(g, i, x)
        if ff and gg:
            try:
                h = _heu_gcd(ff, gg, rest)
            except _HeuristicFailed:
                h = None
            if h is not None:
                cand = _interpolate(h, x, i)
                if cand:
                    cont = _content(cand)
                    if cont != 1:
                        cand = {m: v // cont for m, v in cand.items()}
                    if _exact_div(f, cand) is not None and _exact_div(g, cand) is not None:
                        return poly_scale(cand, c)
                # cofactor route
                cff = _exact_div(ff, h)
                if cff:
                    cff = _interpolate(cff, x, i)
                    cand = _exact_div(f, cff) if cff else None
                    if cand and _exact_div(g, cand) is not None:
                        cont = _content(cand)
                        return {m: v // cont * c for m, v in cand.items()}
        x = x * 73794 * math.isqrt(math.isqrt(x)) // 27011
    raise _HeuristicFailed


def _gcd_fallback(f, g):
    # rare path: heuristic gcd gave up; defer to sympy's sparse gcd
    from sympy.polys.domains import ZZ
    from sympy.polys.rings import ring
    nv = max(_vars_in(f) + _vars_in(g)) + 1
    R = ring(",".join(_names[:nv]), ZZ)[0]

    def lift(p):
        return R.from_dict({mono_exponents(m) + (0,) * (nv - len(mono_exponents(m))): v
                            for m, v in p.items()})
    h = lift(f).gcd(lift(g))
    return {mono_from_exponents(e): int(v) for e, v in h.items()}


def _gcd(p, q):
    """gcd of two integer polynomials, up to sign."""
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    cp, cq = _content(p), _content(q)
    c = math.gcd(cp, cq)
    mp, mq = mono_gcd(p), mono_gcd(q)
    m = mono_gcd((mp, mq))
    if len(p) == 1 or len(q) == 1:
        return {m: c}
    p1 = _div_mono(p, mp, cp)
    q1 = _div_mono(q, mq, cq)
    if len(p1) == 1 or len(q1) == 1:
        return {m: c}
    if p1 == q1:
        core = p1
    elif len(p1) <= len(q1) and _exact_div(q1, p1) is not None:
        core = p1
    elif len(q1) < len(p1) and _exact_div(p1, q1) is not None:
        core = q1
    else:
        vs = sorted(set(_vars_in(p1)) | set(_vars_in(q1)))
        try:
            core = _heu_gcd(p1, q1, vs)
        except _HeuristicFailed:
            core = _gcd_fallback(p1, q1)
    return poly_mul_term(core, m, c)


# ---------------------------------------------------------------------------


class ParamPoly:
    """Sparse polynomial with integer coefficients.  Immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {} if terms is None else terms
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({0: int(c)} if c else {})

    @classmethod
    def variable(cls, name, power=1):
        return cls({power << (FIELD_BITS * var_index(name)): 1})

    @classmethod
    def from_exponents(cls, mapping):
        """Build from ``{exponent tuple or {name: exp}: int}``."""
        out = {}
        for key, c in mapping.items():
            if isinstance(key, dict):
                m = 0
                for name, e in key.items():
                    m += e << (FIELD_BITS * var_index(name))
            else:
                m = mono_from_exponents(key)
            if c:
                out[m] = out.get(m, 0) + int(c)
        return cls({m: c for m, c in out.items() if c})

    def __bool__(self):
        return bool(self.terms)

    def is_one(self):
        return self.terms == {0: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        return ParamPoly(poly_add(self.terms, _as_poly(other).terms))

    __radd__ = __add__

    def __sub__(self, other):
        return ParamPoly(poly_sub(self.terms, _as_poly(other).terms))

    def __rsub__(self, other):
        return ParamPoly(poly_sub(_as_poly(other).terms, self.terms))

    def __neg__(self):
        return ParamPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return ParamPoly(poly_scale(self.terms, other))
        return ParamPoly(poly_mul(self.terms, _as_poly(other).terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ParamPoly({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other):
        q = _exact_div(self.terms, _as_poly(other).terms)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return ParamPoly(q)

    def gcd(self, other):
        g = _gcd(self.terms, _as_poly(other).terms)
        if g and g[_leading(g)] < 0:
            g = {m: -c for m, c in g.items()}
        return ParamPoly(g)

    def content(self):
        return _content(self.terms)

    def leading_coefficient(self):
        return self.terms[_leading(self.terms)] if self.terms else 0

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(mono_degree(m) for m in self.terms)
        i = var_index(name)
        return max(mono_var_degree(m, i) for m in self.terms)

    def variables(self):
        return tuple(_names[i] for i in _vars_in(self.terms))

    def sorted_terms(self):
        """(exponent tuple, coefficient) pairs in canonical display order."""
        return [(mono_exponents(m), self.terms[m])
                for m in sorted(self.terms, key=_display_key)]

    def subs(self, assignment):
        """Substitute ``{name: int | Fraction | ParamRatio}``; returns ParamRatio."""
        vals = {var_index(k): _as_ratio(v) for k, v in assignment.items()}
        total = ParamRatio.zero()
        for m, c in self.terms.items():
            term = ParamRatio(ParamPoly({0: c}))
            rest = 0
            for i, e in enumerate(mono_exponents(m)):
                if not e:
                    continue
                if i in vals:
                    term = term * vals[i] ** e
                else:
                    rest += e << (FIELD_BITS * i)
            if rest:
                term = term * ParamRatio(ParamPoly({rest: 1}))
            total = total + term
        return total

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"ParamPoly({render_poly(self)!r})"


def _as_poly(x):
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, int):
        return ParamPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ParamPoly")


_ONE = {0: 1}


def _reduce(num, den):
    """Reduce num/den (raw dicts); returns (num, den) with positive lead."""
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return {}, _ONE
    if den != _ONE:
        if len(den) == 1:
            (md, cd), = den.items()
            g = math.gcd(_content(num), cd)
            mg = mono_gcd((mono_gcd(num), md))
            if g != 1 or mg:
                num = _div_mono(num, mg, g)
                den = {md - mg: cd // g}
        else:
            g = _gcd(num, den)
            if g != _ONE and not (len(g) == 1 and g.get(0) in (1, -1)):
                num = _exact_div(num, g)
                den = _exact_div(den, g)
    lc = den[_leading(den)] if len(den) > 1 else next(iter(den.values()))
    if lc < 0:
        num = {m: -c for m, c in num.items()}
        den = {m: -c for m, c in den.items()}
    return num, den


class ParamRatio:
    """Reduced rational function num/den in the model parameters.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=None, den=None, *, _reduced=False):
        if num is None:
            num = ParamPoly()
        elif isinstance(num, int):
            num = ParamPoly.constant(num)
        if den is None:
            den = ParamPoly({0: 1})
            _reduced = True
        elif isinstance(den, int):
            den = ParamPoly.constant(den)
        if not _reduced:
            n, d = _reduce(num.terms, den.terms)
            num, den = ParamPoly(n), ParamPoly(d)
        elif not num.terms and den.terms != _ONE:
            den = ParamPoly({0: 1})
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers ---------------------------------------------------
    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE_R

    @classmethod
    def var(cls, name, power=1):
        if power >= 0:
            return cls(ParamPoly.variable(name, power), _reduced=True)
        return cls(ParamPoly({0: 1}), ParamPoly.variable(name, -power), _reduced=True)

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        return cls(ParamPoly.constant(q.numerator), ParamPoly.constant(q.denominator),
                   _reduced=True)

    @classmethod
    def parse(cls, text):
        return parse(text)

    # predicates ---------------------------------------------------------------
    def __bool__(self):
        return bool(self.num.terms)

    def is_zero(self):
        return not self.num.terms

    def is_constant(self):
        return set(self.num.terms) <= {0} and set(self.den.terms) == {0}

    def variables(self):
        return tuple(sorted(set(self.num.variables()) | set(self.den.variables()),
                            key=var_index))

    def __eq__(self, other):
        if isinstance(other, ParamRatio):
            return self.num.terms == other.num.terms and self.den.terms == other.den.terms
        if isinstance(other, (int, Fraction)):
            return self == ParamRatio.from_fraction(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # arithmetic -----------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        other = _as_ratio(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        x, y = self.num.terms, self.den.terms
        u, v = other.num.terms, other.den.terms
        if y == v:
            n, d = _reduce(poly_add(x, u), y)
        elif len(y) == 1 and len(v) == 1:
            (my, cy), = y.items()
            (mv, cv), = v.items()
            ml = mono_lcm(my, mv)
            cl = cy * cv // math.gcd(cy, cv)
            n = poly_add(poly_mul_term(x, ml - my, cl // cy), poly_mul_term(u, ml - mv, cl // cv))
            n, d = _reduce(n, {ml: cl})
        else:
            n, d = _reduce(poly_add(poly_mul(x, v), poly_mul(u, y)), poly_mul(y, v))
        return ParamRatio(ParamPoly(n), ParamPoly(d), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return ParamRatio(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        return self + (-_as_ratio(other))

    def __rsub__(self, other):
        return _as_ratio(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 1:
                return self
            n, d = _reduce(poly_scale(self.num.terms, other), self.den.terms)
            return ParamRatio(ParamPoly(n), ParamPoly(d), _reduced=True)
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        other = _as_ratio(other)
        if not self.num.terms or not other.num.terms:
            return _ZERO
        x, y = self.num.terms, self.den.terms
        u, v = other.num.terms, other.den.terms
        if y == _ONE and v == _ONE:
            return ParamRatio(ParamPoly(poly_mul(x, u)), _reduced=True)
        # cross-cancel: (x/y)(u/v) = (x/g1)(u/g2) / ((y/g2)(v/g1))
        n1, d1 = _reduce(x, v)
        n2, d2 = _reduce(u, y)
        n = poly_mul(n1, n2)
        d = poly_mul(d1, d2)
        lc = d[_leading(d)] if len(d) > 1 else next(iter(d.values()))
        if lc < 0:
            n = {m: -c for m, c in n.items()}
            d = {m: -c for m, c in d.items()}
        return ParamRatio(ParamPoly(n), ParamPoly(d), _reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("division by zero rational function")
        n, d = self.den.terms, self.num.terms
        lc = d[_leading(d)] if len(d) > 1 else next(iter(d.values()))
        if lc < 0:
            n = {m: -c for m, c in n.items()}
            d = {m: -c for m, c in d.items()}
        return ParamRatio(ParamPoly(n), ParamPoly(d), _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        other = _as_ratio(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratio(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return ParamRatio(self.num ** n, self.den ** n, _reduced=True)

    # evaluation -------------------------------------------------------------------
    def subs(self, assignment):
        """Partial substitution; values may be ints, Fractions or ParamRatio."""
        num = self.num.subs(assignment)
        den = self.den.subs(assignment)
        if den.is_zero():
            raise PoleError(f"denominator {self.den} vanishes at {assignment}")
        return num / den

    def eval_numeric(self, assignment):
        """Exact rational value at a point covering every variable present."""
        missing = set(self.variables()) - set(assignment)
        if missing:
            raise KeyError(f"assignment lacks {sorted(missing)}")
        val = self.subs({k: Fraction(v) for k, v in assignment.items()})
        return Fraction(val.num.terms.get(0, 0), val.den.terms[0])

    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num.terms.get(0, 0), self.den.terms[0])

    def __str__(self):
        return render_ratio(self)

    def __repr__(self):
        return f"ParamRatio({render_ratio(self)!r})"


_COERCIBLE = (ParamRatio, int, Fraction, ParamPoly, str)
_ZERO = ParamRatio()
_ONE_R = ParamRatio(ParamPoly({0: 1}))


def _as_ratio(x):
    if isinstance(x, ParamRatio):
        return x
    if isinstance(x, int):
        return ParamRatio(ParamPoly.constant(x), _reduced=True)
    if isinstance(x, Fraction):
        return ParamRatio.from_fraction(x)
    if isinstance(x, ParamPoly):
        return ParamRatio(x, _reduced=True)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ParamRatio")


as_ratio = _as_ratio


# ---------------------------------------------------------------------------
# rendering


def _render_mono(exps):
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(_names[i])
        elif e:
            parts.append(f"{_names[i]}^{e}")
    return "*".join(parts)


def render_poly(p):
    if not p.terms:
        return "0"
    out = []
    for exps, c in p.sorted_terms():
        mono = _render_mono(exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


def _is_atomic(p):
    # single factor: bare integer or bare variable power
    if len(p.terms) != 1:
        return False
    (m, c), = p.terms.items()
    return m == 0 or (c == 1 and sum(1 for e in mono_exponents(m) if e) == 1)


def render_ratio(x):
    num = render_poly(x.num)
    if x.den.is_one():
        return num
    if len(x.num.terms) > 1:
        num = f"({num})"
    den = render_poly(x.den)
    if not _is_atomic(x.den):
        den = f"({den})"
    return f"{num}/{den}"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"bad character at {pos} in {text!r}")
        num, name, op = mt.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ValueError(f"expected {op!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        val = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                val = val * self.unary()
            elif tok == ("op", "/"):
                self.take()
                val = val / self.unary()
            elif tok[0] in ("num", "name") or tok == ("op", "("):
                val = val * self.unary()  # implicit product, e.g. 2(a+b)
            else:
                return val

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            tok = self.peek()
            if tok == ("op", "("):
                self.take()
                e = self.expr()
                self.take(")")
                e = e.to_fraction()
                if e.denominator != 1:
                    raise ValueError("non-integer exponent")
                e = int(e)
            elif tok[0] == "num":
                e = self.take()[1]
            else:
                raise ValueError(f"bad exponent in {self.text!r}")
            return base ** (sign * e)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return ParamRatio(ParamPoly.constant(val), _reduced=True)
        if kind == "name":
            return ParamRatio.var(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.take(")")
            return inner
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse(text):
    """Parse an arithmetic expression in the model parameters into a ParamRatio."""
    return _Parser(text).parse()


def symbols(*names):
    return tuple(ParamRatio.var(n) for n in names)
