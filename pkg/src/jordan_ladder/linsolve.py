"""Sparse fraction-free Gaussian elimination over Q(params).

Rows are scaled to polynomial entries, then eliminated with
``r <- (p/g) r - (e/g) pivot_row`` and divided by the gcd of their entries.
The pivot at every step is the entry with the fewest terms (ties broken by
the shortest row), which keeps intermediate polynomials small; the
back-substitution runs in the fraction field.
"""
import math

from .field import (ParamPoly, ParamRatio, _content, _exact_div, _gcd, mono_gcd,
                    mono_lcm)
from .kernels import poly_mul, poly_sub

_RHS = object()


class LinearSystemError(ArithmeticError):
    pass


class InconsistentSystem(LinearSystemError):
    """No solution; ``residuals`` lists the offending equations."""

    def __init__(self, message, residuals=()):
        super().__init__(message)
        self.residuals = list(residuals)


class UnderdeterminedSystem(LinearSystemError):
    """Solution not unique; carries a particular solution and a kernel basis."""

    def __init__(self, message, free_columns, kernel, particular=None):
        super().__init__(message)
        self.free_columns = list(free_columns)
        self.kernel = kernel
        self.particular = particular

    @property
    def kernel_dimension(self):
        return len(self.free_columns)


def _lcm(p, q):
    if p == q:
        return p
    if len(p) == 1 and len(q) == 1:
        (mp, cp), = p.items()
        (mq, cq), = q.items()
        return {mono_lcm(mp, mq): cp * cq // math.gcd(cp, cq)}
    g = _gcd(p, q)
    return poly_mul(_exact_div(p, g), q)


def _to_poly_row(row):
    den = {0: 1}
    for c in row.values():
        if c.den.terms != den:
            den = _lcm(den, c.den.terms)
    out = {}
    for k, c in row.items():
        if not c:
            continue
        if c.den.terms == den:
            out[k] = c.num.terms
        else:
            out[k] = poly_mul(c.num.terms, _exact_div(den, c.den.terms))
    return out


def _make_primitive(row):
    if not row:
        return row
    vals = list(row.values())
    cont = 0
    for v in vals:
        cont = math.gcd(cont, _content(v))
        if cont == 1:
            break
    mono = mono_gcd(m for v in vals for m in v)
    if cont != 1 or mono:
        row = {k: {m - mono: c // cont for m, c in v.items()} for k, v in row.items()}
        vals = list(row.values())
    if all(len(v) > 1 for v in vals):
        g = vals[0]
        for v in vals[1:]:
            g = _gcd(g, v)
            if len(g) == 1:
                break
        if len(g) > 1:
            row = {k: _exact_div(v, g) for k, v in row.items()}
    return row


def solve(equations, columns):
    """Solve sum_col coeff * x_col = rhs for every equation.

    ``equations`` is a list of ``(coeffs, rhs)`` with ``coeffs`` a dict
    column -> ParamRatio.  Returns dict column -> ParamRatio.  Raises
    InconsistentSystem or UnderdeterminedSystem.
    """
    columns = list(columns)
    colset = set(columns)
    rows = []
    for coeffs, rhs in equations:
        row = {k: v for k, v in coeffs.items() if v}
        unknown = set(row) - colset
        if unknown:
            raise ValueError(f"equation references unknown columns {sorted(unknown, key=str)}")
        if rhs:
            row[_RHS] = rhs
        if row:
            rows.append(_make_primitive(_to_poly_row(row)))

    pivots = []  # (col, row)
    active = [r for r in rows if r]
    while True:
        best = None
        for ri, r in enumerate(active):
            for k, v in r.items():
                if k is _RHS:
                    continue
                score = (len(v), len(r))
                if best is None or score < best[0]:
                    best = (score, ri, k)
        if best is None:
            break
        _, ri, col = best
        prow = active.pop(ri)
        p = prow[col]
        pivots.append((col, prow))
        nxt = []
        for r in active:
            e = r.get(col)
            if e is None:
                nxt.append(r)
                continue
            g = _gcd(p, e)
            pf = _exact_div(p, g) if g != {0: 1} else p
            ef = _exact_div(e, g) if g != {0: 1} else e
            new = {}
            for k in set(r) | set(prow):
                if k == col:
                    continue
                a = r.get(k)
                b = prow.get(k)
                val = poly_mul(pf, a) if a else {}
                if b:
                    val = poly_sub(val, poly_mul(ef, b))
                if val:
                    new[k] = val
            if new:
                nxt.append(_make_primitive(new))
        active = nxt

    bad = [r for r in active if _RHS in r]
    if bad:
        raise InconsistentSystem(f"{len(bad)} equation(s) reduce to 0 = nonzero",
                                 [ParamRatio(ParamPoly(r[_RHS])) for r in bad])

    pivot_cols = [c for c, _ in pivots]
    free = [c for c in columns if c not in set(pivot_cols)]

    def back_substitute(fixed, use_rhs):
        sol = dict(fixed)
        for col, prow in reversed(pivots):
            acc = ParamRatio(ParamPoly(prow[_RHS])) if use_rhs and _RHS in prow else ParamRatio.zero()
            for k, v in prow.items():
                if k is _RHS or k == col:
                    continue
                xv = sol.get(k)
                if xv:
                    acc = acc - xv * ParamRatio(ParamPoly(v))
            sol[col] = acc / ParamRatio(ParamPoly(prow[col]))
        return sol

    if free:
        zero = {c: ParamRatio.zero() for c in free}
        particular = back_substitute(zero, True)
        kernel = []
        for f in free:
            fixed = dict(zero)
            fixed[f] = ParamRatio.one()
            kernel.append({k: v for k, v in back_substitute(fixed, False).items() if v})
        raise UnderdeterminedSystem(f"kernel dimension {len(free)}", free, kernel,
                                    {k: v for k, v in particular.items() if v})
    sol = back_substitute({}, True)
    return {c: sol[c] for c in columns}
