"""Pure-Python sparse polynomial kernels.

Polynomials are plain dicts mapping a packed exponent (int) to a nonzero
integer coefficient.  Multiplying two monomials is integer addition of the
packed keys.  The compiled ``_ckernels`` module implements the same functions
with the same signatures; ``kernels.py`` picks one at import time.
"""


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            del out[m]
    return out


def poly_sub(p, q):
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) - c
        if v:
            out[m] = v
        else:
            del out[m]
    return out


def poly_scale(p, c):
    if not c:
        return {}
    return {m: v * c for m, v in p.items()}


def poly_mul_term(p, mono, c):
    if not c:
        return {}
    return {m + mono: v * c for m, v in p.items()}


def poly_mul(p, q):
    if not p or not q:
        return {}
    if len(p) < len(q):
        p, q = q, p
    if len(q) == 1:
        (mq, cq), = q.items()
        return {m + mq: v * cq for m, v in p.items()}
    out = {}
    get = out.get
    pitems = list(p.items())
    for mq, cq in q.items():
        for mp, cp in pitems:
            k = mp + mq
            out[k] = get(k, 0) + cp * cq
    return {k: v for k, v in out.items() if v}


def poly_addmul(acc, p, q):
    """acc += p*q in place; returns acc."""
    get = acc.get
    for mq, cq in q.items():
        for mp, cp in p.items():
            k = mp + mq
            v = get(k, 0) + cp * cq
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return acc
