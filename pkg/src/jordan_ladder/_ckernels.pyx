# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the sparse polynomial kernels in _kernels_py.

Same dict-of-packed-exponent representation and the same signatures.  Keys
and coefficients stay Python ints (exponents may exceed 64 bits and the
coefficients are unbounded), so the gain comes from typed loops and direct
dict C-API calls rather than machine arithmetic.
"""
from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.object cimport PyObject


def poly_add(dict p, dict q):
    cdef dict out
    cdef object m, c, v
    cdef PyObject *old
    if len(p) < len(q):
        p, q = q, p
    out = p.copy()
    for m, c in q.items():
        old = PyDict_GetItem(out, m)
        if old is NULL:
            PyDict_SetItem(out, m, c)
        else:
            v = <object>old + c
            if v:
                PyDict_SetItem(out, m, v)
            else:
                PyDict_DelItem(out, m)
    return out


def poly_sub(dict p, dict q):
    cdef dict out = p.copy()
    cdef object m, c, v
    cdef PyObject *old
    for m, c in q.items():
        old = PyDict_GetItem(out, m)
        if old is NULL:
            PyDict_SetItem(out, m, -c)
        else:
            v = <object>old - c
            if v:
                PyDict_SetItem(out, m, v)
            else:
                PyDict_DelItem(out, m)
    return out


def poly_scale(dict p, c):
    if not c:
        return {}
    return {m: v * c for m, v in p.items()}


def poly_mul_term(dict p, mono, c):
    if not c:
        return {}
    return {m + mono: v * c for m, v in p.items()}


def poly_mul(dict p, dict q):
    cdef dict out
    cdef list pitems
    cdef object mq, cq, mp, cp, k
    cdef PyObject *old
    cdef Py_ssize_t idx, n
    if not p or not q:
        return {}
    if len(p) < len(q):
        p, q = q, p
    if len(q) == 1:
        (mq, cq), = q.items()
        return {m + mq: v * cq for m, v in p.items()}
    out = {}
    pitems = list(p.items())
    n = len(pitems)
    for mq, cq in q.items():
        for idx in range(n):
            mp, cp = <tuple>pitems[idx]
            k = mp + mq
            old = PyDict_GetItem(out, k)
            if old is NULL:
                PyDict_SetItem(out, k, cp * cq)
            else:
                PyDict_SetItem(out, k, <object>old + cp * cq)
    return {k: v for k, v in out.items() if v}


def poly_addmul(dict acc, dict p, dict q):
    """acc += p*q in place; returns acc."""
    cdef object mq, cq, mp, cp, k, v
    cdef PyObject *old
    cdef list pitems = list(p.items())
    cdef Py_ssize_t idx, n = len(pitems)
    for mq, cq in q.items():
        for idx in range(n):
            mp, cp = <tuple>pitems[idx]
            k = mp + mq
            old = PyDict_GetItem(acc, k)
            if old is NULL:
                v = cp * cq
            else:
                v = <object>old + cp * cq
            if v:
                PyDict_SetItem(acc, k, v)
            elif old is not NULL:
                PyDict_DelItem(acc, k)
    return acc
