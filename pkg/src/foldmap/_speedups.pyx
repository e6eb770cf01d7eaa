# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled term-merge kernels; signatures mirror _kernel.py exactly.

The coefficients stay Python objects (ints, rationals, CycloElem), so the
speedup comes from running the merge loops, tuple packing and dict plumbing
at C level rather than from coefficient arithmetic.
"""

cimport cython
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

BACKEND = "cython"


def add_terms(dict a, dict b, int sign=1):
    """a + sign*b as a fresh pruned term dict."""
    cdef dict out = dict(a)
    cdef object e, c, s
    if sign == 1:
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
    else:
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s = s - c
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def scale_terms(dict a, coef):
    """coef * a as a fresh pruned term dict."""
    cdef dict out = {}
    cdef object e, c, p
    for e, c in a.items():
        p = c * coef
        if p:
            out[e] = p
    return out


cdef inline tuple _add_exps(tuple ea, tuple eb, Py_ssize_t n):
    cdef tuple e = PyTuple_New(n)
    cdef Py_ssize_t k
    cdef object v
    for k in range(n):
        v = (<object>PyTuple_GET_ITEM(ea, k)) + (<object>PyTuple_GET_ITEM(eb, k))
        Py_INCREF(v)
        PyTuple_SET_ITEM(e, k, v)
    return e


def mul_terms(dict a, dict b):
    """Sparse product of two term dicts."""
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, c, s
    cdef Py_ssize_t n
    if len(a) > len(b):
        a, b = b, a
    cdef list b_items = list(b.items())
    for ea, ca in a.items():
        n = PyTuple_GET_SIZE(ea)
        for eb, cb in b_items:
            e = _add_exps(ea, eb, n)
            c = ca * cb
            s = out.get(e)
            if s is None:
                if c:
                    out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out
