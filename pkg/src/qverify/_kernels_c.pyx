# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled series kernels (same contracts as ``_kernels_py``).

Coefficients stay Python ints; the win comes from typed loop indices and
direct list access in the inner loops.
"""

from array import array


def mul_dense(a, b, Py_ssize_t n):
    cdef list xa = list(a)
    cdef list xb = list(b)
    cdef Py_ssize_t la = min(len(xa), n)
    cdef Py_ssize_t lb = min(len(xb), n)
    cdef list out = [0] * n
    cdef Py_ssize_t i, j, m
    cdef object ai
    for i in range(la):
        ai = xa[i]
        if not ai:
            continue
        m = min(lb, n - i)
        for j in range(m):
            out[i + j] = out[i + j] + ai * xb[j]
    return out


def mul_sparse(a, terms, Py_ssize_t n):
    cdef list xa = list(a)
    cdef list out = [0] * n
    cdef Py_ssize_t la = len(xa)
    cdef Py_ssize_t e, i, m
    cdef object c
    for pair in terms:
        e = pair[0]
        c = pair[1]
        if e >= n:
            break
        m = min(n - e, la)
        if c == 1:
            for i in range(m):
                out[i + e] = out[i + e] + xa[i]
        elif c == -1:
            for i in range(m):
                out[i + e] = out[i + e] - xa[i]
        else:
            for i in range(m):
                out[i + e] = out[i + e] + c * xa[i]
    return out


def div_sparse(a, terms, Py_ssize_t n):
    cdef list xa = list(a)
    cdef Py_ssize_t la = len(xa)
    cdef Py_ssize_t i, k, e
    cdef Py_ssize_t np_, nm, no
    cdef long long[:] pe, me, oe
    cdef list x, oc
    cdef object s, c
    cdef bint neg
    first = terms[0]
    if first[0] != 0 or first[1] not in (1, -1):
        raise ValueError("sparse divisor must have constant term +1 or -1")
    neg = first[1] == -1
    plus = []
    minus = []
    other = []
    for pair in terms[1:]:
        if pair[0] >= n:
            continue
        c = pair[1]
        if c == 1:
            plus.append(pair[0])
        elif c == -1:
            minus.append(pair[0])
        else:
            other.append(pair)
    np_ = len(plus)
    nm = len(minus)
    no = len(other)
    pe = _as_index_array(plus)
    me = _as_index_array(minus)
    oe = _as_index_array([p[0] for p in other])
    oc = [p[1] for p in other]
    x = [0] * n
    for i in range(n):
        s = xa[i] if i < la else 0
        for k in range(np_):
            e = pe[k]
            if e > i:
                break
            s = s - x[i - e]
        for k in range(nm):
            e = me[k]
            if e > i:
                break
            s = s + x[i - e]
        for k in range(no):
            e = oe[k]
            if e > i:
                break
            s = s - oc[k] * x[i - e]
        x[i] = -s if neg else s
    return x


def reduce_mod(a, m):
    cdef list xa = list(a)
    cdef Py_ssize_t i, n = len(xa)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = xa[i] % m
    return out


cdef long long[:] _as_index_array(list values):
    # A one-slot dummy keeps the memoryview valid for empty input; callers
    # loop over len(values) so the dummy is never read.
    return array("q", values or [0])
