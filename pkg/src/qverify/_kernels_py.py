"""Pure-Python series kernels.

Every function takes coefficient sequences of Python ints and returns a new
list of length ``n``. Inputs shorter than ``n`` are read as far as they go;
callers are responsible for precision bookkeeping.

A sparse operand is a list of ``(exponent, coefficient)`` pairs sorted by
exponent with nonzero coefficients.
"""

import operator
from bisect import bisect_right


def mul_dense(a, b, n):
    """Schoolbook product of ``a`` and ``b`` truncated to ``n`` terms."""
    la = min(len(a), n)
    lb = min(len(b), n)
    out = [0] * n
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        m = min(lb, n - i)
        out[i:i + m] = [o + ai * v for o, v in zip(out[i:i + m], b[:m])]
    return out


def mul_sparse(a, terms, n):
    """Product of dense ``a`` with a sparse series, truncated to ``n`` terms."""
    out = [0] * n
    la = len(a)
    for e, c in terms:
        if e >= n:
            break
        m = min(n - e, la)
        if m <= 0:
            continue
        seg = a[:m]
        window = out[e:e + m]
        if c == 1:
            out[e:e + m] = map(operator.add, window, seg)
        elif c == -1:
            out[e:e + m] = map(operator.sub, window, seg)
        else:
            out[e:e + m] = [o + c * v for o, v in zip(window, seg)]
    return out


def div_sparse(a, terms, n):
    """Solve ``x * b = a`` for ``x`` where ``b`` is sparse with ``b_0 = ±1``."""
    e0, b0 = terms[0]
    if e0 != 0 or b0 not in (1, -1):
        raise ValueError("sparse divisor must have constant term +1 or -1")
    # Group the tail by coefficient so each step does one sum per group.
    groups = {}
    for e, c in terms[1:]:
        if e < n:
            groups.setdefault(c, []).append(e)
    groups = list(groups.items())
    la = len(a)
    x = [0] * n
    for i in range(n):
        s = a[i] if i < la else 0
        for c, es in groups:
            k = bisect_right(es, i)
            if not k:
                continue
            t = sum([x[i - e] for e in es[:k]])
            if c == 1:
                s -= t
            elif c == -1:
                s += t
            else:
                s -= c * t
        x[i] = s if b0 == 1 else -s
    return x


def reduce_mod(a, m):
    return [v % m for v in a]
