"""Truncated formal power series in q over the integers.

A :class:`TruncatedSeries` stores the coefficients of ``q^0 .. q^(prec-1)``.
Coefficients at or beyond ``prec`` are *unknown*, never implicitly zero, so
every operation propagates precision by the rule that keeps each retained
coefficient exact.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import InsufficientPrecision, NotAUnit, SeriesError
from .report import FAIL, PASS, CheckReport, Witness

try:  # GMP multiplication makes the Kronecker path much faster at large orders
    import gmpy2 as _gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _gmpy2 = None

# Dense multiplication below this length uses the schoolbook kernel.
SCHOOLBOOK_LIMIT = 40


class TruncatedSeries:
    """Immutable integer power series known modulo ``q^prec``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], prec: Optional[int] = None):
        c = tuple(int(v) for v in coeffs)
        if prec is not None:
            if prec < len(c):
                c = c[:prec]
            elif prec > len(c):
                # The caller asserts the input is exact (a polynomial).
                c = c + (0,) * (prec - len(c))
        if not c:
            raise ValueError("precision must be positive")
        self._c = c

    @classmethod
    def _wrap(cls, coeffs) -> "TruncatedSeries":
        s = object.__new__(cls)
        s._c = tuple(coeffs)
        if not s._c:
            raise ValueError("precision must be positive")
        return s

    @classmethod
    def one(cls, prec: int) -> "TruncatedSeries":
        return cls([1], prec)

    @classmethod
    def zero(cls, prec: int) -> "TruncatedSeries":
        return cls([0], prec)

    @classmethod
    def monomial(cls, exponent: int, prec: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * prec
        if exponent < prec:
            c[exponent] = coeff
        return cls._wrap(c)

    @property
    def prec(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def coeff(self, n: int) -> int:
        if n < 0:
            return 0
        if n >= len(self._c):
            raise InsufficientPrecision(f"coefficient q^{n} requested, precision is {len(self._c)}")
        return self._c[n]

    def __getitem__(self, key):
        if isinstance(key, slice):
            return self._c[key]
        return self.coeff(key)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        shown = ", ".join(str(v) for v in self._c[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"TruncatedSeries([{shown}{more}], prec={self.prec})"

    def nonzero_terms(self) -> list:
        return [(i, v) for i, v in enumerate(self._c) if v]

    def is_zero(self) -> bool:
        return not any(self._c)

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.prec:
            raise InsufficientPrecision(f"cannot truncate precision {self.prec} to {n}")
        return self if n == self.prec else TruncatedSeries._wrap(self._c[:n])

    def __add__(self, other):
        return add(self, _promote(other, self.prec))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-v for v in self._c)

    def __sub__(self, other):
        return add(self, -_promote(other, self.prec))

    def __rsub__(self, other):
        return add(_promote(other, self.prec), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries._wrap(other * v for v in self._c)
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return power(self, e)

    def __mod__(self, m: int):
        return reduce_mod(self, m)


def _promote(x, prec: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, int):
        return TruncatedSeries([x], prec)
    raise TypeError(f"cannot combine TruncatedSeries with {type(x).__name__}")


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.prec, b.prec)
    return TruncatedSeries._wrap(x + y for x, y in zip(a._c[:n], b._c[:n]))


def _sparse_cutoff(n: int) -> int:
    return 4 * isqrt(n) + 16


def _bits(values: Sequence[int]) -> int:
    return max((abs(v).bit_length() for v in values), default=0)


def _pack(values: Sequence[int], width: int) -> int:
    """Kronecker-pack signed coefficients into one integer, ``width`` bytes per slot."""
    zero = bytes(width)
    pos = b"".join(v.to_bytes(width, "little") if v > 0 else zero for v in values)
    x = int.from_bytes(pos, "little")
    if any(v < 0 for v in values):
        neg = b"".join((-v).to_bytes(width, "little") if v < 0 else zero for v in values)
        x -= int.from_bytes(neg, "little")
    return x


def _unpack(z: int, width: int, n: int) -> list:
    total = width * n
    bits = 8 * total
    half = 1 << (8 * width - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * n, "little")
    z = ((z & ((1 << bits) - 1)) + offset) & ((1 << bits) - 1)
    buf = z.to_bytes(total, "little")
    frombytes = int.from_bytes
    return [frombytes(buf[i:i + width], "little") - half for i in range(0, total, width)]


def kronecker_mul(a: Sequence[int], b: Sequence[int], n: int) -> list:
    """Truncated product via a single big-integer multiplication."""
    a = list(a[:n])
    b = list(b[:n])
    bound_bits = _bits(a) + _bits(b) + max(1, min(len(a), len(b))).bit_length() + 1
    width = bound_bits // 8 + 1
    x = _pack(a, width)
    y = _pack(b, width)
    if _gmpy2 is not None:
        z = int(_gmpy2.mpz(x) * _gmpy2.mpz(y))
    else:
        z = x * y
    return _unpack(z, width, n)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.prec, b.prec)
    ca, cb = a._c[:n], b._c[:n]
    ta = [(i, v) for i, v in enumerate(ca) if v]
    tb = [(i, v) for i, v in enumerate(cb) if v]
    if len(ta) < len(tb):
        ca, cb, ta, tb = cb, ca, tb, ta
    if not tb:
        return TruncatedSeries.zero(n)
    if len(tb) <= _sparse_cutoff(n):
        return TruncatedSeries._wrap(kernels.mul_sparse(ca, tb, n))
    if n <= SCHOOLBOOK_LIMIT:
        return TruncatedSeries._wrap(kernels.mul_dense(ca, cb, n))
    return TruncatedSeries._wrap(kronecker_mul(ca, cb, n))


def mul_sparse_terms(a: TruncatedSeries, terms: list, prec: Optional[int] = None) -> TruncatedSeries:
    """Multiply by an exactly known sparse series given as ``(exponent, coeff)`` pairs."""
    n = a.prec if prec is None else min(prec, a.prec)
    return TruncatedSeries._wrap(kernels.mul_sparse(a._c, terms, n))


def div_sparse_terms(a: TruncatedSeries, terms: list, prec: Optional[int] = None) -> TruncatedSeries:
    """Divide by an exactly known sparse series with unit constant term."""
    n = a.prec if prec is None else min(prec, a.prec)
    if not terms or terms[0][0] != 0 or terms[0][1] not in (1, -1):
        raise NotAUnit("sparse divisor must have constant term +1 or -1")
    return TruncatedSeries._wrap(kernels.div_sparse(a._c, terms, n))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a._c[0]
    if c0 not in (1, -1):
        raise NotAUnit(f"constant term {c0} is not a unit")
    n = a.prec
    terms = a.nonzero_terms()
    if len(terms) <= _sparse_cutoff(n) or n <= SCHOOLBOOK_LIMIT:
        return TruncatedSeries._wrap(kernels.div_sparse([1], terms, n))
    # Newton iteration x <- x + x(1 - a x), doubling the known length each step.
    x = [c0]
    k = 1
    while k < n:
        k = min(2 * k, n)
        ax = kronecker_mul(a._c, x, k)
        err = [-v for v in ax]
        err[0] += 1
        corr = kronecker_mul(x, err, k)
        x = [u + v for u, v in zip(x + [0] * (k - len(x)), corr)]
    return TruncatedSeries._wrap(x)


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return power(invert(a), -e)
    result = TruncatedSeries.one(a.prec)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def substitute_power(a: TruncatedSeries, t: int) -> TruncatedSeries:
    """Return a(q^t); precision scales by ``t``."""
    if t < 1:
        raise ValueError("substitution exponent must be positive")
    if t == 1:
        return a
    out = [0] * (a.prec * t)
    out[::t] = a._c
    return TruncatedSeries._wrap(out)


def shift(a: TruncatedSeries, s: int) -> TruncatedSeries:
    """Return q^s * a."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    if s == 0:
        return a
    return TruncatedSeries._wrap((0,) * s + a._c)


def extract_progression(a: TruncatedSeries, t: int, r: int) -> TruncatedSeries:
    """Return the series sum_n a_{tn+r} q^n."""
    if t < 1 or not 0 <= r < t:
        raise ValueError(f"invalid progression ({t}, {r})")
    if r >= a.prec:
        raise InsufficientPrecision(f"residue {r} beyond precision {a.prec}")
    return TruncatedSeries._wrap(a._c[r::t])


def reduce_mod(a: TruncatedSeries, m: int) -> TruncatedSeries:
    """Replace each coefficient by its representative in [0, m)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return TruncatedSeries._wrap(kernels.reduce_mod(a._c, m))


def eq_up_to(a: TruncatedSeries, b: TruncatedSeries, n: int, m: Optional[int] = None) -> CheckReport:
    """Compare coefficients of ``a`` and ``b`` below ``q^n``, optionally mod ``m``."""
    if n > a.prec or n > b.prec:
        raise InsufficientPrecision(f"order {n} exceeds precisions ({a.prec}, {b.prec})")
    ca, cb = a._c, b._c
    for i in range(n):
        x, y = ca[i], cb[i]
        if x != y and (m is None or (x - y) % m):
            if m is not None:
                x, y = x % m, y % m
            return CheckReport(status=FAIL, order=n, witness=Witness(i, x, y))
    return CheckReport(status=PASS, order=n)


def series(coeffs: Iterable[int], prec: Optional[int] = None) -> TruncatedSeries:
    return TruncatedSeries(coeffs, prec)


__all__ = [
    "TruncatedSeries",
    "SeriesError",
    "NotAUnit",
    "InsufficientPrecision",
    "add",
    "mul",
    "invert",
    "power",
    "substitute_power",
    "shift",
    "extract_progression",
    "reduce_mod",
    "eq_up_to",
    "kronecker_mul",
    "mul_sparse_terms",
    "div_sparse_terms",
    "series",
]
