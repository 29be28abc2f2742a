"""Euler products, theta functions and partition generating functions.

``f_k`` denotes the Euler product ``prod_{i>=1} (1 - q^{k i})``. Products and
quotients of these are expanded with the sparse pentagonal-number form of
``f_k`` so every factor costs ``O(N sqrt(N / k))`` coefficient operations.
"""

from __future__ import annotations

import threading
from math import gcd, isqrt
from typing import Callable, Dict, Hashable, Mapping

from .errors import NotCoprime
from .series import (
    TruncatedSeries,
    div_sparse_terms,
    invert,
    mul,
    mul_sparse_terms,
    power,
    substitute_power,
)


class GrowingCache:
    """Per-key cache that keeps the longest expansion computed so far.

    Reads return a truncation of the stored series; inserts are serialized.
    """

    def __init__(self):
        self._store: Dict[Hashable, TruncatedSeries] = {}
        self._lock = threading.Lock()

    def get(self, key: Hashable, n: int, build: Callable[[int], TruncatedSeries]) -> TruncatedSeries:
        hit = self._store.get(key)
        if hit is not None and hit.prec >= n:
            return hit.truncate(n)
        with self._lock:
            hit = self._store.get(key)
            if hit is None or hit.prec < n:
                hit = build(n)
                self._store[key] = hit
        return hit.truncate(n)

    def clear(self):
        with self._lock:
            self._store.clear()

    def __len__(self):
        return len(self._store)


_euler_cache = GrowingCache()
_eta_cache = GrowingCache()


def clear_caches():
    _euler_cache.clear()
    _eta_cache.clear()


def euler_terms(k: int, n: int) -> list:
    """Sparse form of f_k below q^n: sum_j (-1)^j q^{k j(3j-1)/2}."""
    if k < 1:
        raise ValueError("Euler product index must be positive")
    terms = {0: 1}
    j = 1
    while True:
        lo = k * j * (3 * j - 1) // 2
        if lo >= n:
            break
        sign = -1 if j & 1 else 1
        terms[lo] = sign
        hi = k * j * (3 * j + 1) // 2
        if hi < n:
            terms[hi] = sign
        j += 1
    return sorted(terms.items())


def _euler_dense(k: int, n: int) -> TruncatedSeries:
    c = [0] * n
    for e, s in euler_terms(k, n):
        c[e] = s
    return TruncatedSeries._wrap(c)


def euler_series(k: int, n: int) -> TruncatedSeries:
    """f_k to order ``n``."""
    if n < 1:
        raise ValueError("order must be positive")
    return _euler_cache.get(k, n, lambda m: _euler_dense(k, m))


class EtaQuotientSpec:
    """A finite product prod f_k^{e_k}; colliding subscripts are merged."""

    __slots__ = ("factors",)

    def __init__(self, factors=None):
        merged: Dict[int, int] = {}
        items = factors.items() if isinstance(factors, Mapping) else (factors or ())
        for k, e in items:
            k, e = int(k), int(e)
            if k < 1:
                raise ValueError(f"subscript must be positive, got f_{k}")
            merged[k] = merged.get(k, 0) + e
        self.factors = tuple(sorted((k, e) for k, e in merged.items() if e))

    def __eq__(self, other):
        return isinstance(other, EtaQuotientSpec) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"EtaQuotientSpec({dict(self.factors)})"

    def __mul__(self, other):
        return EtaQuotientSpec(list(self.factors) + list(other.factors))

    def __truediv__(self, other):
        return EtaQuotientSpec(list(self.factors) + [(k, -e) for k, e in other.factors])

    def __pow__(self, e):
        return EtaQuotientSpec([(k, v * e) for k, v in self.factors])

    def __str__(self):
        num = [f"f{k}" + (f"^{e}" if e != 1 else "") for k, e in self.factors if e > 0]
        den = [f"f{k}" + (f"^{-e}" if e != -1 else "") for k, e in self.factors if e < 0]
        s = "*".join(num) or "1"
        if den:
            s += "/(" + "*".join(den) + ")" if len(den) > 1 else "/" + den[0]
        return s

    def substitute(self, t: int) -> "EtaQuotientSpec":
        """The quotient with q replaced by q^t."""
        return EtaQuotientSpec([(k * t, e) for k, e in self.factors])


def _expand(spec: EtaQuotientSpec, n: int) -> TruncatedSeries:
    s = TruncatedSeries.one(n)
    # Multiply first: the small-coefficient numerator keeps early terms cheap.
    for k, e in spec.factors:
        if e > 0:
            terms = euler_terms(k, n)
            for _ in range(e):
                s = mul_sparse_terms(s, terms)
    for k, e in spec.factors:
        if e < 0:
            terms = euler_terms(k, n)
            for _ in range(-e):
                s = div_sparse_terms(s, terms)
    return s


def expand_eta_quotient(spec, n: int) -> TruncatedSeries:
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(spec)
    if n < 1:
        raise ValueError("order must be positive")
    return _eta_cache.get(spec, n, lambda m: _expand(spec, m))


def theta_phi(n: int) -> TruncatedSeries:
    """phi(q) = 1 + 2 sum_{m>=1} q^{m^2}."""
    c = [0] * n
    c[0] = 1
    for m in range(1, isqrt(n - 1) + 1):
        c[m * m] = 2
    return TruncatedSeries._wrap(c)


def theta_phi_neg(n: int) -> TruncatedSeries:
    """phi(-q) = sum_k (-1)^k q^{k^2}."""
    c = [0] * n
    c[0] = 1
    for m in range(1, isqrt(n - 1) + 1):
        c[m * m] = -2 if m & 1 else 2
    return TruncatedSeries._wrap(c)


def triangular_cube(n: int) -> TruncatedSeries:
    """f_1^3 via sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}."""
    c = [0] * n
    m = 0
    while m * (m + 1) // 2 < n:
        c[m * (m + 1) // 2] = -(2 * m + 1) if m & 1 else 2 * m + 1
        m += 1
    return TruncatedSeries._wrap(c)


def square_series(n: int, scale: int = 1, alternating: bool = False, odd_only: bool = False) -> TruncatedSeries:
    """sum_{m>=1} (+-1)^m q^{scale m^2}, optionally restricted to odd m."""
    c = [0] * n
    m = 1
    while scale * m * m < n:
        if not odd_only or m & 1:
            c[scale * m * m] += -1 if alternating and m & 1 else 1
        m += 1
    return TruncatedSeries._wrap(c)


def double_square_series(n: int, a: int, b: int) -> TruncatedSeries:
    """sum_{m,n>=1} q^{a m^2 + b n^2}."""
    c = [0] * n
    i = 1
    while a * i * i + b < n:
        j = 1
        while a * i * i + b * j * j < n:
            c[a * i * i + b * j * j] += 1
            j += 1
        i += 1
    return TruncatedSeries._wrap(c)


def inverse_phi_neg_product(n: int) -> TruncatedSeries:
    """prod_{j>=0} phi(q^{2^j})^{2^j}, keeping only factors with 2^j < n.

    Later factors are 1 + O(q^n) and cannot change retained coefficients.
    """
    s = TruncatedSeries.one(n)
    d = 1
    while d < n:
        base = substitute_power(theta_phi(-(-n // d)), d).truncate(n)
        s = mul(s, power(base, d))
        d *= 2
    return s


def lmu_spec(l: int, mu: int) -> EtaQuotientSpec:
    return EtaQuotientSpec([
        (2, 1), (l, 2), (mu, 2), (2 * l * mu, 1),
        (1, -2), (2 * l, -1), (2 * mu, -1), (l * mu, -2),
    ])


OVERPARTITION_SPEC = EtaQuotientSpec({1: -2, 2: 1})
PPO_SPEC = EtaQuotientSpec({2: 6, 1: -4, 4: -2})


def gen_overpartitions(n: int) -> TruncatedSeries:
    return expand_eta_quotient(OVERPARTITION_SPEC, n)


def gen_lmu_regular(l: int, mu: int, n: int) -> TruncatedSeries:
    """Generating function of (l, mu)-regular overpartitions."""
    if l < 2 or mu < 2:
        raise ValueError("l and mu must exceed 1")
    if gcd(l, mu) != 1:
        raise NotCoprime(f"gcd({l}, {mu}) = {gcd(l, mu)}")
    return expand_eta_quotient(lmu_spec(l, mu), n)


def gen_ppo(n: int) -> TruncatedSeries:
    """Overpartition pairs into odd parts: phi(q) / phi(-q)."""
    return mul(theta_phi(n), invert(theta_phi_neg(n)))
