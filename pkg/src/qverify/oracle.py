"""Brute-force partition counters, independent of the series engine.

Nothing here touches power series: counts come from recursion over the
allowed part sizes. Two phrasings of the overpartition count are provided so
they can be checked against each other:

* ``multiset``: sum over multisets of allowed parts, each weighted by
  ``2 ** (number of distinct part sizes)``;
* ``direct``: walk part sizes from largest to smallest, placing copies one at
  a time, where the first copy of a size may or may not carry the overline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Iterator, List, Tuple

from .errors import NotCoprime, TooLarge

DEFAULT_MAX_N = 40

_LMU = re.compile(r"^not-div-(\d+)-or-(\d+)$")


@dataclass(frozen=True)
class OracleConfig:
    max_n: int = DEFAULT_MAX_N
    parts: str = "all"


def parts_predicate(parts: str) -> Callable[[int], bool]:
    """Allowed-part test for one of ``all``, ``odd`` or ``not-div-L-or-M``."""
    if parts == "all":
        return lambda p: True
    if parts == "odd":
        return lambda p: p % 2 == 1
    m = _LMU.match(parts)
    if m:
        l, mu = int(m.group(1)), int(m.group(2))
        return lambda p: p % l != 0 and p % mu != 0
    raise ValueError(f"unknown parts predicate {parts!r}")


def lmu_parts(l: int, mu: int) -> str:
    return f"not-div-{l}-or-{mu}"


def _allowed(n: int, parts: str) -> Tuple[int, ...]:
    ok = parts_predicate(parts)
    return tuple(p for p in range(n, 0, -1) if ok(p))


def _check_size(n: int, max_n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise TooLarge(f"n = {n} exceeds the enumeration limit {max_n}")


def _count_multiset(n: int, sizes: Tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def walk(rem: int, idx: int) -> int:
        if rem == 0:
            return 1
        if idx == len(sizes):
            return 0
        p = sizes[idx]
        total = walk(rem, idx + 1)
        k = 1
        while k * p <= rem:
            total += 2 * walk(rem - k * p, idx + 1)
            k += 1
        return total

    return walk(n, 0)


def _count_direct(n: int, sizes: Tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def walk(rem: int, idx: int, used: bool) -> int:
        if rem == 0:
            return 1
        if idx == len(sizes):
            return 0
        p = sizes[idx]
        total = walk(rem, idx + 1, False)
        if p <= rem:
            # a first copy may be overlined or not; later copies are plain
            total += (1 if used else 2) * walk(rem - p, idx, True)
        return total

    return walk(n, 0, False)


def count_overpartitions(n: int, parts: str = "all", method: str = "direct",
                         max_n: int = DEFAULT_MAX_N) -> int:
    """Number of overpartitions of ``n`` whose parts satisfy ``parts``."""
    _check_size(n, max_n)
    sizes = _allowed(n, parts)
    if method == "direct":
        return _count_direct(n, sizes)
    if method == "multiset":
        return _count_multiset(n, sizes)
    raise ValueError(f"unknown method {method!r}")


def enumerate_overpartitions(n: int, parts: str = "all",
                             max_n: int = 20) -> Iterator[List[Tuple[int, bool]]]:
    """Yield every overpartition of ``n`` as ``[(part, overlined), ...]``.

    Parts are non-increasing and the overlined copy, if any, comes first.
    """
    _check_size(n, max_n)
    sizes = _allowed(n, parts)

    def walk(rem, idx):
        if rem == 0:
            yield []
            return
        for j in range(idx, len(sizes)):
            p = sizes[j]
            for k in range(1, rem // p + 1):
                for tail in walk(rem - k * p, j + 1):
                    plain = [(p, False)] * k
                    yield plain + tail
                    yield [(p, True)] + plain[1:] + tail

    yield from walk(n, 0)


def count_lmu_regular(l: int, mu: int, n: int, method: str = "direct",
                      max_n: int = DEFAULT_MAX_N) -> int:
    """Overpartitions of ``n`` with no part divisible by ``l`` or ``mu``."""
    if gcd(l, mu) != 1:
        raise NotCoprime(f"gcd({l}, {mu}) = {gcd(l, mu)}")
    return count_overpartitions(n, lmu_parts(l, mu), method, max_n)


def count_ppo(n: int, method: str = "direct", max_n: int = DEFAULT_MAX_N) -> int:
    """Ordered pairs of odd-part overpartitions with total size ``n``."""
    _check_size(n, max_n)
    odd = [count_overpartitions(j, "odd", method, max_n) for j in range(n + 1)]
    return sum(odd[j] * odd[n - j] for j in range(n + 1))
