"""Congruence claims over coefficient progressions and related helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Dict, Optional, Set

from .errors import InsufficientPrecision
from .eta import GrowingCache, gen_lmu_regular, gen_overpartitions, gen_ppo
from .report import FAIL, PASS, CheckReport, Witness
from .series import TruncatedSeries, shift, substitute_power

EXCEPTIONS = ("none", "odd-square", "square")

_LMU_SOURCE = re.compile(r"^R(\d+)_(\d+)$")
_source_cache = GrowingCache()


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_odd_square(n: int) -> bool:
    """True iff n = m^2 for an odd integer m."""
    return n % 2 == 1 and is_square(n)


_EXCEPTION_TESTS: Dict[str, Callable[[int], bool]] = {
    "none": lambda n: False,
    "odd-square": is_odd_square,
    "square": is_square,
}


def source_series(source: str, n: int) -> TruncatedSeries:
    """Generating function named by ``source`` to order ``n``.

    Known names: ``pbar`` (overpartitions), ``ppo`` (overpartition pairs into
    odd parts) and ``R<l>_<mu>`` for (l, mu)-regular overpartitions.
    """
    if source == "pbar":
        return gen_overpartitions(n)
    if source == "ppo":
        return _source_cache.get("ppo", n, gen_ppo)
    m = _LMU_SOURCE.match(source)
    if m:
        return gen_lmu_regular(int(m.group(1)), int(m.group(2)), n)
    raise KeyError(f"unknown series source {source!r}")


@dataclass(frozen=True)
class CongruenceClaim:
    """Coefficient at t*n + r vanishes mod m for n >= n0 (minus exceptions on n)."""

    source: str
    t: int
    r: int
    m: int
    n0: int = 0
    exception: str = "none"

    def __post_init__(self):
        if self.t < 1 or not 0 <= self.r < self.t:
            raise ValueError(f"invalid progression ({self.t}, {self.r})")
        if self.m < 1:
            raise ValueError("modulus must be positive")
        if self.exception not in EXCEPTIONS:
            raise ValueError(f"unknown exception predicate {self.exception!r}")

    def required_precision(self, n_terms: int) -> int:
        return self.t * n_terms + self.r

    def describe(self) -> str:
        s = f"{self.source}({self.t}n+{self.r}) = 0 mod {self.m}, n >= {self.n0}"
        if self.exception != "none":
            s += f", n not {self.exception}"
        return s


def check_claim(claim: CongruenceClaim, n_terms: int,
                series: Optional[TruncatedSeries] = None) -> CheckReport:
    """Scan n0 <= n < n_terms; the witness index is the coefficient index t*n + r."""
    need = claim.required_precision(n_terms)
    if series is None:
        series = source_series(claim.source, need)
    elif series.prec < need:
        raise InsufficientPrecision(f"claim needs precision {need}, series has {series.prec}")
    if claim.m == 1:
        return CheckReport(status=PASS, order=n_terms)
    skip = _EXCEPTION_TESTS[claim.exception]
    c = series.coeffs
    for n in range(claim.n0, n_terms):
        if skip(n):
            continue
        idx = claim.t * n + claim.r
        res = c[idx] % claim.m
        if res:
            return CheckReport(status=FAIL, order=n_terms, witness=Witness(idx, 0, res))
    return CheckReport(status=PASS, order=n_terms)


def verify_vanishing_via_self_similarity(g: TruncatedSeries, s: int, t: int, k: int,
                                         n: int) -> CheckReport:
    """Check both G = q^s G(q^t) (mod k) and G = 0 (mod k) below q^n."""
    if g.prec < n:
        raise InsufficientPrecision(f"order {n} exceeds precision {g.prec}")
    if s < 1 or t < 2 or k < 1:
        raise ValueError("need s >= 1, t >= 2, k >= 1")
    c = g.coeffs
    image = shift(substitute_power(g, t), s).coeffs
    for i in range(n):
        if (c[i] - image[i]) % k:
            return CheckReport(status=FAIL, order=n, witness=Witness(i, c[i] % k, image[i] % k),
                               detail="self-similarity")
    for i in range(n):
        if c[i] % k:
            return CheckReport(status=FAIL, order=n, witness=Witness(i, 0, c[i] % k),
                               detail="vanishing")
    return CheckReport(status=PASS, order=n)


def quadratic_nonresidues(k: int) -> Set[int]:
    """Residues in [1, k-1] that are not squares mod k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    squares = {m * m % k for m in range(k)}
    return {r for r in range(1, k) if r not in squares}


def triangular_residue_check(m_max: int) -> CheckReport:
    """Triangular numbers m(m+1)/2 for 0 <= m <= m_max are never 2 mod 3."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    for m in range(m_max + 1):
        res = m * (m + 1) // 2 % 3
        if res == 2:
            return CheckReport(status=FAIL, order=m_max, witness=Witness(m, 0, res))
    return CheckReport(status=PASS, order=m_max)
