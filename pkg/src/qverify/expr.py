"""A small expression language for q-series identities.

Expressions are immutable trees; :func:`eval_expr` expands one to a
:class:`~qverify.series.TruncatedSeries` of a requested order, asking each
subtree for exactly the precision it needs.

    >>> from qverify.expr import f, q, eval_expr
    >>> lhs = f(3, 3) / f(1)
    >>> rhs = f(4, 3) * f(6, 2) / (f(2, 2) * f(12)) + q() * f(12, 3) / f(4)
    >>> eval_expr(lhs, 50) == eval_expr(rhs, 50)
    True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from . import eta as _eta
from .series import (
    TruncatedSeries,
    add,
    extract_progression,
    mul,
    power,
    shift,
    substitute_power,
)


class SeriesExpr:
    """Base class providing arithmetic sugar for expression nodes."""

    def __add__(self, other):
        return Sum((self, _lift(other)))

    def __radd__(self, other):
        return Sum((_lift(other), self))

    def __sub__(self, other):
        return Sum((self, -_lift(other)))

    def __rsub__(self, other):
        return Sum((_lift(other), -self))

    def __neg__(self):
        return Product((IntScalar(-1), self))

    def __mul__(self, other):
        return Product((self, _lift(other)))

    def __rmul__(self, other):
        return Product((_lift(other), self))

    def __truediv__(self, other):
        return Product((self, Power(_lift(other), -1)))

    def __pow__(self, e: int):
        return Power(self, e)


def _lift(x) -> SeriesExpr:
    if isinstance(x, SeriesExpr):
        return x
    if isinstance(x, int):
        return IntScalar(x)
    raise TypeError(f"cannot use {type(x).__name__} in a series expression")


@dataclass(frozen=True)
class EtaQ(SeriesExpr):
    spec: _eta.EtaQuotientSpec

    def __mul__(self, other):
        if isinstance(other, EtaQ):
            return EtaQ(self.spec * other.spec)
        return super().__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, EtaQ):
            return EtaQ(self.spec / other.spec)
        return super().__truediv__(other)

    def __pow__(self, e: int):
        return EtaQ(self.spec ** e)


@dataclass(frozen=True)
class PhiTheta(SeriesExpr):
    """phi(sign * q^d)."""

    sign: int = 1
    d: int = 1


@dataclass(frozen=True)
class TriangularCube(SeriesExpr):
    """f_1^3 as a signed triangular-number sum, with q replaced by q^d."""

    d: int = 1


@dataclass(frozen=True)
class IntScalar(SeriesExpr):
    c: int


@dataclass(frozen=True)
class QPower(SeriesExpr):
    s: int


@dataclass(frozen=True)
class Sum(SeriesExpr):
    terms: Tuple[SeriesExpr, ...]


@dataclass(frozen=True)
class Product(SeriesExpr):
    factors: Tuple[SeriesExpr, ...]


@dataclass(frozen=True)
class Power(SeriesExpr):
    base: SeriesExpr
    e: int


@dataclass(frozen=True)
class Subst(SeriesExpr):
    """Replace q by q^t."""

    inner: SeriesExpr
    t: int


@dataclass(frozen=True)
class NegateQ(SeriesExpr):
    """Replace q by -q."""

    inner: SeriesExpr


@dataclass(frozen=True)
class Progression(SeriesExpr):
    """sum_n c_{tn+r} q^n for the coefficients c of ``inner``."""

    inner: SeriesExpr
    t: int
    r: int


@dataclass(frozen=True)
class PhiNegInverseProduct(SeriesExpr):
    """prod_{j>=0} phi(q^{2^j})^{2^j}; only factors with 2^j below the order are kept."""


Expr = Union[EtaQ, PhiTheta, TriangularCube, IntScalar, QPower, Sum, Product,
             Power, Subst, NegateQ, Progression, PhiNegInverseProduct]


def f(k: int, e: int = 1) -> EtaQ:
    """The Euler product f_k raised to ``e``."""
    return EtaQ(_eta.EtaQuotientSpec({k: e}))


def eta_quotient(factors) -> EtaQ:
    return EtaQ(_eta.EtaQuotientSpec(factors))


def q(s: int = 1) -> QPower:
    return QPower(s)


def phi(d: int = 1) -> PhiTheta:
    return PhiTheta(1, d)


def phi_neg(d: int = 1) -> PhiTheta:
    return PhiTheta(-1, d)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _substituted(build, n: int, d: int) -> TruncatedSeries:
    if d == 1:
        return build(n)
    return substitute_power(build(_ceil_div(n, d)), d).truncate(n)


def eval_expr(e: SeriesExpr, n: int) -> TruncatedSeries:
    """Expand ``e`` exactly to order ``n``."""
    if n < 1:
        raise ValueError("order must be positive")
    if isinstance(e, EtaQ):
        return _eta.expand_eta_quotient(e.spec, n)
    if isinstance(e, PhiTheta):
        build = _eta.theta_phi if e.sign == 1 else _eta.theta_phi_neg
        return _substituted(build, n, e.d)
    if isinstance(e, TriangularCube):
        return _substituted(_eta.triangular_cube, n, e.d)
    if isinstance(e, IntScalar):
        return TruncatedSeries([e.c], n)
    if isinstance(e, QPower):
        return TruncatedSeries.monomial(e.s, n)
    if isinstance(e, Sum):
        acc = TruncatedSeries.zero(n)
        for t in e.terms:
            acc = add(acc, eval_expr(t, n))
        return acc
    if isinstance(e, Product):
        return _eval_product(e, n)
    if isinstance(e, Power):
        return power(eval_expr(e.base, n), e.e)
    if isinstance(e, Subst):
        return substitute_power(eval_expr(e.inner, _ceil_div(n, e.t)), e.t).truncate(n)
    if isinstance(e, NegateQ):
        s = eval_expr(e.inner, n)
        return TruncatedSeries._wrap(-c if i & 1 else c for i, c in enumerate(s.coeffs))
    if isinstance(e, Progression):
        return extract_progression(eval_expr(e.inner, e.t * n + e.r), e.t, e.r)
    if isinstance(e, PhiNegInverseProduct):
        return _eta.inverse_phi_neg_product(n)
    raise TypeError(f"not a series expression: {e!r}")


def _eval_product(e: Product, n: int) -> TruncatedSeries:
    # Pull out monomials and scalars so the remaining factors are expanded
    # only as far as the shift requires; merge eta quotients into one.
    s = 0
    scale = 1
    spec = _eta.EtaQuotientSpec()
    rest = []
    for fac in _flatten(e):
        if isinstance(fac, QPower):
            s += fac.s
        elif isinstance(fac, IntScalar):
            scale *= fac.c
        elif isinstance(fac, EtaQ):
            spec = spec * fac.spec
        elif isinstance(fac, Power) and isinstance(fac.base, EtaQ):
            spec = spec * fac.base.spec ** fac.e
        else:
            rest.append(fac)
    if scale == 0 or s >= n:
        return TruncatedSeries.zero(n)
    m = n - s
    acc = _eta.expand_eta_quotient(spec, m)
    for fac in rest:
        acc = mul(acc, eval_expr(fac, m))
    if scale != 1:
        acc = acc * scale
    return shift(acc, s)


def _flatten(e: Product):
    for fac in e.factors:
        if isinstance(fac, Product):
            yield from _flatten(fac)
        else:
            yield fac
