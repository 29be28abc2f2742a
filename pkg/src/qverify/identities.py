"""Registry of q-series identities, each verified numerically to a given order.

Every row is a two-sided identity between series expressions, exact unless a
modulus is given. Row ids are stable: the theorem suite and the CLI refer to
them by name.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import UnknownIdentity
from .expr import (
    NegateQ,
    PhiNegInverseProduct,
    SeriesExpr,
    TriangularCube,
    eval_expr,
    f,
    phi,
    phi_neg,
    q,
)
from .report import CheckReport
from .series import eq_up_to

DEFAULT_ORDER = 400


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs: SeriesExpr
    rhs: SeriesExpr
    modulus: Optional[int] = None
    citation: str = ""
    # further (lhs, rhs) phrasings of the same identity, checked alongside
    alternates: Tuple[Tuple[SeriesExpr, SeriesExpr], ...] = field(default=())


def _rows() -> List[IdentityRecord]:
    rows = [
        IdentityRecord(
            "PHI_ETA", phi(), f(2, 5) / (f(1, 2) * f(4, 2)),
            citation="phi(q) = f2^5/(f1^2 f4^2)",
        ),
        IdentityRecord(
            "PHINEG_ETA", phi_neg(), f(1, 2) / f(2),
            citation="phi(-q) = sum (-1)^k q^(k^2) = f1^2/f2",
        ),
        IdentityRecord(
            "PHI_RATIO", phi(), phi_neg(2) ** 2 / phi_neg(),
            citation="phi(q) = phi(-q^2)^2 / phi(-q)",
            alternates=(
                (f(2, 5) / (f(1, 2) * f(4, 2)), (f(2, 2) / f(4)) ** 2 / (f(1, 2) / f(2))),
            ),
        ),
        IdentityRecord(
            "INV_PHINEG_PRODUCT", phi_neg() ** -1, PhiNegInverseProduct(),
            citation="1/phi(-q) = phi(q) phi(q^2)^2 phi(q^4)^4 ...",
        ),
        IdentityRecord(
            "F1_CUBE_TRIANGULAR", f(1, 3), TriangularCube(),
            citation="f1^3 = sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2)",
        ),
        IdentityRecord(
            "INV_F1_4_2DISSECT", f(1, -4),
            f(4, 14) / (f(2, 14) * f(8, 4)) + 4 * q() * f(4, 2) * f(8, 4) / f(2, 10),
            citation="2-dissection of 1/f1^4",
        ),
        IdentityRecord(
            "F9_OVER_F1_2DISSECT", f(9) / f(1),
            f(12, 3) * f(18) / (f(2, 2) * f(6) * f(36))
            + q() * f(4, 2) * f(6) * f(36) / (f(2, 3) * f(12)),
            citation="2-dissection of f9/f1",
        ),
        IdentityRecord(
            "F33_OVER_F1_2DISSECT", f(3, 3) / f(1),
            f(4, 3) * f(6, 2) / (f(2, 2) * f(12)) + q() * f(12, 3) / f(4),
            citation="2-dissection of f3^3/f1",
        ),
        IdentityRecord(
            "F3_OVER_F13_2DISSECT", f(3) / f(1, 3),
            f(4, 6) * f(6, 3) / (f(2, 9) * f(12, 2)) + 3 * q() * f(4, 2) * f(6) * f(12, 2) / f(2, 7),
            citation="2-dissection of f3/f1^3",
        ),
        IdentityRecord(
            "F32_OVER_F12_2DISSECT", f(3, 2) / f(1, 2),
            f(4, 4) * f(6) * f(12, 2) / (f(2, 5) * f(8) * f(24))
            + 2 * q() * f(4) * f(6, 2) * f(8) * f(24) / (f(2, 4) * f(12)),
            citation="2-dissection of f3^2/f1^2",
        ),
        IdentityRecord(
            "F1_OVER_F33_2DISSECT", f(1) / f(3, 3),
            f(2) * f(4, 2) * f(12, 2) / f(6, 7)
            - q() * f(2, 3) * f(12, 6) / (f(4, 2) * f(6, 9)),
            citation="2-dissection of f1/f3^3",
        ),
        IdentityRecord(
            "F3_OVER_F1_2DISSECT", f(3) / f(1),
            f(4) * f(6) * f(16) * f(24, 2) / (f(2, 2) * f(8) * f(12) * f(48))
            + q() * f(6) * f(8, 2) * f(48) / (f(2, 2) * f(16) * f(24)),
            citation="2-dissection of f3/f1",
        ),
        IdentityRecord(
            "F1F3_2DISSECT", f(1) * f(3),
            f(2) * f(8, 2) * f(12, 4) / (f(4, 2) * f(6) * f(24, 2))
            - q() * f(4, 4) * f(6) * f(24, 2) / (f(2) * f(8, 2) * f(12, 2)),
            citation="2-dissection of f1 f3",
        ),
        IdentityRecord(
            "NEGQ_EULER", NegateQ(f(1)), f(2, 3) / (f(1) * f(4)),
            citation="(-q;-q)_inf = f2^3/(f1 f4)",
        ),
        IdentityRecord(
            "F1F2_3DISSECT", f(1) * f(2),
            f(6) * f(9, 4) / (f(3) * f(18, 2)) - q() * f(9) * f(18)
            - 2 * q(2) * f(3) * f(18, 4) / (f(6) * f(9, 2)),
            citation="3-dissection of f1 f2",
        ),
        IdentityRecord(
            "F2_OVER_F12_3DISSECT", f(2) / f(1, 2),
            f(6, 4) * f(9, 6) / (f(3, 8) * f(18, 3)) + 2 * q() * f(6, 3) * f(9, 3) / f(3, 7)
            + 4 * q(2) * f(6, 2) * f(18, 3) / f(3, 6),
            citation="3-dissection of f2/f1^2",
        ),
        IdentityRecord(
            "F1_OVER_F4_3DISSECT", f(1) / f(4),
            f(6) * f(9) * f(18) / f(12, 3) - q() * f(3) * f(18, 4) / (f(9, 2) * f(12, 3))
            - q(2) * f(6, 2) * f(9) * f(36, 3) / (f(12, 4) * f(18, 2)),
            citation="3-dissection of f1/f4",
        ),
        IdentityRecord(
            "INV_F1F2_3DISSECT", (f(1) * f(2)) ** -1,
            f(9, 9) / (f(3, 6) * f(6, 2) * f(18, 3))
            + q() * f(9, 6) / (f(3, 5) * f(6, 3))
            + 3 * q(2) * f(9, 3) * f(18, 3) / (f(3, 4) * f(6, 4))
            - 2 * q(3) * f(18, 6) / (f(3, 3) * f(6, 5))
            + 4 * q(4) * f(18, 9) / (f(3, 2) * f(6, 6) * f(9, 3)),
            citation="3-dissection of 1/(f1 f2)",
        ),
        IdentityRecord(
            "F12_OVER_F2_3DISSECT", f(1, 2) / f(2),
            f(9, 2) / f(18) - 2 * q() * f(3) * f(18, 2) / (f(6) * f(9)),
            citation="3-dissection of f1^2/f2",
        ),
        IdentityRecord(
            "PHI4_MOD8", phi() ** 4, f(1, 0), modulus=8,
            citation="phi(q)^4 = 1 (mod 8)",
        ),
    ]
    return rows


IDENTITIES: Dict[str, IdentityRecord] = {r.id: r for r in _rows()}

# alternative ids accepted by lookups; the right side of the f3/f1^3 row is
# a 2-dissection, but the older name is kept so callers do not break
ALIASES: Dict[str, str] = {"F3_OVER_F13_3DISSECT": "F3_OVER_F13_2DISSECT"}

# (p, k, l) instances of f_l^(p^k) = f_(lp)^(p^(k-1)) (mod p^k)
MODPK_CASES: Tuple[Tuple[int, int, int], ...] = ((3, 1, 1), (2, 3, 1), (2, 1, 3), (3, 2, 1))


def get_identity(identity_id: str) -> IdentityRecord:
    try:
        return IDENTITIES[ALIASES.get(identity_id, identity_id)]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def verify_record(rec: IdentityRecord, n: int = DEFAULT_ORDER) -> CheckReport:
    start = time.perf_counter()
    report = eq_up_to(eval_expr(rec.lhs, n), eval_expr(rec.rhs, n), n, rec.modulus)
    if report.passed:
        for lhs, rhs in rec.alternates:
            report = eq_up_to(eval_expr(lhs, n), eval_expr(rhs, n), n, rec.modulus)
            if not report.passed:
                report = report.with_meta(detail="alternate form")
                break
    millis = (time.perf_counter() - start) * 1000
    return report.with_meta(id=rec.id, citation=rec.citation, millis=millis)


def verify_identity(identity_id: str, n: int = DEFAULT_ORDER) -> CheckReport:
    return verify_record(get_identity(identity_id), n)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def modpk_record(p: int, k: int, l: int) -> IdentityRecord:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    return IdentityRecord(
        f"MODPK_{p}_{k}_{l}", f(l, p ** k), f(l * p, p ** (k - 1)), modulus=p ** k,
        citation=f"f{l}^({p}^{k}) = f{l * p}^({p}^{k - 1}) (mod {p}^{k})",
    )


def verify_modpk_family(p: int, k: int, l: int, n: int = DEFAULT_ORDER) -> CheckReport:
    """Check f_l^{p^k} = f_{lp}^{p^{k-1}} (mod p^k) to order ``n``."""
    return verify_record(modpk_record(p, k, l), n)


def verify_all(n: int = DEFAULT_ORDER) -> List[CheckReport]:
    reports = [verify_record(r, n) for r in IDENTITIES.values()]
    reports += [verify_modpk_family(p, k, l, n) for p, k, l in MODPK_CASES]
    return reports


def catalog(n: Optional[int] = None) -> List[dict]:
    """One entry per registry row; with ``n`` each row is verified at that order."""
    rows = list(IDENTITIES.values()) + [modpk_record(*c) for c in MODPK_CASES]
    out = []
    for r in rows:
        entry = {"id": r.id, "citation": r.citation, "modulus": r.modulus}
        if n is not None:
            entry["order_verified"] = n if verify_record(r, n).passed else None
        out.append(entry)
    return out
