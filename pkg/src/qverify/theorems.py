"""Named checks for the (l, mu)-regular overpartition congruences.

Each :class:`TheoremCheck` is deterministic given its order. For claim rows
the order is the number of progression terms; for series rows it is the
number of coefficients compared; for the ``COR23`` rows it is the largest
coefficient index examined.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Union

from .congruence import (
    CongruenceClaim,
    check_claim,
    quadratic_nonresidues,
    source_series,
    triangular_residue_check,
    verify_vanishing_via_self_similarity,
)
from .errors import UnknownCheck
from .eta import double_square_series, euler_series, gen_ppo, square_series
from .expr import SeriesExpr, eta_quotient, eval_expr, f, phi, q
from .report import FAIL, PASS, XFAIL, XPASS, CheckReport, Witness
from .series import (
    TruncatedSeries,
    eq_up_to,
    extract_progression,
    substitute_power,
)

KINDS = ("claim", "internal-congruence", "exact-identity", "self-similarity")

PROFILES: Dict[str, float] = {"fast": 0.25, "default": 1.0, "deep": 2.0}


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    kind: str
    order: int
    run: Callable[[int], CheckReport] = field(repr=False, compare=False)
    citation: str = ""
    params: dict = field(default_factory=dict, compare=False)
    expected_fail: bool = False


def _claims(claims: Sequence[CongruenceClaim]) -> Callable[[int], CheckReport]:
    def run(n: int) -> CheckReport:
        for c in claims:
            rep = check_claim(c, n)
            if not rep.passed:
                return rep.with_meta(detail=c.describe())
        return CheckReport(status=PASS, order=n)

    return run


def _series_congruence(lhs: Callable[[int], TruncatedSeries],
                       rhs: Callable[[int], TruncatedSeries],
                       modulus: Optional[int]) -> Callable[[int], CheckReport]:
    def run(n: int) -> CheckReport:
        return eq_up_to(lhs(n), rhs(n), n, modulus)

    return run


def _progression(source: str, t: int, r: int) -> Callable[[int], TruncatedSeries]:
    return lambda n: extract_progression(source_series(source, t * n + r), t, r)


R23 = "R2_3"
R43 = "R4_3"
R49 = "R4_9"

G_EXPR = f(1, 8) * f(2, 8) - q() * f(2, 24) - f(1, 24)
F_EXPR = f(2, 28) + q() * f(1, 8) * f(2, 4) * f(4, 16) - f(1, 8) * f(2, 8) * f(4, 8)

# Closed forms the suite compares progressions against, by name.
EXPRESSIONS: Dict[str, SeriesExpr] = {
    "G": G_EXPR,
    "F": F_EXPR,
    "R23_3N_MOD3": phi() * f(3, 2) / f(6),
    "R49_4N_MOD3": f(2, 8) / f(1, 16) - q() * f(2, 24) / f(1, 24),
    "R49_3N": f(2, 4) * f(3, 8) / (f(1, 8) * f(6, 4))
    - 8 * q(2) * f(2, 2) * f(3, 2) * f(4) * f(6, 2) * f(24, 3) / (f(1, 6) * f(8) * f(12, 3)),
    "R49": eta_quotient({2: 1, 4: 2, 9: 2, 72: 1, 1: -2, 8: -1, 18: -1, 36: -2}),
    "R49_DISSECTED": (f(6, 4) * f(9, 6) / (f(3, 8) * f(18, 3)) + 2 * q() * f(6, 3) * f(9, 3) / f(3, 7)
                      + 4 * q(2) * f(6, 2) * f(18, 3) / f(3, 6))
    * (f(36, 2) / f(72) - 2 * q(4) * f(12) * f(72, 2) / (f(24) * f(36)))
    * f(9, 2) * f(72) / (f(18) * f(36, 2)),
    "R49_6N3_MOD16": 8 * f(1, 3) * f(3) * f(6, 5) / f(12, 2),
    "R49_24N20_MOD27": 9 * f(2, 28) / (f(1, 4) * f(4, 8)) + 9 * q() * f(1, 4) * f(2, 4) * f(4, 8)
    - 9 * f(1, 4) * f(2, 8),
}


def _named(name: str) -> Callable[[int], TruncatedSeries]:
    e = EXPRESSIONS[name]
    return lambda n: eval_expr(e, n)


def _internal_t23(n: int) -> CheckReport:
    gen = source_series(R23, 27 * n)
    return eq_up_to(extract_progression(gen, 27, 0), extract_progression(gen, 3, 0), n, 3)


def _cor23(beta: int) -> Callable[[int], CheckReport]:
    t, r = 3 ** (beta + 1), 2 * 3 ** beta
    claim = CongruenceClaim(R23, t, r, 6)

    def run(max_index: int) -> CheckReport:
        terms = max(1, (max_index - r) // t + 1)
        rep = check_claim(claim, terms)
        return rep.with_meta(order=max_index, detail=f"verified for beta = {beta}, {terms} terms")

    return run


def _t43_odd_square_residues(n: int) -> CheckReport:
    gen = source_series(R43, 2 * n)
    m = 1
    while m * m < n:
        res = gen.coeffs[2 * m * m] % 8
        if res != 4:
            return CheckReport(status=FAIL, order=n, witness=Witness(2 * m * m, 4, res))
        m += 2
    return CheckReport(status=PASS, order=n)


def _t43_structure(n: int) -> TruncatedSeries:
    return 1 + 4 * square_series(n, odd_only=True)


def _t49_n_mod4_structure(n: int) -> TruncatedSeries:
    return 1 + 2 * square_series(n, odd_only=True) + 2 * square_series(n, 9, odd_only=True)


def _t49_4n_mod8_structure(n: int) -> TruncatedSeries:
    # odd squares prime to 3: odd m^2 minus the odd (3k)^2
    return 1 + 4 * (square_series(n, odd_only=True) - square_series(n, 9, odd_only=True))


def _t49_4n_mod8_printed(n: int) -> TruncatedSeries:
    s = lambda scale, alt=False: square_series(n, scale, alternating=alt)
    return 1 + 6 * s(1) + 2 * s(9) + 2 * s(1, True) + 2 * s(9, True) + 4 * s(36)


def _r49_mod8_structure(n: int) -> TruncatedSeries:
    s = lambda scale, alt=False: square_series(n, scale, alternating=alt)
    d = lambda a, b: double_square_series(n, a, b)
    return (1 + 2 * s(1) + 4 * s(2) + 2 * s(36) + 4 * s(72) + 2 * s(4, True) + 2 * s(9, True)
            + 4 * d(2, 2) + 4 * d(72, 72) + 4 * d(1, 36) + 4 * d(9, 36) + 4 * d(1, 9)
            + 4 * d(4, 9) + 4 * d(1, 4) + 4 * d(4, 36))


def g_series(n: int) -> TruncatedSeries:
    """G(q) = f1^8 f2^8 - q f2^24 - f1^24."""
    return eval_expr(G_EXPR, n)


def f_series(n: int) -> TruncatedSeries:
    """F(q) = f2^28 + q f1^8 f2^4 f4^16 - f1^8 f2^8 f4^8."""
    return eval_expr(F_EXPR, n)


def _gq_vanish(n: int) -> CheckReport:
    return verify_vanishing_via_self_similarity(g_series(n), 1, 2, 3, n)


def _fq_vanish(n: int) -> CheckReport:
    fs = f_series(n)
    zero = eq_up_to(fs, TruncatedSeries.zero(n), n, 3)
    if not zero.passed:
        return zero.with_meta(detail="vanishing")
    g2 = substitute_power(g_series(-(-n // 2)), 2).truncate(n)
    image = -(euler_series(2, n) * g2)
    rep = eq_up_to(fs, image, n, 3)
    return rep if rep.passed else rep.with_meta(detail="F = -f2^4 G(q^2)")


def _ppo_exact(n: int) -> CheckReport:
    return eq_up_to(extract_progression(source_series(R43, 2 * n), 2, 0), gen_ppo(n), n)


def _triangular(n: int) -> CheckReport:
    return triangular_residue_check(n)


def _family_mod24(k: int) -> List[CongruenceClaim]:
    return [CongruenceClaim(R49, 4 * k, 4 * r, 24) for r in sorted(quadratic_nonresidues(k))]


def _conjecture_claims() -> List[CongruenceClaim]:
    out = []
    for l in range(2, 7):
        for k in range(1, l + 1):
            t, r = 4 * l, 4 * k
            # k = l is the progression 4l(n + 1)
            out.append(CongruenceClaim(R49, t, r % t, 6, n0=1 if r == t else 0))
    return out


def _build() -> List[TheoremCheck]:
    C = CongruenceClaim
    rows: List[TheoremCheck] = []

    def claim_row(id_, desc, claims, order, citation, expected_fail=False):
        claims = list(claims)
        rows.append(TheoremCheck(id_, desc, "claim", order, _claims(claims), citation,
                                 {"claims": [c.describe() for c in claims]}, expected_fail))

    rows.append(TheoremCheck(
        "T23_INTERNAL", "R(2,3)(27n) = R(2,3)(3n) (mod 3)", "internal-congruence", 200,
        _internal_t23, "R(2,3)(27n) = R(2,3)(3n) mod 3, all n >= 0"))
    for beta in range(1, 5):
        rows.append(TheoremCheck(
            f"COR23_MOD6_B{beta}", f"R(2,3)(3^{beta}(3n+2)) = 0 (mod 6), indices <= order",
            "claim", 10_000, _cor23(beta), "R(2,3)(3^b (3n+2)) = 0 mod 6, b >= 1",
            {"beta": beta}))
    rows.append(TheoremCheck(
        "R233N_INTERMEDIATE", "sum R(2,3)(3n) q^n = phi(q) f3^2/f6 (mod 3)", "internal-congruence",
        400, _series_congruence(_progression(R23, 3, 0), _named("R23_3N_MOD3"), 3),
        "3n-dissection of the R(2,3) generating function mod 3"))
    rows.append(TheoremCheck(
        "R2327N_INTERMEDIATE", "sum R(2,3)(27n) q^n = phi(q) f3^2/f6 (mod 3)", "internal-congruence",
        200, _series_congruence(_progression(R23, 27, 0), _named("R23_3N_MOD3"), 3),
        "27n-dissection of the R(2,3) generating function mod 3"))

    claim_row("T43_MOD4", "R(4,3)(2n) = 0 (mod 4), n >= 1", [C(R43, 2, 0, 4, n0=1)], 1000,
              "R(4,3)(2n) = 0 mod 4, n >= 1")
    claim_row("T43_MOD8", "R(4,3)(2n) = 0 (mod 8), n >= 1 not an odd square",
              [C(R43, 2, 0, 8, n0=1, exception="odd-square")], 1000,
              "R(4,3)(2n) = 0 mod 8 unless n is an odd square")
    rows.append(TheoremCheck(
        "T43_ODD_SQUARE_RES4", "R(4,3)(2n) = 4 (mod 8) at odd squares n", "claim", 1000,
        _t43_odd_square_residues, "sum R(4,3)(2n) q^n = 1 + 4 sum_{odd n} q^(n^2) mod 8"))
    rows.append(TheoremCheck(
        "T43_EXACT_PPO", "sum R(4,3)(2n) q^n = phi(q)/phi(-q) exactly", "exact-identity", 1000,
        _ppo_exact, "R(4,3)(2n) = ppo(n), all n >= 0"))
    rows.append(TheoremCheck(
        "T43_MOD8_STRUCTURE", "sum R(4,3)(2n) q^n = 1 + 4 sum_{odd n} q^(n^2) (mod 8)",
        "internal-congruence", 1000,
        _series_congruence(_progression(R43, 2, 0), _t43_structure, 8),
        "sum R(4,3)(2n) q^n = 1 + 4 sum_{odd n} q^(n^2) mod 8"))

    claim_row("T49_4N_MOD12", "R(4,9)(4n) = 0 (mod 12), n >= 1", [C(R49, 4, 0, 12, n0=1)], 1000,
              "R(4,9)(4n) = 0 mod 12, n >= 1")
    rows.append(TheoremCheck(
        "T49_4N_MOD3_INTERMEDIATE", "sum R(4,9)(4n) q^n = f2^8/f1^16 - q f2^24/f1^24 (mod 3)",
        "internal-congruence", 400,
        _series_congruence(_progression(R49, 4, 0), _named("R49_4N_MOD3"), 3),
        "4n-dissection of the R(4,9) generating function mod 3"))
    claim_row("T49_3N_MOD8", "R(4,9)(3n) = 0 (mod 8), n >= 1 (R(4,9)(0) = 1 is excluded)",
              [C(R49, 3, 0, 8, n0=1)], 1000, "R(4,9)(3n) = 0 mod 8, n >= 1")
    rows.append(TheoremCheck(
        "T49_3N_EXACT", "sum R(4,9)(3n) q^n as an exact two-term eta-quotient identity",
        "exact-identity", 400,
        _series_congruence(_progression(R49, 3, 0), _named("R49_3N"), None),
        "exact 3n-dissection of the R(4,9) generating function"))
    rows.append(TheoremCheck(
        "T49_49N_EXACT", "R(4,9) generating function as a product of three dissected factors",
        "exact-identity", 400,
        _series_congruence(_named("R49"), _named("R49_DISSECTED"), None),
        "R(4,9) generating function after the 3-dissections of f2/f1^2 and f4^2/f8"))
    for k in (3, 4, 5, 6, 8, 12):
        claim_row(f"T49_FAMILY_MOD24_K{k}",
                  f"R(4,9)(4({k}n+r)) = 0 (mod 24) for every quadratic nonresidue r mod {k}",
                  _family_mod24(k), 250,
                  "R(4,9)(4(kn+r)) = 0 mod 24, r a quadratic nonresidue mod k")
    claim_row("T49_N_MOD4", "R(4,9)(n) = 0 (mod 4), n >= 1 not an odd square",
              [C(R49, 1, 0, 4, n0=1, exception="odd-square")], 2000,
              "R(4,9)(n) = 0 mod 4 unless n is an odd square")
    rows.append(TheoremCheck(
        "T49_N_MOD4_STRUCTURE", "sum R(4,9)(n) q^n = 1 + 2 sum_odd q^(n^2) + 2 sum_odd q^(9n^2) (mod 4)",
        "internal-congruence", 2000,
        _series_congruence(_progression(R49, 1, 0), _t49_n_mod4_structure, 4),
        "R(4,9) generating function mod 4 as odd-square theta sums"))
    rows.append(TheoremCheck(
        "T49_4N_MOD8_STRUCTURE",
        "sum R(4,9)(4n) q^n = 1 + 4 sum q^(m^2) over odd m prime to 3 (mod 8)",
        "internal-congruence", 1000,
        _series_congruence(_progression(R49, 4, 0), _t49_4n_mod8_structure, 8),
        "sum R(4,9)(4n) q^n mod 8: only square exponents appear"))
    rows.append(TheoremCheck(
        "MOD8_49_STRUCTURE", "sum R(4,9)(n) q^n mod 8 equals the fifteen-term square-sum expansion",
        "internal-congruence", 2000,
        _series_congruence(_progression(R49, 1, 0), _r49_mod8_structure, 8),
        "R(4,9) generating function mod 8 via theta products"))
    claim_row("CONJ_AMS", "R(4,9)(4ln + 4k) = 0 (mod 6) for 2 <= l <= 6, 1 <= k <= l",
              _conjecture_claims(), 250, "R(4,9)(4ln + 4k) = 0 mod 6")

    claim_row("T49_18N12_MOD96", "R(4,9)(18n+12) = 0 (mod 96)", [C(R49, 18, 12, 96)], 300,
              "R(4,9)(18n+12) = 0 mod 96")
    claim_row("T49_18N15_MOD48", "R(4,9)(18n+15) = 0 (mod 48)", [C(R49, 18, 15, 48)], 300,
              "R(4,9)(18n+15) = 0 mod 48")
    claim_row("T49_24N20_MOD216", "R(4,9)(24n+20) = 0 (mod 216)", [C(R49, 24, 20, 216)], 300,
              "R(4,9)(24n+20) = 0 mod 216")
    claim_row("T49_36N12_MOD32", "R(4,9)(36n+12) = 0 (mod 32)", [C(R49, 36, 12, 32)], 150,
              "sum R(4,9)(36n+12) q^n = 0 mod 32")
    claim_row("T49_36N30_MOD32", "R(4,9)(36n+30) = 0 (mod 32)", [C(R49, 36, 30, 32)], 150,
              "sum R(4,9)(36n+30) q^n = 0 mod 32")
    rows.append(TheoremCheck(
        "T49_6N3_MOD16_INTERMEDIATE", "sum R(4,9)(6n+3) q^n = 8 f1^3 f3 f6^5/f12^2 (mod 16)",
        "internal-congruence", 400,
        _series_congruence(_progression(R49, 6, 3), _named("R49_6N3_MOD16"), 16),
        "6n+3 dissection of the R(4,9) generating function mod 16"))
    rows.append(TheoremCheck(
        "T49_24N20_MOD27_INTERMEDIATE",
        "sum R(4,9)(24n+20) q^n = 9 f2^28/(f1^4 f4^8) + 9q f1^4 f2^4 f4^8 - 9 f1^4 f2^8 (mod 27)",
        "internal-congruence", 300,
        _series_congruence(_progression(R49, 24, 20), _named("R49_24N20_MOD27"), 27),
        "24n+20 dissection of the R(4,9) generating function mod 27"))
    rows.append(TheoremCheck(
        "TRIANGULAR_3N2", "m(m+1)/2 is never 2 (mod 3)", "claim", 1000, _triangular,
        "17 is a quadratic nonresidue mod 24, so m(m+1)/2 != 3n+2"))
    rows.append(TheoremCheck(
        "GQ_VANISH", "G = f1^8 f2^8 - q f2^24 - f1^24: G = q G(q^2) and G = 0 (mod 3)",
        "self-similarity", 600, _gq_vanish, "G(q) = q G(q^2) mod 3 forces G = 0 mod 3"))
    rows.append(TheoremCheck(
        "FQ_VANISH", "F = f2^28 + q f1^8 f2^4 f4^16 - f1^8 f2^8 f4^8: F = 0 and F = -f2^4 G(q^2) (mod 3)",
        "self-similarity", 600, _fq_vanish, "F(q) = -f2^4 G(q^2) mod 3"))
    claim_row("TLU_EVEN", "R(l,mu)(n) = 0 (mod 2), n >= 1, for six (l, mu) pairs",
              [C(f"R{l}_{m}", 1, 0, 2, n0=1) for l, m in ((2, 3), (2, 5), (3, 5), (4, 3), (4, 9), (8, 3))],
              1000, "R(l,mu)(n) = 0 mod 2, n >= 1")

    k = 4
    claim_row("PPO_2ADIC_K4_32N", "ppo(32n) = 0 (mod 2^14), 1 <= n <= 30",
              [C("ppo", 2 ** (k + 1), 0, 2 ** (3 * k + 2), n0=1)], 31,
              "ppo(2^(k+1) n) = 0 mod 2^(3k+2), n >= 1, k = 4")
    claim_row("PPO_2ADIC_K4_16_4N3", "ppo(16(4n+3)) = 0 (mod 2^13)",
              [C("ppo", 4 * 2 ** k, 3 * 2 ** k, 2 ** (3 * k + 1))], 20,
              "ppo(2^k (4n+3)) = 0 mod 2^(3k+1), k = 4")
    claim_row("PPO_2ADIC_K4_16_8N5", "ppo(16(8n+5)) = 0 (mod 2^12)",
              [C("ppo", 8 * 2 ** k, 5 * 2 ** k, 2 ** (3 * k))], 20,
              "ppo(2^k (8n+5)) = 0 mod 2^(3k), k = 4")
    claim_row("R43_2ADIC_K4_64N", "R(4,3)(64n) = 0 (mod 2^14), 1 <= n <= 30",
              [C(R43, 2 ** (k + 2), 0, 2 ** (3 * k + 2), n0=1)], 31,
              "R(4,3)(2^(k+2) n) = 0 mod 2^(3k+2), n >= 1, k = 4")
    claim_row("R43_2ADIC_K4_32_4N3", "R(4,3)(32(4n+3)) = 0 (mod 2^13)",
              [C(R43, 4 * 2 ** (k + 1), 3 * 2 ** (k + 1), 2 ** (3 * k + 1))], 20,
              "R(4,3)(2^(k+1) (4n+3)) = 0 mod 2^(3k+1), k = 4")
    claim_row("R43_2ADIC_K4_32_8N5", "R(4,3)(32(8n+5)) = 0 (mod 2^12)",
              [C(R43, 8 * 2 ** (k + 1), 5 * 2 ** (k + 1), 2 ** (3 * k))], 20,
              "R(4,3)(2^(k+1) (8n+5)) = 0 mod 2^(3k), k = 4")

    # Negative controls: each strengthens a true statement and must fail early.
    claim_row("XFAIL_T43_MOD8_NO_EXCEPTION", "R(4,3)(2n) = 0 (mod 8) without the odd-square exception",
              [C(R43, 2, 0, 8, n0=1)], 1000, "negative control", expected_fail=True)
    claim_row("XFAIL_T43_MOD16", "R(4,3)(2n) = 0 (mod 16), n not an odd square",
              [C(R43, 2, 0, 16, n0=1, exception="odd-square")], 1000, "negative control",
              expected_fail=True)
    claim_row("XFAIL_T49_4N_MOD24", "R(4,9)(4n) = 0 (mod 24), n >= 1",
              [C(R49, 4, 0, 24, n0=1)], 1000, "negative control", expected_fail=True)
    claim_row("XFAIL_T49_3N_MOD16", "R(4,9)(3n) = 0 (mod 16), n >= 1",
              [C(R49, 3, 0, 16, n0=1)], 1000, "negative control", expected_fail=True)
    claim_row("XFAIL_T49_N_MOD8", "R(4,9)(n) = 0 (mod 8), n >= 1 not an odd square",
              [C(R49, 1, 0, 8, n0=1, exception="odd-square")], 2000, "negative control",
              expected_fail=True)
    rows.append(TheoremCheck(
        "XFAIL_T49_4N_MOD8_SQUARE_SUMS",
        "sum R(4,9)(4n) q^n = 1 + 6S(1) + 2S(9) + 2S-(1) + 2S-(9) + 4S(36) (mod 8)",
        "internal-congruence", 1000,
        _series_congruence(_progression(R49, 4, 0), _t49_4n_mod8_printed, 8),
        "negative control: breaks at 9 times an odd square", expected_fail=True))
    return rows


CHECKS: Dict[str, TheoremCheck] = {c.id: c for c in _build()}


def get_check(check_id: str) -> TheoremCheck:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None


def profile_order(check: TheoremCheck, profile: Union[str, float] = "default") -> int:
    scale = PROFILES[profile] if isinstance(profile, str) else float(profile)
    return max(1, round(check.order * scale))


def run_check(check_id: str, order: Optional[int] = None) -> CheckReport:
    check = get_check(check_id)
    n = check.order if order is None else order
    start = time.perf_counter()
    rep = check.run(n)
    millis = (time.perf_counter() - start) * 1000
    status = rep.status
    if check.expected_fail:
        status = XFAIL if status == FAIL else XPASS
    return rep.with_meta(id=check.id, citation=check.citation, status=status, order=rep.order,
                         millis=millis)


def run_all(profile: Union[str, float] = "default", order: Optional[int] = None,
            ids: Optional[Sequence[str]] = None, jobs: int = 1) -> List[CheckReport]:
    """Run every registered check (or ``ids``); reports come back sorted by id.

    ``order`` overrides every row's order; otherwise the profile scales the
    row defaults.
    """
    selected = [get_check(i) for i in ids] if ids is not None else list(CHECKS.values())
    tasks = [(c.id, order if order is not None else profile_order(c, profile)) for c in selected]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda a: run_check(*a), tasks))
    else:
        reports = [run_check(*a) for a in tasks]
    return sorted(reports, key=lambda r: r.id)


def all_ok(reports: Sequence[CheckReport]) -> bool:
    return all(r.ok for r in reports)
