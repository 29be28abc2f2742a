import pytest

from qverify.errors import UnknownIdentity
from qverify.eta import euler_series, theta_phi, theta_phi_neg
from qverify.expr import (
    EtaQ,
    IntScalar,
    Product,
    Progression,
    QPower,
    Subst,
    Sum,
    eval_expr,
    f,
    phi,
    phi_neg,
    q,
)
from qverify.identities import (
    IDENTITIES,
    IdentityRecord,
    catalog,
    modpk_record,
    verify_all,
    verify_identity,
    verify_modpk_family,
    verify_record,
)
from qverify.series import TruncatedSeries, extract_progression, shift

EXPECTED_IDS = {
    "PHI_ETA", "PHINEG_ETA", "PHI_RATIO", "INV_PHINEG_PRODUCT", "F1_CUBE_TRIANGULAR",
    "INV_F1_4_2DISSECT", "F9_OVER_F1_2DISSECT", "F33_OVER_F1_2DISSECT", "F3_OVER_F13_2DISSECT",
    "F32_OVER_F12_2DISSECT", "F1_OVER_F33_2DISSECT", "F3_OVER_F1_2DISSECT", "F1F3_2DISSECT",
    "NEGQ_EULER", "F1F2_3DISSECT", "F2_OVER_F12_3DISSECT", "F1_OVER_F4_3DISSECT",
    "INV_F1F2_3DISSECT", "F12_OVER_F2_3DISSECT", "PHI4_MOD8",
}


def test_eval_basics():
    n = 40
    assert eval_expr(QPower(2) * f(1), n) == shift(euler_series(1, n - 2), 2)
    assert eval_expr(Sum(()), n) == TruncatedSeries.zero(n)
    assert eval_expr(Product(()), n) == TruncatedSeries.one(n)
    assert eval_expr(IntScalar(3) - 3, n).is_zero()
    assert eval_expr(Subst(f(1), 3), n) == euler_series(3, n)
    assert eval_expr(Progression(phi(), 3, 2), 30).is_zero()
    assert eval_expr(phi(2) * phi_neg(), n).prec == n


def test_eta_merging():
    e = f(1, 2) * f(2) / f(1, 2)
    assert isinstance(e, EtaQ)
    assert e == f(2)
    assert f(3) ** 2 == f(3, 2)


def test_doc_identity():
    lhs = f(3, 3) / f(1)
    rhs = f(4, 3) * f(6, 2) / (f(2, 2) * f(12)) + q() * f(12, 3) / f(4)
    assert eval_expr(lhs, 50) == eval_expr(rhs, 50)


def test_shifted_product_is_truncated_correctly():
    # q^5 * (1/f1) evaluated only as far as needed
    n = 60
    direct = shift(eval_expr(f(1, -1), n), 5).truncate(n)
    assert eval_expr(q(5) / f(1), n) == direct
    assert eval_expr(q(70) * f(1), n).is_zero()


def test_registry_complete():
    assert set(IDENTITIES) == EXPECTED_IDS
    assert len(IDENTITIES) == 20


def test_every_row_passes_at_400():
    reports = verify_all(400)
    assert len(reports) == 24
    assert all(r.passed for r in reports), [r.to_text() for r in reports if not r.passed]


@pytest.mark.parametrize("rid", ["F1F3_2DISSECT", "NEGQ_EULER"])
def test_named_examples(rid):
    assert verify_identity(rid, 400).passed


@pytest.mark.parametrize("case,n", [((3, 1, 1), 300), ((2, 3, 1), 200), ((2, 1, 3), 200)])
def test_modpk_examples(case, n):
    assert verify_modpk_family(*case, n).passed


def test_modpk_rejects_non_prime():
    with pytest.raises(ValueError):
        modpk_record(4, 1, 1)


def test_modpk_is_not_exact():
    rec = modpk_record(3, 1, 1)
    exact = IdentityRecord("X", rec.lhs, rec.rhs)
    assert not verify_record(exact, 50).passed


def test_perturbed_row_fails_at_one():
    rec = IDENTITIES["F1F3_2DISSECT"]
    bad = IdentityRecord("BAD", rec.lhs, rec.rhs + q())
    rep = verify_record(bad, 400)
    assert not rep.passed and rep.witness.index == 1


def test_theta_rows_match_square_sums():
    n = 300
    assert eval_expr(phi(), n) == theta_phi(n)
    assert eval_expr(f(2, 5) / (f(1, 2) * f(4, 2)), n) == theta_phi(n)
    assert eval_expr(f(1, 2) / f(2), n) == theta_phi_neg(n)


def test_dissection_pieces_separately():
    # each side of a 2-dissection: even part of f3^3/f1 is the q^0 component
    n = 200
    lhs = eval_expr(f(3, 3) / f(1), 2 * n)
    even = eval_expr(f(2, 3) * f(3, 2) / (f(1, 2) * f(6)), n)
    odd = eval_expr(f(6, 3) / f(2), n)
    assert extract_progression(lhs, 2, 0) == even
    assert extract_progression(lhs, 2, 1) == odd


def test_order_doubling_never_breaks_a_pass():
    for rid in IDENTITIES:
        assert verify_identity(rid, 100).passed and verify_identity(rid, 200).passed


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify_identity("NOPE")


def test_catalog():
    rows = catalog()
    assert len(rows) == 24
    assert {"id", "citation", "modulus"} <= set(rows[0])
    verified = catalog(60)
    assert all(r["order_verified"] == 60 for r in verified)


def test_alias_lookup():
    rep = verify_identity("F3_OVER_F13_3DISSECT", 100)
    assert rep.passed and rep.id == "F3_OVER_F13_2DISSECT"
