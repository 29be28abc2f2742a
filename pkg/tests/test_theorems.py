import pytest

from qverify.errors import UnknownCheck
from qverify.eta import clear_caches
from qverify.expr import eval_expr
from qverify.report import FAIL, PASS, XFAIL, XPASS, CheckReport
from qverify.theorems import (
    CHECKS,
    EXPRESSIONS,
    PROFILES,
    TheoremCheck,
    all_ok,
    get_check,
    profile_order,
    run_all,
    run_check,
)

REQUIRED = [
    "T23_INTERNAL", "COR23_MOD6_B1", "COR23_MOD6_B2", "COR23_MOD6_B3", "COR23_MOD6_B4",
    "R233N_INTERMEDIATE", "R2327N_INTERMEDIATE", "T43_MOD4", "T43_MOD8", "T43_EXACT_PPO",
    "T43_MOD8_STRUCTURE", "T49_4N_MOD12", "T49_3N_MOD8", "T49_3N_EXACT", "T49_49N_EXACT",
    "T49_N_MOD4", "CONJ_AMS", "T49_18N12_MOD96", "T49_18N15_MOD48", "T49_24N20_MOD216",
    "T49_36N12_MOD32", "T49_36N30_MOD32", "T49_6N3_MOD16_INTERMEDIATE", "GQ_VANISH",
    "FQ_VANISH", "TLU_EVEN", "PPO_2ADIC_K4_32N", "MOD8_49_STRUCTURE",
] + [f"T49_FAMILY_MOD24_K{k}" for k in (3, 4, 5, 6, 8, 12)]


def test_registry_size_and_rows():
    assert len(CHECKS) >= 28
    assert set(REQUIRED) <= set(CHECKS)
    assert sum(c.expected_fail for c in CHECKS.values()) >= 3


def test_spec_examples():
    assert run_check("T23_INTERNAL", 200).status == PASS
    assert run_check("T43_MOD4", 500).status == PASS
    assert run_check("T49_24N20_MOD216", 150).status == PASS


def test_family_includes_k4_r2():
    claims = get_check("T49_FAMILY_MOD24_K4").params["claims"]
    assert any(c.startswith("R4_9(16n+8)") for c in claims)


def test_default_profile_all_ok():
    reports = run_all()
    assert [r.id for r in reports] == sorted(CHECKS)
    bad = [r.to_text() for r in reports if not r.ok]
    assert not bad
    assert all_ok(reports)


@pytest.mark.parametrize("profile", ["fast", 0.5])
def test_smaller_profiles_all_ok(profile):
    assert all_ok(run_all(profile))


def test_fixed_small_order_all_ok():
    assert all_ok(run_all(order=32))


@pytest.mark.slow
def test_deep_profile_all_ok():
    assert all_ok(run_all("deep"))


def test_monotone_in_order():
    for cid, check in CHECKS.items():
        if check.expected_fail:
            continue
        for n in (max(1, check.order // 4), check.order // 2):
            assert run_check(cid, n).status == PASS, (cid, n)


def test_negative_controls_fail_early():
    for cid, check in CHECKS.items():
        if check.expected_fail:
            rep = run_check(cid)
            assert rep.status == XFAIL, cid
            assert rep.witness.index <= 10, cid
            assert rep.ok and not rep.passed


def test_expected_fail_mapping():
    ok = TheoremCheck("X", "", "claim", 5, lambda n: CheckReport(status=PASS, order=n), expected_fail=True)
    from qverify import theorems
    theorems.CHECKS["X_TMP"] = ok
    try:
        rep = run_check("X_TMP")
        assert rep.status == XPASS and not rep.ok
    finally:
        del theorems.CHECKS["X_TMP"]


def test_failing_row_reports_fail():
    from qverify import theorems
    from qverify.report import Witness
    theorems.CHECKS["Y_TMP"] = TheoremCheck(
        "Y_TMP", "", "claim", 5, lambda n: CheckReport(status=FAIL, order=n, witness=Witness(1, 0, 1)))
    try:
        reports = run_all(ids=["Y_TMP", "T43_MOD4"])
        assert [r.id for r in reports] == ["T43_MOD4", "Y_TMP"]
        assert not all_ok(reports)
    finally:
        del theorems.CHECKS["Y_TMP"]


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_check("NOPE")


def test_profiles():
    c = get_check("T43_MOD4")
    assert profile_order(c, "fast") == round(c.order * PROFILES["fast"])
    assert profile_order(c, "deep") == 2 * c.order
    assert profile_order(c, 0.0001) == 1


def test_parallel_matches_serial():
    serial = run_all("fast")
    parallel = run_all("fast", jobs=4)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]


def test_cor23_reports_beta_bound():
    rep = run_check("COR23_MOD6_B4")
    assert rep.order == 10_000 and "beta = 4" in rep.detail


@pytest.mark.parametrize("name", sorted(EXPRESSIONS))
def test_precision_soundness(name):
    e = EXPRESSIONS[name]
    clear_caches()
    low = eval_expr(e, 128)
    clear_caches()
    high = eval_expr(e, 256)
    assert low == high.truncate(128)


def test_suite_rows_stable_across_cache_state():
    warm = run_all(order=128)
    clear_caches()
    cold = run_all(order=128)
    assert [r.to_json() for r in warm] == [r.to_json() for r in cold]
