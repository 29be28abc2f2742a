from math import isqrt

import pytest
from hypothesis import given, strategies as st

from qverify.congruence import (
    CongruenceClaim,
    check_claim,
    is_odd_square,
    is_square,
    quadratic_nonresidues,
    source_series,
    triangular_residue_check,
    verify_vanishing_via_self_similarity,
)
from qverify.errors import InsufficientPrecision
from qverify.series import TruncatedSeries, reduce_mod
from qverify.theorems import g_series


def direct_scan(claim, n_terms):
    """Reference: reduce first, then walk the progression."""
    red = reduce_mod(source_series(claim.source, claim.required_precision(n_terms)), claim.m)
    skip = {"none": lambda n: False, "odd-square": is_odd_square, "square": is_square}[claim.exception]
    for n in range(claim.n0, n_terms):
        if not skip(n) and red.coeff(claim.t * n + claim.r):
            return claim.t * n + claim.r
    return None


def test_examples():
    assert check_claim(CongruenceClaim("R2_3", 9, 6, 6), 200).passed
    assert check_claim(CongruenceClaim("R2_3", 3, 1, 1), 50).passed
    rep = check_claim(CongruenceClaim("R4_3", 2, 0, 8, n0=1), 200)
    assert not rep.passed
    assert rep.witness.index == 2 and rep.witness.actual == 4


@given(st.sampled_from(["R2_3", "R4_3", "R4_9", "ppo", "pbar"]), st.integers(1, 12), st.data(),
       st.sampled_from([2, 3, 4, 6, 8, 12, 16, 24]), st.integers(0, 3),
       st.sampled_from(["none", "odd-square", "square"]))
def test_check_claim_matches_direct_scan(source, t, data, m, n0, exception):
    r = data.draw(st.integers(0, t - 1))
    claim = CongruenceClaim(source, t, r, m, n0, exception)
    n_terms = 200 // t
    rep = check_claim(claim, n_terms)
    want = direct_scan(claim, n_terms)
    assert (rep.witness.index if rep.witness else None) == want


def test_claim_validation():
    with pytest.raises(ValueError):
        CongruenceClaim("R4_9", 3, 3, 8)
    with pytest.raises(ValueError):
        CongruenceClaim("R4_9", 3, 0, 0)
    with pytest.raises(ValueError):
        CongruenceClaim("R4_9", 3, 0, 8, exception="prime")
    with pytest.raises(InsufficientPrecision):
        check_claim(CongruenceClaim("R4_9", 3, 0, 8), 10, series=TruncatedSeries([1], 5))
    with pytest.raises(KeyError):
        source_series("R4", 5)


@given(st.integers(0, 10 ** 6))
def test_is_odd_square(n):
    assert is_odd_square(n) == (n % 2 == 1 and isqrt(n) ** 2 == n)


@given(st.integers(2, 200))
def test_nonresidues_partition(k):
    squares = {m * m % k for m in range(k)}
    qnr = quadratic_nonresidues(k)
    assert not qnr & squares
    assert qnr | squares == set(range(k))


def test_nonresidue_examples():
    assert quadratic_nonresidues(4) == {2, 3}
    assert quadratic_nonresidues(2) == set()
    assert 2 in quadratic_nonresidues(3)


def test_self_similarity_examples():
    assert verify_vanishing_via_self_similarity(g_series(600), 1, 2, 3, 600).passed
    assert verify_vanishing_via_self_similarity(TruncatedSeries.zero(50), 3, 5, 7, 50).passed
    rep = verify_vanishing_via_self_similarity(TruncatedSeries.one(50), 1, 2, 3, 50)
    assert not rep.passed and rep.witness.index == 0 and rep.detail == "self-similarity"


def test_self_similarity_failure_position():
    # G = q: the image q G(q^2) is q^3, so the first mismatch is at q^1
    rep = verify_vanishing_via_self_similarity(TruncatedSeries([0, 1], 10), 1, 2, 3, 10)
    assert not rep.passed and rep.witness.index == 1
    with pytest.raises(ValueError):
        verify_vanishing_via_self_similarity(TruncatedSeries.zero(10), 0, 2, 3, 10)


def test_triangular():
    assert triangular_residue_check(1000).passed
