import pytest
from hypothesis import given, strategies as st

from conftest import literal_euler, naive_mul
from qverify.errors import InsufficientPrecision, NotAUnit
from qverify.eta import euler_series, theta_phi, triangular_cube
from qverify.series import (
    TruncatedSeries,
    add,
    eq_up_to,
    extract_progression,
    invert,
    kronecker_mul,
    mul,
    power,
    reduce_mod,
    shift,
    substitute_power,
)

S = TruncatedSeries
ORDER = 64


def coeff_lists(n=ORDER, lo=-50, hi=50):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n)


series64 = coeff_lists().map(lambda c: S(c))
units64 = st.tuples(st.sampled_from([1, -1]), coeff_lists(ORDER - 1)).map(lambda t: S([t[0], *t[1]]))


def test_add_examples():
    assert S([1, 1], 4) + S([1, -1], 4) == S([2], 4)
    a = S([3, 1, 4, 1, 5])
    assert add(a, S.zero(5)) == a
    f1 = euler_series(1, 30)
    assert (f1 + -f1).is_zero()


def test_mul_examples():
    assert mul(S([1, 1], 5), S([1, -1], 5)) == S([1, 0, -1], 5)
    a = S([3, 1, 4, 1, 5])
    assert mul(a, S.one(5)) == a
    f1 = euler_series(1, 200)
    assert f1 * f1 * f1 == triangular_cube(200)


def test_invert_examples():
    assert invert(S([1, -1], 6)) == S([1] * 6)
    assert invert(S.one(7)) == S.one(7)
    f1 = euler_series(1, 500)
    assert mul(f1, invert(f1)) == S.one(500)


def test_invert_rejects_non_unit():
    with pytest.raises(NotAUnit):
        invert(S([2, 1], 4))
    with pytest.raises(NotAUnit):
        invert(S([0, 1], 4))


def test_power_examples():
    assert power(S([1, 1], 5), 2) == S([1, 2, 1], 5)
    a = S([1, 7, -2, 9])
    assert power(a, 1) == a
    assert power(euler_series(2, 50), 24).coeff(0) == 1
    assert power(a, 0) == S.one(4)
    assert power(a, -2) == invert(mul(a, a))


def test_substitute_shift_examples():
    assert substitute_power(S([1, 1], 2), 3) == S([1, 0, 0, 1, 0, 0])
    a = S([5, 6, 7])
    assert substitute_power(a, 1) is a
    assert substitute_power(euler_series(1, 200), 2) == euler_series(2, 400)
    assert shift(S.one(3), 1) == S([0, 1, 0, 0])
    assert shift(a, 0) is a
    b = shift(a, 3)
    assert all(b.coeff(n + 3) == a.coeff(n) for n in range(a.prec))
    with pytest.raises(ValueError):
        substitute_power(a, 0)
    with pytest.raises(ValueError):
        shift(a, -1)


def test_extract_progression_examples():
    assert extract_progression(S([1, 2, 3, 4]), 2, 1) == S([2, 4])
    a = S([9, 8, 7])
    assert extract_progression(a, 1, 0) == a
    assert extract_progression(theta_phi(300), 3, 2).is_zero()
    with pytest.raises(ValueError):
        extract_progression(a, 2, 2)
    with pytest.raises(InsufficientPrecision):
        extract_progression(a, 5, 4)


def test_reduce_mod_examples():
    assert reduce_mod(S([1, -1]), 3) == S([1, 2])
    assert reduce_mod(power(theta_phi(300), 4), 8) == S.one(300)
    with pytest.raises(ValueError):
        reduce_mod(S([1]), 1)


def test_eq_up_to_examples():
    assert eq_up_to(S([1, 1], 3), S([1, 1, 0, 0, 0, 1]), 3).passed
    assert eq_up_to(S([1], 2), S([1, 3]), 2, 3).passed
    rep = eq_up_to(S([1], 2), S([1, 1]), 2)
    assert not rep.passed
    assert (rep.witness.index, rep.witness.expected, rep.witness.actual) == (1, 0, 1)
    with pytest.raises(InsufficientPrecision):
        eq_up_to(S([1], 2), S([1], 5), 3)


def test_precision_is_tracked():
    a, b = S([1, 2, 3], 10), S([1, 1], 4)
    assert (a + b).prec == 4
    assert mul(a, b).prec == 4
    with pytest.raises(InsufficientPrecision):
        b.coeff(4)
    with pytest.raises(InsufficientPrecision):
        b.truncate(5)
    assert S([1, 2, 3, 4, 5], 3).coeffs == (1, 2, 3)


@given(series64, series64, series64)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@given(series64, series64)
def test_mul_matches_schoolbook(a, b):
    assert list(mul(a, b).coeffs) == naive_mul(a.coeffs, b.coeffs, ORDER)


@given(st.integers(1, 300), st.integers(0, 2 ** 70), st.data())
def test_kronecker_handles_large_and_signed(n, bound, data):
    a = data.draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n))
    b = data.draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n))
    assert kronecker_mul(a, b, n) == naive_mul(a, b, n)


@given(units64)
def test_invert_round_trip(a):
    assert mul(a, invert(a)) == S.one(ORDER)


@pytest.mark.parametrize("n", [41, 300, 1500])
def test_invert_newton_path(n):
    # dense units push invert onto the Newton branch
    a = S([1] + [(7 * i * i + 3) % 11 - 5 for i in range(1, n)])
    assert mul(a, invert(a)) == S.one(n)


@given(series64, st.sampled_from([2, 3, 4, 9]))
def test_dissection_reassembly(a, t):
    parts = [extract_progression(a, t, r) for r in range(t)]
    total = S.zero(ORDER)
    for r, p in enumerate(parts):
        total = total + shift(substitute_power(p, t), r).truncate(ORDER)
    assert total == a


@given(series64, st.integers(2, 50))
def test_reduce_mod_idempotent(a, m):
    r = reduce_mod(a, m)
    assert reduce_mod(r, m) == r
    assert all(0 <= c < m for c in r)


def test_euler_matches_literal_product_via_mul():
    assert list(euler_series(3, 300)) == literal_euler(3, 300)
