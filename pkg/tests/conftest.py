import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("qverify", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qverify")


def naive_mul(a, b, n):
    """Schoolbook truncated product; the reference for every fast multiply."""
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def literal_euler(k, n):
    """prod_{i>=1} (1 - q^{ki}) by repeated binomial multiplication."""
    c = [0] * n
    c[0] = 1
    i = 1
    while k * i < n:
        step = k * i
        for j in range(n - 1, step - 1, -1):
            c[j] -= c[j - step]
        i += 1
    return c


@pytest.fixture
def oracle_mul():
    return naive_mul


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
