import pytest

from pellcubic import _backend, modmath, oracle, paramsearch, pellcore, primality
from pellcubic.oracle import sieve_upto

BACKENDS = _backend.available()
_USERS = (modmath, pellcore, paramsearch, primality, oracle)


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the typed API on top of each available kernel backend."""
    k = _backend.load(request.param)
    monkeypatch.setattr(_backend, "kernels", k)
    for mod in _USERS:
        monkeypatch.setattr(mod, "kernels", k)
    return k


@pytest.fixture(scope="session")
def primes_below_10k():
    return [p for p in sieve_upto(10_000) if p > 3]


@pytest.fixture(scope="session")
def primes_below_20k():
    return [p for p in sieve_upto(20_000) if p > 3]


def pytest_report_header(config):
    return f"pellcubic backends: {', '.join(BACKENDS)} (active: {_backend.kernels.NAME})"



def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
