"""Shared test oracles and fixtures.

The oracles here are deliberately independent of the package internals:
digit-at-a-time long division (no chunking), and mpmath for the constants.
"""

import sys
import threading

import mpmath
import pytest

from huella.service import ServiceConfig, create_server

# the mpmath oracles render very long integers; lift the interpreter's
# int->str guard for the test process
sys.set_int_max_str_digits(2_000_000)


def fraction_digits_oracle(p: int, q: int, n: int) -> list[int]:
    """First n fractional digits of |p/q| by plain one-digit long division."""
    rem = abs(p) % q
    out = []
    for _ in range(n):
        if rem == 0:
            break
        rem *= 10
        out.append(rem // q)
        rem %= q
    return out


def const_digits_oracle(name: str, n: int) -> list[int]:
    """First n fractional digits of pi or e via mpmath, self-checked at two
    precisions."""

    def compute(extra: int) -> int:
        with mpmath.workdps(n + extra):
            value = mpmath.pi if name == "pi" else mpmath.e
            return int(mpmath.floor(value * mpmath.mpf(10) ** n))

    first, second = compute(30), compute(45)
    assert first == second, "mpmath oracle disagrees with itself"
    text = str(first)
    return [int(c) for c in text[1:]]  # drop the single integer digit (3 or 2)


@pytest.fixture(scope="session")
def service_factory():
    """Start a service with a given config; servers are torn down at session end."""
    servers = []

    def start(config: ServiceConfig = None):
        server = create_server(config or ServiceConfig())
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        servers.append((server, thread))
        host, port = server.server_address[:2]
        return f"http://{host}:{port}"

    yield start
    for server, thread in servers:
        server.shutdown()
        server.server_close()
        thread.join(timeout=5)


@pytest.fixture(scope="session")
def service_base(service_factory):
    return service_factory()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in report.nodeid and report.when == "call":
                rows.append((report.nodeid.split("::")[-1], outcome.upper()))
    if rows:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for name, outcome in sorted(rows):
            terminalreporter.write_line(f"  {outcome:<6} {name}")
