from hypothesis import settings

# fixed seed 0 for every randomized test
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repro")


def naive_v(m, x):
    """Independent reference valuation (repeated division)."""
    assert x > 0
    k = 0
    while x % m == 0:
        x //= m
        k += 1
    return k


ACCEPTANCE_RESULTS = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::" in report.nodeid:
        doc = report.nodeid.split("::")[-1]
        ACCEPTANCE_RESULTS.append((doc, report.outcome.upper(), report.duration))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, seconds in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{outcome:6} {name} ({seconds:.2f}s)")
