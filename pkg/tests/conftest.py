import re

import numpy as np
import pytest

from kernelframe import _accel


@pytest.fixture(scope="session", autouse=True)
def warm_backend():
    # Compile-on-first-use must not land inside a timed test body.
    _accel.warmup()


@pytest.fixture
def rng():
    return np.random.default_rng(20250822)


CRITERION_LABELS = {
    1: "three-vector tight frame",
    2: "monomial kernel coefficients",
    3: "shift-orbit Parseval sum",
    4: "kernel frame at the zeros",
    5: "boundary orthonormal bases",
    6: "Hilbert matrix spectrum",
    7: "Brownian bridge series",
    8: "pseudoinverse and factorization",
    9: "span kernel",
    10: "symbol compressions",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if hasattr(report, "wasxfail"):
        # A criterion kept faithful to a target it cannot meet; the suite
        # records the honest failure instead of loosening the assertion.
        status = "FAIL (known, asserted as expected failure)"
        if report.outcome == "passed":
            status = "UNEXPECTED PASS (revisit the expected failure)"
    elif report.passed:
        status = "PASS"
    else:
        status = "FAIL"
    _outcomes[num] = status


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_outcomes):
        label = CRITERION_LABELS.get(num, "")
        terminalreporter.write_line(
            "criterion %2d  %-32s %s" % (num, label, _outcomes[num])
        )
