from fractions import Fraction

import pytest

from sobolev2d.product_basis import ProductWeight

F = Fraction

PARAMETER_SETS = {
    "laguerre(0,0)": lambda: ProductWeight.laguerre(0, 0),
    "laguerre(1/2,3/2)": lambda: ProductWeight.laguerre(F(1, 2), F(3, 2)),
    "gegenbauer(1,1)": lambda: ProductWeight.gegenbauer(1, 1),
    "gegenbauer(3/2,1/2)": lambda: ProductWeight.gegenbauer(F(3, 2), F(1, 2)),
}


@pytest.fixture(params=sorted(PARAMETER_SETS))
def pw(request):
    return PARAMETER_SETS[request.param]()


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"{status}  {name}  ({report.duration:.2f} s)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
