import pytest

from eddycyl import CylinderGeometry, PhysicalParams

ACCEPTANCE = []


@pytest.fixture
def table1():
    return PhysicalParams(mu_r=4000.0, sigma=2e6, frequency=10.0), CylinderGeometry(r1=0.03, r2=0.04, k=1.0)


@pytest.fixture
def report():
    def _report(number, title, passed, detail=""):
        ACCEPTANCE.append((number, title, passed, detail))
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE, key=lambda t: t[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}: {detail}")
