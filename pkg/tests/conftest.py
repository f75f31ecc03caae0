import sys
import pytest

from ringlab import build

SMALL = [
    "Zmod(1)", "Zmod(2)", "Zmod(4)", "Zmod(6)", "Zmod(8)", "Zmod(9)",
    "M(2, Zmod(2))", "U(2, Zmod(2))", "D(2, Zmod(4))", "D(3, Zmod(2))",
    "S1(Zmod(2))", "S2(Zmod(2))", "H(0, 0, Zmod(2))", "H(1, 0, Zmod(2))",
    "H(0, 1, Zmod(2))", "H(1, 1, Zmod(2))", "dorroh(Zmod(2), 2)", "truncpoly(Zmod(2), 3)",
    "prod(Zmod(2), U(2, Zmod(2)))", "corner(U(2, Zmod(2)), 4)", "truncpoly(Zmod(4), 2)",
    "skew_trivial(Zmod(4), id)",
]


@pytest.fixture(scope="session")
def small_rings():
    return [build(e) for e in SMALL]


def ring(expr):
    return build(expr)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines, key=lambda k: (k[0], len(k), k)):
        terminalreporter.write_line(lines[key])
