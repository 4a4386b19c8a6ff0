from fractions import Fraction as F

import pytest

from newtonrule import parse_parametric, parse_polynomial

DEGREE8 = "x^8 - 16x^7 + 28x^6 + 112x^5 - 70x^4 + (28/5)x^3 + 28x^2 + 16x + 1"
QUINTIC = "x^5 + x^4 - 28x^3 + 32x^2 + 96x - 144"
Q_FAMILY = "x^3 - 8x^2 + 8*(3-2q)x - 16*(1-q)"
GAP_QUARTIC = "x^4 - 2x^3 - 2x^2 + 5x + 10"


@pytest.fixture
def degree8():
    return parse_polynomial(DEGREE8)


@pytest.fixture
def quintic():
    return parse_polynomial(QUINTIC)


@pytest.fixture
def q_family():
    return parse_parametric(Q_FAMILY, "q")


@pytest.fixture
def gap_quartic():
    return parse_polynomial(GAP_QUARTIC)


def fr(*vals):
    return tuple(F(v) for v in vals)


# one PASS/FAIL line per acceptance criterion, repeated at the end of the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
