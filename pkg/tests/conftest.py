from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hvrank2.poly import Poly
from hvrank2.scalars import Scalar

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(Scalar, rationals, rationals)
nonzero_scalars = scalars.filter(bool)
small_ints = st.integers(-3, 3)


@st.composite
def polys(draw, max_degree=3, max_terms=5):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        d = draw(st.integers(0, max_degree))
        e1 = draw(st.integers(0, d))
        terms[(e1, d - e1)] = draw(scalars)
    return Poly(terms)


def sympy_of(f: Poly):
    """Convert a Poly to a sympy expression in d1, d2 (test oracle only)."""
    import sympy

    d1, d2 = sympy.symbols("d1 d2")
    out = sympy.Integer(0)
    for (a, b), c in f.items():
        out += sympy_scalar(c) * d1**a * d2**b
    return sympy.expand(out)


def sympy_scalar(c: Scalar):
    import sympy

    re = Fraction(int(c.re.numerator), int(c.re.denominator))
    im = Fraction(int(c.im.numerator), int(c.im.denominator))
    return sympy.Rational(re.numerator, re.denominator) + sympy.I * sympy.Rational(im.numerator, im.denominator)


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
