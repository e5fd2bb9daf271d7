from fractions import Fraction

from hypothesis import settings, strategies as st

from coulomb_momentum.poly import GaussianRational, PolyField, Polynomial3

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def gaussian_rationals(draw):
    return GaussianRational(draw(small_rationals), draw(small_rationals))


@st.composite
def polynomials(draw, max_degree=6, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        d = draw(st.integers(0, max_degree))
        a = draw(st.integers(0, d))
        b = draw(st.integers(0, d - a))
        terms[(a, b, d - a - b)] = draw(gaussian_rationals())
    return Polynomial3(terms)


@st.composite
def fields(draw, max_degree=6, max_power=4):
    return PolyField(draw(polynomials(max_degree)), draw(st.integers(0, max_power)))


def q(power=1):
    return PolyField.q(power)


def p(axis):
    return PolyField.coordinate(axis)


F = Fraction


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
