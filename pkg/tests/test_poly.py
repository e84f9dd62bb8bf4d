from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys, scalars, sympy_of, sympy_scalar
from hvrank2.errors import ParseError
from hvrank2.poly import D1, D2, Poly, monomials, parse_poly, render_poly, span_contains
from hvrank2.scalars import I, ONE, Scalar

d1, d2 = sympy.symbols("d1 d2")


def test_monomial_order():
    assert monomials(2) == [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]
    assert len(monomials(4)) == 15


class TestBasics:
    def test_zero(self):
        z = Poly()
        assert z.is_zero() and z.degree() == -1 and not z
        assert Poly({(1, 0): 0}) == z

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly({(-1, 0): 1})

    def test_arithmetic(self):
        f = (D1 + 1) * (D2 - 1)
        assert f == D1 * D2 - D1 + D2 - 1
        assert f.degree() == 2
        assert (D1 - D2) ** 2 == D1**2 - 2 * D1 * D2 + D2**2
        assert 2 - D1 == -(D1 - 2)

    def test_eval(self):
        assert (D1**2 * D2).eval(2, 3) == Scalar(12)
        assert (D1 + I * D2).eval(1, I) == Scalar(0)

    def test_shift_examples(self):
        assert D1.shift(1, 0) == D1 - 1
        assert (D1 * D2).shift(2, 2) == (D1 - 2) * (D2 - 2)
        assert Poly.constant(5).shift(3, -1) == Poly.constant(5)

    def test_terms_returns_copy(self):
        f = D1 + 1
        t = f.terms
        t[(5, 5)] = ONE
        assert f == D1 + 1


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f - f == Poly()


@given(polys(), polys())
def test_mul_matches_sympy(f, g):
    assert sympy.expand(sympy_of(f * g) - sympy_of(f) * sympy_of(g)) == 0


@given(polys(max_degree=4), scalars, scalars)
def test_shift_matches_sympy_substitution(f, s1, s2):
    ref = sympy.expand(sympy_of(f).subs({d1: d1 - sympy_scalar(s1), d2: d2 - sympy_scalar(s2)}, simultaneous=True))
    assert sympy.expand(sympy_of(f.shift(s1, s2)) - ref) == 0


@given(polys(), polys(), scalars, scalars)
def test_shift_is_ring_homomorphism(f, g, s1, s2):
    assert (f * g).shift(s1, s2) == f.shift(s1, s2) * g.shift(s1, s2)
    assert (f + g).shift(s1, s2) == f.shift(s1, s2) + g.shift(s1, s2)


@given(polys(), scalars, scalars, scalars, scalars)
def test_shift_composition(f, a, b, c, d):
    assert f.shift(a, b).shift(c, d) == f.shift(a + c, b + d)


@given(polys(), scalars, scalars, scalars, scalars)
def test_eval_commutes_with_shift(f, s1, s2, x, y):
    assert f.shift(s1, s2).eval(x, y) == f.eval(x - s1, y - s2)


class TestText:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("d1*d2 + d1 - 1/2*d2 - 1/2", D1 * D2 + D1 - Fraction(1, 2) * D2 - Fraction(1, 2)),
            ("(d1+2)*(d2+2)", (D1 + 2) * (D2 + 2)),
            ("d1^3 - 3*d1^2*d2", D1**3 - 3 * D1**2 * D2),
            ("1/2i*d1", Scalar(0, Fraction(1, 2)) * D1),
            ("-(d1 - i)^2", -((D1 - I) ** 2)),
            ("0", Poly()),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_poly(text) == expected

    @pytest.mark.parametrize("text", ["d3", "d1 +", "(d1", "d1^", "1/0*d1", "d1 d2", "x"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_poly(text)

    def test_render(self):
        assert render_poly(D1 * D2 + D1 - Fraction(1, 2) * D2 - Fraction(1, 2)) == "d1*d2 + d1 - 1/2*d2 - 1/2"
        assert render_poly((1 + 2 * I) * D1**2 * D2) == "(1+2i)*d1^2*d2"
        assert render_poly(Poly.constant(I)) == "1i"
        assert render_poly(-D1 + 1) == "-d1 + 1"


@given(polys(max_degree=4))
def test_render_parse_round_trip(f):
    assert parse_poly(render_poly(f)) == f


def test_span_contains():
    basis = [D1 - D2, Poly.constant(1)]
    assert span_contains(basis, 3 * D1 - 3 * D2 + 7)
    assert not span_contains(basis, D1)
