import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_scalars, rationals, scalars
from hvrank2.errors import ParseError
from hvrank2.scalars import I, ONE, ZERO, Scalar, as_scalar, parse_pair, parse_scalar, render_scalar


def fr(c: Scalar):
    """Scalar as a pair of Fractions; arithmetic below is the reference."""
    return (Fraction(int(c.re.numerator), int(c.re.denominator)),
            Fraction(int(c.im.numerator), int(c.im.denominator)))


def ref_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def ref_div(a, b):
    n = b[0] ** 2 + b[1] ** 2
    num = ref_mul(a, (b[0], -b[1]))
    return (num[0] / n, num[1] / n)


class TestArithmetic:
    def test_i_squared(self):
        assert I * I == -ONE

    def test_half_plus_i(self):
        x = Scalar(Fraction(1, 2), 1)
        assert x * x == Scalar(Fraction(-3, 4), 1)
        assert x.inverse() == Scalar(Fraction(2, 5), Fraction(-4, 5))

    def test_mixed_with_int(self):
        assert 2 + I == Scalar(2, 1)
        assert 1 - I == Scalar(1, -1)
        assert 3 * I == Scalar(0, 3)
        assert 1 / Scalar(0, 2) == Scalar(0, Fraction(-1, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_powers(self):
        assert I**4 == ONE
        assert Scalar(2) ** -3 == Scalar(Fraction(1, 8))
        assert (1 + I) ** 2 == Scalar(0, 2)
        assert Scalar(5) ** 0 == ONE

    def test_immutable(self):
        with pytest.raises(AttributeError):
            ONE.re = 3

    def test_hash_matches_for_real_values(self):
        assert hash(Scalar(3)) == hash(Scalar(Fraction(6, 2)))
        assert len({Scalar(1, 1), Scalar(1, 1), Scalar(1)}) == 2

    def test_pickle(self):
        x = Scalar(Fraction(-7, 3), Fraction(2, 9))
        assert pickle.loads(pickle.dumps(x)) == x

    def test_as_scalar(self):
        assert as_scalar(3) == Scalar(3)
        assert as_scalar("1/2i") == Scalar(0, Fraction(1, 2))
        assert as_scalar(Fraction(2, 3)) == Scalar(Fraction(2, 3))
        with pytest.raises(TypeError):
            as_scalar(1.5)


@given(scalars, scalars)
def test_add_mul_match_reference(a, b):
    assert fr(a + b) == (fr(a)[0] + fr(b)[0], fr(a)[1] + fr(b)[1])
    assert fr(a * b) == ref_mul(fr(a), fr(b))


@given(scalars, nonzero_scalars)
def test_division_matches_reference(a, b):
    assert fr(a / b) == ref_div(fr(a), fr(b))


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO and a + ZERO == a and a * ONE == a


@given(nonzero_scalars)
def test_inverse(a):
    assert a * a.inverse() == ONE


@given(scalars)
def test_conjugate_norm(a):
    n = a * a.conjugate()
    assert n.im == 0 and n.re == a.norm()


class TestParsing:
    @pytest.mark.parametrize(
        "text, value",
        [
            ("2/3", Scalar(Fraction(2, 3))),
            ("-1+1/2i", Scalar(-1, Fraction(1, 2))),
            ("1/2i", Scalar(0, Fraction(1, 2))),
            ("3-2i", Scalar(3, -2)),
            ("-4/6", Scalar(Fraction(-2, 3))),
            (" 1 + 1i ", Scalar(1, 1)),
            ("0", ZERO),
        ],
    )
    def test_parse(self, text, value):
        assert parse_scalar(text) == value

    @pytest.mark.parametrize("text", ["1/0", "", "abc", "1.5", "1//2", "i", "2+i", "1/2+3"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)

    def test_render(self):
        assert render_scalar(Scalar(Fraction(2, 3))) == "2/3"
        assert render_scalar(Scalar(-1, Fraction(1, 2))) == "-1+1/2i"
        assert render_scalar(Scalar(1, Fraction(-1, 2))) == "1-1/2i"
        assert render_scalar(Scalar(0, -1)) == "-1i"
        assert render_scalar(ZERO) == "0"

    def test_pair(self):
        assert parse_pair("1/2,-1/3") == (Scalar(Fraction(1, 2)), Scalar(Fraction(-1, 3)))
        with pytest.raises(ParseError):
            parse_pair("1,2,3")
        with pytest.raises(ParseError):
            parse_pair("1/0,2")


@given(scalars)
def test_render_parse_round_trip(a):
    assert parse_scalar(render_scalar(a)) == a


@given(rationals)
def test_real_values_render_without_i(q):
    assert "i" not in render_scalar(Scalar(q))


@given(st.integers(-5, 5), nonzero_scalars)
def test_integer_powers(n, a):
    ref = ONE
    for _ in range(abs(n)):
        ref = ref * a
    assert a**n == (ref if n >= 0 else ref.inverse())
