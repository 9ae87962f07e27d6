from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import sympy_charpoly
from rniep.errors import ParseError
from rniep.exactnum import (
    Polynomial,
    RationalMatrix,
    block_diag,
    char_poly,
    common_denominator,
    format_rational,
    is_nonnegative,
    parse_rational,
    poly_from_roots,
)
from strategies import rationals


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)), ("-7", Fraction(-7)), ("13/2", Fraction(13, 2)),
    ("6/4", Fraction(3, 2)), (" -1/3 ", Fraction(-1, 3)), ("+5", Fraction(5)), ("0/9", Fraction(0)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1.5", "1/-2", "3/", "--1", "1e3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_is_reduced():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"


@given(rationals(10**6, 10**4))
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_polynomial_trims_and_degree():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert Polynomial((0, 0)).degree == -1
    assert Polynomial.monomial(3).degree == 3


def test_polynomial_str():
    assert str(poly_from_roots([6, -3])) == "x^2 - 3x - 18"
    assert str(Polynomial()) == "0"


def test_poly_from_roots_evaluates_to_zero_at_roots():
    roots = [Fraction(3, 2), -2, 0, 5]
    p = poly_from_roots(roots)
    assert p.degree == 4
    assert all(p(r) == 0 for r in roots)
    assert p(1) == (1 - Fraction(3, 2)) * 3 * 1 * (1 - 5)


@given(st.lists(rationals(), max_size=4), st.lists(rationals(), max_size=4), rationals())
def test_polynomial_ring_ops_agree_with_evaluation(a, b, x):
    pa, pb = Polynomial(tuple(a)), Polynomial(tuple(b))
    assert (pa + pb)(x) == pa(x) + pb(x)
    assert (pa - pb)(x) == pa(x) - pb(x)
    assert (pa * pb)(x) == pa(x) * pb(x)


def test_matrix_shape_checks():
    with pytest.raises(ValueError):
        RationalMatrix(())
    with pytest.raises(ValueError):
        RationalMatrix(((1, 2),))
    m = RationalMatrix(((1, 2), (3, 4)))
    with pytest.raises(IndexError):
        m[2, 0]
    assert m[1, 0] == 3
    assert m.trace() == 5
    assert (m @ RationalMatrix.identity(2)) == m


def test_block_diag_layout():
    m = block_diag(RationalMatrix(((1,),)), RationalMatrix(((2, 3), (4, 5))))
    assert m.rows == ((1, 0, 0), (0, 2, 3), (0, 4, 5))


def test_common_denominator():
    assert common_denominator([Fraction(1, 4), Fraction(1, 6), 3]) == 12


def test_char_poly_of_two_by_two():
    m = RationalMatrix(((1, 5), (4, 2)))
    assert char_poly(m) == poly_from_roots([6, -3])


@st.composite
def matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    entries = draw(st.lists(rationals(9, 5), min_size=n * n, max_size=n * n))
    return RationalMatrix(tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n)))


@given(matrices())
def test_char_poly_matches_sympy(m):
    assert char_poly(m).coeffs == sympy_charpoly(m.rows)


@given(matrices())
def test_char_poly_values_match_determinants(m):
    # det(xI - M) at x = 0, 1, 2 against sympy determinants
    import sympy
    p = char_poly(m)
    sm = sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in r] for r in m.rows])
    for x in (0, 1, 2):
        d = (x * sympy.eye(m.order) - sm).det()
        assert p(x) == Fraction(int(d.p), int(d.q))


@given(matrices())
def test_char_poly_trace_coefficient(m):
    p = char_poly(m)
    assert p.coeffs[-1] == 1
    assert p.coeffs[-2] == -m.trace()


def test_is_nonnegative():
    assert is_nonnegative(RationalMatrix(((0, 1), (2, 0))))
    assert not is_nonnegative(RationalMatrix(((0, -1), (2, 0))))
