"""Polynomial arithmetic, parsing, formatting, orders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from divlab.config import ParseError
from divlab.polycore import (
    DEGREVLEX,
    LEX,
    Point,
    Polynomial,
    Ring,
    block,
    evaluate,
    exact_divide,
    format_polynomial,
    is_homogeneous,
    parse_polynomial,
    partial_derivative,
)

R2 = Ring(["x", "y"])
R3 = Ring(["x", "y", "z"])
R4 = Ring(["x", "y", "z", "t"])


def P(text, ring=R2):
    return parse_polynomial(text, ring)


# -- parsing ------------------------------------------------------------------


def test_parse_cancellation():
    assert P("x*y - y*x").is_zero()


def test_parse_product_expansion():
    # oracle: hand expansion of xy(x+z)(x^2+yz)(z+yt); 8 terms, degree 7
    f = parse_polynomial("x*y*(x+z)*(x^2+y*z)*(z+y*t)", R4)
    expected = {
        (4, 1, 1, 0): 1,  # x^4 y z
        (4, 2, 0, 1): 1,  # x^4 y^2 t
        (3, 1, 2, 0): 1,  # x^3 y z^2
        (3, 2, 1, 1): 1,  # x^3 y^2 z t
        (2, 2, 2, 0): 1,  # x^2 y^2 z^2
        (2, 3, 1, 1): 1,  # x^2 y^3 z t
        (1, 2, 3, 0): 1,  # x y^2 z^3
        (1, 3, 2, 1): 1,  # x y^3 z^2 t
    }
    assert f.terms == {m: Fraction(c) for m, c in expected.items()}
    assert len(f.terms) == 8 and f.total_degree() == 7


def test_parse_juxtaposed_parentheses():
    assert P("(x+y)(x-y)") == P("x^2-y^2")
    assert P("2(x+y)") == P("2*x+2*y")


def test_parse_plane_curve():
    f = P("x^4+y^5+y^4*x")
    assert f.terms == {
        (4, 0): Fraction(1),
        (0, 5): Fraction(1),
        (1, 4): Fraction(1),
    }


def test_parse_rationals_and_signs():
    assert P("1/2*x - 3/4") == P("2/4*x - 3/4")
    assert P("-x + 1") == R2.one() - R2.variable(0)
    with pytest.raises(ParseError):
        P("1/0")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        P("x + (y")
    assert err.value.position is not None
    with pytest.raises(ParseError):
        P("x ** 2")
    with pytest.raises(ParseError):
        P("q + 1")  # unknown variable
    with pytest.raises(ParseError):
        parse_polynomial("xy", R2)  # lexes as one unknown identifier


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring([])
    with pytest.raises(ValueError):
        Ring(["x", "x"])
    with pytest.raises(ValueError):
        Ring(["2bad"])


# -- derivatives --------------------------------------------------------------


def test_partial_derivative_basic():
    assert partial_derivative(P("x^2*y"), 1) == P("2*x*y")
    assert partial_derivative(P("x^4+y^5+y^4*x"), 2) == P("5*y^4+4*y^3*x")
    assert partial_derivative(R2.constant(7), 1).is_zero()
    with pytest.raises(IndexError):
        partial_derivative(P("x"), 3)


# -- evaluation ---------------------------------------------------------------


def test_evaluate_examples():
    f = parse_polynomial("x^2+y*z", R3)
    assert evaluate(f, R3.point([1, 1, -1])) == 0
    g = parse_polynomial("x*y*(x+z)*(x^2+y*z)*(z^2+y*t)", R4)
    assert evaluate(g, R4.point([0, 0, 0, 1])) == 0
    assert evaluate(R3.one(), R3.point([5, -7, Fraction(1, 3)])) == 1
    with pytest.raises(ValueError):
        evaluate(f, R2.point([1, 2]))


# -- exact division -----------------------------------------------------------


def test_exact_divide_examples():
    assert exact_divide(P("x^2-y^2"), P("x-y")) == P("x+y")
    assert exact_divide(P("x*y"), P("x^2")) is None
    # normal crossing Saito matrix: det(diag(x, y)) / (xy) = 1
    assert exact_divide(P("x*y"), P("x*y")) == R2.one()
    with pytest.raises(ZeroDivisionError):
        exact_divide(P("x"), R2.zero())


# -- homogeneity --------------------------------------------------------------


def test_is_homogeneous_examples():
    f = parse_polynomial("x*y*(x+z)*(x^2+y*z)*(z+y*t)", R4)
    assert is_homogeneous(f) == (False, None)  # the factor z+yt is mixed
    assert is_homogeneous(P("x^4+y^5+y^4*x")) == (False, None)
    R5 = Ring(["x", "y", "z", "t", "u"])
    g = parse_polynomial("x*(8*x^3*u-y*(8*t*x^2-4*x*y*z+y^3))", R5)
    assert is_homogeneous(g) == (True, 5)
    with pytest.raises(ValueError):
        is_homogeneous(R2.zero())


# -- monomial orders ----------------------------------------------------------


def _order_sorted(order, monos):
    return order.sorted_descending(monos)


def test_degrevlex_reference():
    # degree first; ties broken by the rightmost nonzero difference negative
    monos = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 0, 2), (3, 0, 0)]
    got = _order_sorted(DEGREVLEX, monos)
    assert got == [(3, 0, 0), (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 0, 2)]


def test_lex_reference():
    monos = [(0, 3), (1, 0), (2, 1), (2, 0)]
    assert _order_sorted(LEX, monos) == [(2, 1), (2, 0), (1, 0), (0, 3)]


def test_block_order_eliminates_first_variables():
    order = block(1)
    # any monomial containing the first variable beats any without it
    assert order.greater((1, 0, 0), (0, 5, 5))
    assert order.greater((2, 0, 0), (1, 3, 3))


# -- property tests (hypothesis) ----------------------------------------------


@st.composite
def polys(draw, ring=R2, max_deg=3, max_terms=4):
    n = ring.n
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(
            draw(st.integers(0, max_deg)) for _ in range(n)
        )
        if sum(mono) > max_deg:
            continue
        c = draw(st.integers(-5, 5))
        terms[mono] = terms.get(mono, 0) + c
    return Polynomial(ring, {m: Fraction(c) for m, c in terms.items() if c})


@settings(max_examples=120, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@settings(max_examples=120, deadline=None)
@given(polys())
def test_parse_format_roundtrip(f):
    assert parse_polynomial(format_polynomial(f), R2) == f


@settings(max_examples=120, deadline=None)
@given(polys(ring=R3))
def test_partials_commute(f):
    for i in range(1, 4):
        for j in range(i + 1, 4):
            a = partial_derivative(partial_derivative(f, i), j)
            b = partial_derivative(partial_derivative(f, j), i)
            assert a == b


@settings(max_examples=120, deadline=None)
@given(polys(), polys(), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_evaluate_is_homomorphism(f, g, coords):
    p = R2.point(coords)
    assert evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p)
    assert evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p)


@settings(max_examples=120, deadline=None)
@given(polys(), polys())
def test_exact_divide_roundtrip(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f


@settings(max_examples=80, deadline=None)
@given(polys(), polys())
def test_leibniz_rule(f, g):
    for i in (1, 2):
        lhs = partial_derivative(f * g, i)
        rhs = partial_derivative(f, i) * g + f * partial_derivative(g, i)
        assert lhs == rhs
