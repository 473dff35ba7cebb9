from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gvdkit.polynomial import (
    GrevLex,
    Lex,
    ParseError,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
    UnknownVariableError,
    YBlock,
    compare,
    format_polynomial,
    initial_y_form,
    leading_term,
    parse_polynomial,
    restrict_ring,
)

XYZW = PolynomialRing(["x", "y", "z", "w"])
SIX = PolynomialRing(["y", "z", "s", "x", "w", "r"])


def P(text, ring=XYZW):
    return parse_polynomial(text, ring)


# -- parsing


def test_parse_binomial():
    f = P("y*z - x*w")
    assert len(f) == 2
    assert sorted(f.terms.values()) == [Fraction(-1), Fraction(1)]


def test_parse_distributes_parentheses():
    f = P("y*(z*s - x^2)", SIX)
    assert f == P("y*z*s - y*x^2", SIX)


def test_parse_zero_is_empty():
    f = P("0")
    assert f.is_zero() and f.terms == {}


def test_parse_rational_coefficients_and_whitespace():
    f = P(" 3/4 * x ^ 2 -  1/2*y ")
    assert f.terms[(2, 0, 0, 0)] == Fraction(3, 4)
    assert f.terms[(0, 1, 0, 0)] == Fraction(-1, 2)


def test_parse_cancellation_is_canonical():
    assert P("x*y - y*x").is_zero()
    assert P("(x + y)^2") == P("x^2 + 2*x*y + y^2")


def test_parse_syntax_error_reports_offset():
    with pytest.raises(ParseError) as info:
        P("x + * y")
    assert info.value.offset == 4


def test_parse_unknown_variable_is_named():
    with pytest.raises(UnknownVariableError) as info:
        P("x*q")
    assert "q" in str(info.value)


# -- orders


def mono(text, ring=XYZW):
    f = P(text, ring)
    assert len(f) == 1
    return next(iter(f.terms))


def test_lex_x_squared_beats_xy():
    assert compare(mono("x^2"), mono("x*y"), Lex(), XYZW) == 1


def test_yblock_y_dominates():
    R = PolynomialRing(["x", "y"])
    assert compare(mono("y*x", R), mono("x^3", R), YBlock("y", GrevLex()), R) == 1


def test_grevlex_tie_break():
    R = PolynomialRing(["x", "y", "z"])
    assert compare(mono("x*y*z", R), mono("x^3", R), GrevLex(), R) == -1


def test_compare_rejects_foreign_monomials():
    with pytest.raises(RingMismatchError):
        compare((1, 0), (0, 1), Lex(), XYZW)


# -- initial y-forms, leading terms, restriction


def test_initial_y_form_picks_top_power():
    assert initial_y_form(P("y*z - x*w"), "x") == P("-x*w")
    R = PolynomialRing(["y", "q", "r", "s"])
    assert initial_y_form(P("y^2*q + y*r + s", R), "y") == P("y^2*q", R)
    f = P("z*s - x^2", SIX)
    assert initial_y_form(f, "y") == f


def test_initial_y_form_of_zero_and_unknown_variable():
    assert initial_y_form(XYZW.zero(), "x").is_zero()
    with pytest.raises(UnknownVariableError):
        initial_y_form(P("x"), "t")


def test_leading_term_examples():
    f = P("y*z - x*w")
    assert leading_term(f, Lex()) == (Fraction(-1), mono("x*w"))
    assert leading_term(f, YBlock("y", Lex())) == (Fraction(1), mono("y*z"))
    assert leading_term(XYZW.constant(5), Lex()) == (Fraction(5), (0, 0, 0, 0))
    with pytest.raises(ValueError):
        leading_term(XYZW.zero(), Lex())


def test_restrict_ring():
    g = restrict_ring(P("z*s - x^2", SIX), "y")
    assert g.ring.variables == ("z", "s", "x", "w", "r")
    assert g == parse_polynomial("z*s - x^2", g.ring)
    assert restrict_ring(P("w*r", SIX), "y").ring.n == 5
    with pytest.raises(ValueError):
        restrict_ring(P("y*w*r", SIX), "y")


def test_arithmetic_across_rings_is_rejected():
    other = PolynomialRing(["x", "y"])
    with pytest.raises(RingMismatchError):
        P("x") + parse_polynomial("x", other)


# -- properties

R3 = PolynomialRing(["x", "y", "z"])
exps = st.tuples(*[st.integers(0, 3)] * 3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: Polynomial(R3, d))
monos = exps
orders = st.sampled_from([Lex(), GrevLex(), YBlock("y", GrevLex()), YBlock("z", Lex()),
                          Lex(("z", "x", "y")), GrevLex(("y", "z", "x"))])


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f - f == R3.zero()


@given(polys)
def test_parse_print_roundtrip(f):
    assert parse_polynomial(format_polynomial(f), R3) == f


@given(monos, monos, monos, orders)
def test_compare_is_multiplicative_total_order(a, b, c, order):
    ab = compare(a, b, order, R3)
    assert ab == -compare(b, a, order, R3)
    assert (ab == 0) == (a == b)
    ac = tuple(i + j for i, j in zip(a, c))
    bc = tuple(i + j for i, j in zip(b, c))
    assert compare(ac, bc, order, R3) == ab
    assert compare(a, (0, 0, 0), order, R3) >= 0
    if ab >= 0 and compare(b, c, order, R3) >= 0:
        assert compare(a, c, order, R3) >= 0


@given(polys, st.sampled_from(["x", "y", "z"]), st.sampled_from(["lex", "grevlex"]))
def test_y_compatible_orders_respect_initial_forms(f, y, tail):
    if f.is_zero():
        return
    order = YBlock(y, Lex() if tail == "lex" else GrevLex())
    assert leading_term(initial_y_form(f, y), order) == leading_term(f, order)
    first = Lex((y,) + tuple(v for v in R3.variables if v != y))
    assert leading_term(initial_y_form(f, y), first) == leading_term(f, first)
