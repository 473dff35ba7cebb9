import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from gvdkit.corpus import random_homogeneous_ideal
from gvdkit.fixtures import cubic_six, nonradical_four, triangle_boundary
from gvdkit.groebner import Ideal, initial_ideal, ideals_equal
from gvdkit.gvd import is_gvd
from gvdkit.hilbert import (
    UNIT_DIM,
    CMStatus,
    Hilbertian,
    classify_hilbertian,
    eval_hp,
    hilbert_data,
    hilbert_function_oracle,
    hilbert_numerator,
    hilbert_polynomial,
    hilbertian_by_comparison,
    invariants_direct,
    reduce_series,
)
from gvdkit.polynomial import GrevLex, Lex, PolynomialRing, YBlock

XY = PolynomialRing(["x", "y"])
XYZ = PolynomialRing(["x", "y", "z"])
XYZW = PolynomialRing(["x", "y", "z", "w"])


def test_initial_ideal_examples():
    I = nonradical_four()
    assert ideals_equal(initial_ideal(I, Lex()), Ideal(I.ring, ["x*w", "x*y", "y^2*z"]))
    M = Ideal(XYZ, ["x*y", "z^2"])
    assert ideals_equal(initial_ideal(M, GrevLex()), M)
    assert initial_ideal(Ideal(XYZ, []), Lex()).is_zero()


def test_numerator_examples():
    assert hilbert_numerator(Ideal(XY, ["x^2"])) == [1, 0, -1]
    assert hilbert_numerator(Ideal(XY, ["x", "y"])) == [1, -2, 1]
    hd = reduce_series(hilbert_numerator(Ideal(XYZW, ["x*w", "x*y", "y^2*z"])), 4)
    assert sum(hd.h) == 4


def test_numerator_rejects_non_monomial():
    with pytest.raises(ValueError):
        hilbert_numerator(Ideal(XY, ["x - y"]))


def test_reduce_series_examples():
    hd = reduce_series([1, 0, -1], 2)
    assert hd.h == (1, 1) and hd.dim == 1
    hd = reduce_series(hilbert_numerator(Ideal(XYZ, ["x*y*z"])), 3)
    assert hd.h == (1, 1, 1) and hd.dim == 2
    hd = reduce_series([1], 3)
    assert hd.h == (1,) and hd.dim == 3
    unit = reduce_series([], 3)
    assert unit.is_unit and unit.dim == UNIT_DIM


def test_invariants_direct_examples():
    rep = invariants_direct(cubic_six(), CMStatus.CERTIFIED)
    assert (rep.reg, rep.e, rep.a) == (3, 8, -1)
    rep = invariants_direct(nonradical_four(), CMStatus.ASSERTED)
    assert (rep.reg, rep.e) == (2, 4)
    rep = invariants_direct(triangle_boundary())
    assert (rep.reg, rep.e, rep.a) == (2, 3, 0)


def test_reg_withheld_without_cm():
    rep = invariants_direct(nonradical_four())
    assert rep.reg is None
    assert rep.to_json()["reg"] is None
    assert rep.e == 4


def test_unit_ideal_has_no_invariants():
    with pytest.raises(ValueError):
        invariants_direct(Ideal(XY, ["1"]))


def test_report_json_schema():
    js = invariants_direct(triangle_boundary()).to_json()
    assert js["hPoly"] == [1, 1, 1]
    assert js["dim"] == 2
    assert js["provenance"] == "direct"
    assert js["hilbertian"] == "AlmostHilbertian"


def test_oracle_examples():
    assert hilbert_function_oracle(Ideal(XY, ["x^2"]), 3) == 2
    for d in range(6):
        assert hilbert_function_oracle(Ideal(XYZW, []), d) == comb(d + 3, 3)
    assert hilbert_function_oracle(Ideal(XYZ, ["x*y*z"]), 2) == 6
    with pytest.raises(ValueError):
        hilbert_function_oracle(Ideal(XY, []), -1)


def test_hilbert_polynomial_examples():
    hd = hilbert_data(triangle_boundary())
    hp = hilbert_polynomial(hd)
    assert hp == [Fraction(0), Fraction(3)]
    assert hd.series(0)[0] == 1 and eval_hp(hp, 0) == 0
    hd = hilbert_data(Ideal(XYZ, []))
    hp = hilbert_polynomial(hd)
    assert all(eval_hp(hp, t) == comb(t + 2, 2) for t in range(10))
    hd = reduce_series([1, 0, -1], 2)
    assert hilbert_polynomial(hd) == [Fraction(2)]
    assert hd.series(0) == [1]


def test_hilbert_polynomial_leading_coefficient():
    hd = hilbert_data(cubic_six())
    hp = hilbert_polynomial(hd)
    assert len(hp) == hd.dim
    assert hp[-1] == Fraction(hd.multiplicity, factorial(hd.dim - 1))


def test_classification_examples():
    tree = is_gvd(cubic_six())
    assert tree.certified
    rep = invariants_direct(cubic_six(), CMStatus.CERTIFIED)
    assert classify_hilbertian(rep, CMStatus.CERTIFIED) is Hilbertian.HILBERTIAN
    tb = invariants_direct(triangle_boundary())
    assert classify_hilbertian(tb, CMStatus.CERTIFIED) is Hilbertian.ALMOST
    assert hilbertian_by_comparison(hilbert_data(triangle_boundary())) is Hilbertian.ALMOST
    zero = invariants_direct(Ideal(XYZ, []))
    assert zero.hilbertian is Hilbertian.HILBERTIAN


def test_positive_a_is_neither():
    # x^3 in one variable: h = 1 + t + t^2, dim 0, a = 2
    R = PolynomialRing(["x"])
    rep = invariants_direct(Ideal(R, ["x^3"]), CMStatus.CERTIFIED)
    assert rep.a == 2
    assert rep.hilbertian is Hilbertian.NEITHER
    assert hilbertian_by_comparison(hilbert_data(Ideal(R, ["x^3"]))) is Hilbertian.NEITHER


# -- properties


def random_ideals(seed, count):
    rng = random.Random(seed)
    return [random_homogeneous_ideal(rng, max_vars=5, max_degree=4, max_gens=4) for _ in range(count)]


@pytest.mark.parametrize("k", range(20))
def test_series_matches_oracle(k):
    I = random_ideals(500 + k, 1)[0]
    hd = hilbert_data(I)
    series = hd.series(10)
    assert series == [hilbert_function_oracle(I, t) for t in range(11)]


@given(st.integers(0, 10_000))
@settings(max_examples=30)
def test_invariant_identities(seed):
    I = random_ideals(seed, 1)[0]
    hd = hilbert_data(I)
    if hd.is_unit:
        return
    assert hd.multiplicity == sum(hd.h) > 0
    assert hd.a_invariant == hd.degree - hd.dim
    hp = hilbert_polynomial(hd)
    hf = hd.series(max(0, hd.a_invariant + 1) + hd.dim + 5)
    for t in range(max(0, hd.a_invariant + 1), len(hf)):
        assert hf[t] == eval_hp(hp, t)


@given(st.integers(0, 10_000))
@settings(max_examples=20)
def test_series_is_order_independent(seed):
    I = random_ideals(seed, 1)[0]
    y = I.ring.variables[0]
    ref = hilbert_data(I, GrevLex())
    assert hilbert_data(I, Lex()) == ref
    assert hilbert_data(I, YBlock(y, GrevLex())) == ref


def test_cm_positivity_on_certified_ideals():
    from gvdkit.acceptance import ideal_corpus

    for label, I in ideal_corpus(0):
        if is_gvd(I).certified and not I.is_unit():
            assert all(c >= 0 for c in hilbert_data(I).h), label
