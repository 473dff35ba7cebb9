import random

import pytest
from hypothesis import given, settings, strategies as st

from gvdkit.corpus import random_monomial_ideal
from gvdkit.fixtures import (
    NONRADICAL_ORDER,
    cubic_six,
    irrelevant_c,
    nonradical_four,
    quadric_six,
    triangle_boundary,
)
from gvdkit.groebner import Ideal, ideals_equal, intersect, is_subset
from gvdkit.gvd import (
    Degeneracy,
    UnmixedPolicy,
    Verdict,
    canonical_order,
    invariants_via_recursion,
    invariants_via_split,
    is_c_saturated,
    is_gvd,
    is_irrelevant,
    minimal_vertex_covers,
    nonpositivity_audit,
    one_step_split,
    unmixed_outcome,
    verify_h_identity,
    verify_series_identity,
)
from gvdkit.hilbert import CMStatus, Hilbertian, invariants_direct
from gvdkit.polynomial import Lex, PolynomialRing
from gvdkit.toric import Graph, toric_ideal


def same(I, gens):
    return ideals_equal(I, Ideal(I.ring, gens))


# -- one step


def test_split_nonradical_at_x():
    I = nonradical_four()
    s = one_step_split(I, "x", NONRADICAL_ORDER)
    assert same(s.C, ["y", "w"])
    assert same(s.N, ["y^2*z"])
    assert s.valid
    assert s.degeneracy is Degeneracy.NONDEGENERATE
    assert same(s.in_y, ["x*w", "x*y", "y^2*z"])


def test_split_cubic_at_y():
    s = one_step_split(cubic_six(), "y")
    assert same(s.C, ["z*s - x^2", "w*r"])
    assert same(s.N, ["w*r*(z^2 + z*x + w*r + s^2)"])
    assert s.valid and s.degeneracy is Degeneracy.NONDEGENERATE


def test_split_at_absent_variable_is_degenerate():
    R = PolynomialRing(["y", "z", "s", "x"])
    I = Ideal(R, ["z*s - x^2"])
    s = one_step_split(I, "y")
    assert s.valid
    assert s.degeneracy is Degeneracy.EQUAL_RADICALS
    assert ideals_equal(s.C, I) and ideals_equal(s.N, I)


def test_split_with_unit_c():
    R = PolynomialRing(["x", "y"])
    I = Ideal(R, ["x - y"])
    s = one_step_split(I, "x")
    assert s.degeneracy is Degeneracy.UNIT_C
    assert s.N.is_zero()
    assert verify_series_identity(I, s)


def test_split_errors():
    I = nonradical_four()
    with pytest.raises(ValueError):
        one_step_split(I, "y", Lex())
    with pytest.raises(ValueError):
        one_step_split(I, "q")


def test_contracted_ideals_drop_y():
    s = one_step_split(cubic_six(), "y")
    C, N = s.contracted()
    assert "y" not in C.ring.variables and "y" not in N.ring.variables
    assert C.ring.n == 5


def test_yblock_and_lex_splits_agree():
    I = cubic_six()
    for y in I.ring.variables:
        a = one_step_split(I, y, canonical_order(y))
        b = one_step_split(I, y, Lex((y,) + tuple(v for v in I.ring.variables if v != y)))
        assert ideals_equal(a.C, b.C) and ideals_equal(a.N, b.N)


# -- identities


def test_series_identity_examples():
    I = nonradical_four()
    assert verify_series_identity(I, one_step_split(I, "x", NONRADICAL_ORDER))
    J = cubic_six()
    s = one_step_split(J, "y")
    assert verify_series_identity(J, s)
    assert verify_h_identity(J, s)


def test_h_identity_refuses_degenerate_splits():
    R = PolynomialRing(["y", "x"])
    I = Ideal(R, ["x^2"])
    with pytest.raises(ValueError):
        verify_h_identity(I, one_step_split(I, "y"))


# -- certifier


def test_certifier_examples():
    tree = is_gvd(cubic_six())
    assert tree.certified and tree.verdict is Verdict.DECOMPOSED
    assert tree.split.y == "y"
    assert not is_gvd(nonradical_four()).certified
    assert not is_gvd(quadric_six()).certified
    R = PolynomialRing(["x", "y"])
    assert is_gvd(Ideal(R, ["x", "y"])).verdict is Verdict.BASE_VARIABLES
    assert is_gvd(Ideal(R, ["1"])).verdict is Verdict.BASE_UNIT


def test_failed_tree_carries_reasons():
    tree = is_gvd(nonradical_four())
    assert tree.verdict is Verdict.FAILED
    assert {y for y, _ in tree.reasons} <= set("xyzw")
    assert tree.to_json()["reasons"]


def test_tree_shape_invariants():
    tree = is_gvd(cubic_six())
    assert tree.depth() <= tree.ideal.ring.n
    for node in tree.nodes():
        if node.verdict is Verdict.DECOMPOSED:
            y = node.split.y
            assert node.c_branch.ideal.ring.variables == node.ideal.ring.drop(y).variables
            assert node.n_branch.ideal.ring.variables == node.ideal.ring.drop(y).variables


def test_tree_json_is_deterministic():
    a = is_gvd(cubic_six()).to_json()
    b = is_gvd(cubic_six()).to_json()
    assert a == b
    assert a["verdict"] == "Decomposed" and a["y"] == "y"


def test_lex_family_widens_search():
    tree = is_gvd(cubic_six(), orders=("yblock", "lex"))
    assert tree.certified
    with pytest.raises(ValueError):
        is_gvd(cubic_six(), orders=("bogus",))


# -- unmixedness policies


def test_minimal_vertex_covers():
    covers = minimal_vertex_covers([frozenset({0, 1}), frozenset({1, 2})])
    assert sorted(map(sorted, covers)) == [[0, 2], [1]]


def test_unmixed_outcomes():
    R = PolynomialRing(["a", "b", "c"])
    assert unmixed_outcome(Ideal(R, ["a*b", "b*c"]), UnmixedPolicy.STRUCTURAL) == "failed:mixed-squarefree"
    assert unmixed_outcome(Ideal(R, ["a*b", "a*c", "b*c"]), UnmixedPolicy.STRUCTURAL) == "certified:squarefree"
    assert unmixed_outcome(Ideal(R, ["a*b - c^2"]), UnmixedPolicy.STRUCTURAL) == "certified:principal"
    assert unmixed_outcome(Ideal(R, ["a", "b"]), UnmixedPolicy.STRUCTURAL) == "certified:variables"
    assert unmixed_outcome(Ideal(R, ["a*b"]), UnmixedPolicy.ASSUME) == "assumed"


def test_mixed_monomial_ideal_is_not_gvd():
    # <ab, bc> = <b> ∩ <a, c> has components of different heights
    R = PolynomialRing(["a", "b", "c"])
    assert not is_gvd(Ideal(R, ["a*b", "b*c"])).certified


def test_strict_policy_fails_on_uncertifiable_nodes():
    tree = is_gvd(cubic_six(), UnmixedPolicy.STRICT)
    assert not tree.certified
    assert is_gvd(cubic_six(), UnmixedPolicy.ASSUME).certified
    assert is_gvd(cubic_six(), UnmixedPolicy.ASSUME).assumptions() == ["assumed"]


def test_strict_policy_certifies_toric_and_squarefree():
    assert is_gvd(toric_ideal(Graph.cycle(6)), UnmixedPolicy.STRICT).certified
    assert is_gvd(triangle_boundary(), UnmixedPolicy.STRICT).certified


# -- recursions


def test_recursion_matches_worked_values():
    rep = invariants_via_recursion(is_gvd(cubic_six()))
    assert (rep.reg, rep.e, rep.a) == (3, 8, -1)
    assert rep.provenance == "recursion"
    assert rep.hilbertian is Hilbertian.HILBERTIAN


def test_recursion_under_asserted_cm():
    I = nonradical_four()
    rep = invariants_via_split(I, one_step_split(I, "x", NONRADICAL_ORDER))
    assert (rep.reg, rep.e) == (2, 4)
    assert rep.cm_status is CMStatus.ASSERTED
    # reg(ideal) = reg(R/I) + 1 = max{4, 3 + 1}
    rep = invariants_via_recursion(is_gvd(quadric_six()), assume_cm=True)
    assert rep.reg + 1 == 4


def test_recursion_requires_certificate_or_assertion():
    with pytest.raises(ValueError):
        invariants_via_recursion(is_gvd(nonradical_four()))


def test_recursion_on_degenerate_steps():
    R = PolynomialRing(["x", "y", "z"])
    for gens in (["x - y"], ["y*z"], ["x*y", "z"], []):
        I = Ideal(R, gens)
        tree = is_gvd(I)
        assert tree.certified
        rec = invariants_via_recursion(tree)
        direct = invariants_direct(I, CMStatus.CERTIFIED)
        assert rec.same_invariants(direct) and rec.h == direct.h and rec.dim == direct.dim


# -- C-saturation


def test_c_saturation_examples():
    J = irrelevant_c()
    assert is_gvd(J).certified
    assert not is_c_saturated(J)
    assert invariants_direct(J).a == 0
    I4 = toric_ideal(Graph.cycle(4))
    res = is_c_saturated(I4)
    assert res
    assert not any(is_irrelevant(C) for C in res.c_ideals())
    assert is_c_saturated(Ideal(PolynomialRing(["x", "y"]), []))


def test_audit_rows():
    R = PolynomialRing(["x", "y", "z"])
    rows = nonpositivity_audit([("cubic", cubic_six()), ("irrelevant", irrelevant_c()),
                                ("zero", Ideal(R, [])), ("bad", nonradical_four())])
    by = {r.label: r for r in rows}
    assert all(r.ok for r in rows)
    assert by["cubic"].a == -1
    assert by["irrelevant"].a == 0 and not by["irrelevant"].c_saturated
    assert by["zero"].a == -3 and by["zero"].c_saturated
    assert not by["bad"].gvd


# -- properties over random squarefree monomial ideals


def random_squarefree(seed):
    rng = random.Random(seed)
    return random_monomial_ideal(rng, n=rng.randint(2, 5), max_gens=4, squarefree=True)


@given(st.integers(0, 100_000))
@settings(max_examples=40)
def test_split_properties(seed):
    I = random_squarefree(seed)
    for y in I.ring.variables:
        s = one_step_split(I, y)
        assert is_subset(s.N, s.C)
        assert all(g.degree_in(y) == 0 for g in s.C.generators + s.N.generators)
        if s.valid:
            assert ideals_equal(s.in_y, intersect(s.C, s.N.plus(I.ring.gen(y))))
            assert verify_series_identity(I, s)
        if s.degeneracy is not Degeneracy.NONDEGENERATE and not s.C.is_unit():
            assert ideals_equal(I, s.C) and ideals_equal(I, s.N) and ideals_equal(I, s.in_y)


@given(st.integers(0, 100_000))
@settings(max_examples=40)
def test_certified_trees_agree_with_direct(seed):
    I = random_squarefree(seed)
    tree = is_gvd(I)
    if not tree.certified or I.is_unit():
        return
    rec = invariants_via_recursion(tree)
    direct = invariants_direct(I, CMStatus.CERTIFIED)
    assert rec.same_invariants(direct)
    assert direct.a <= 0
    for node in tree.nodes():
        if node.verdict is Verdict.DECOMPOSED and node.split.degeneracy is Degeneracy.NONDEGENERATE:
            assert verify_h_identity(node.ideal, node.split)
    if is_c_saturated(I):
        assert direct.a < 0
