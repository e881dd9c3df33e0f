"""Fiber products of local rings: invariants, series, classifiers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringbench.artin import field_algebra, local_invariants, quotient_algebra
from ringbench.errors import (
    IncompleteProfileError,
    InconclusiveError,
    InvalidFiberError,
    StructuralError,
    UnsupportedInputError,
)
from ringbench.fiber import (
    FiberSpec,
    RingProfile,
    artinian_profile,
    classify_fcmt_cm,
    classify_fcmt_depth_le1,
    classify_gorenstein_fiber,
    cone_profile,
    fiber_bass_series,
    fiber_dim_depth,
    fiber_edim,
    fiber_multiplicity,
    fiber_poincare_k,
    fiber_present,
    fiber_profile,
    fiber_type,
    monomial_dim1_profile,
    nil_multiplicity_check,
    plane_curve_profile,
    proposition_proof_invariant,
    recognized_normal_form,
    regular_profile,
    small_mult_semidualizing_flag,
)
from ringbench.homalg import SeriesTrunc, poincare_series
from ringbench.scalars import Rationals

from conftest import make_ideal

Q = Rationals()


def sing(name, dim, depth, edim=2, type=1, multiplicity=1, **kw):
    return RingProfile(name, dim, depth, edim, type=type,
                       multiplicity=multiplicity, **kw)


def square_zero_profile(varnames=("x", "y"), trunc=6):
    gens = [a + "*" + b for a in varnames for b in varnames if a <= b]
    A = quotient_algebra(make_ideal(Q, list(varnames), gens))
    return artinian_profile(A, trunc=trunc)


def point_profile(var="x", power=2, trunc=6):
    A = quotient_algebra(make_ideal(Q, [var], ["%s^%d" % (var, power)]))
    return artinian_profile(A, trunc=trunc)


def test_profile_validation():
    with pytest.raises(StructuralError):
        RingProfile("bad", dim=0, depth=1, edim=1)
    with pytest.raises(StructuralError):
        RingProfile("bad", dim=1, depth=1, edim=1, regular=True,
                    gorenstein=False)
    with pytest.raises(StructuralError):
        # Gorenstein forces Cohen-Macaulay
        RingProfile("bad", dim=1, depth=0, edim=2, gorenstein=True)
    p = sing("p", 1, 0, edim=3)
    assert p.singular and not p.cm
    assert p.ecodepth == 3 and not p.hypersurface


def test_artinian_profile_values():
    p = square_zero_profile()
    assert (p.dim, p.depth, p.edim, p.length, p.type) == (0, 0, 2, 3, 2)
    assert p.multiplicity == 3 and not p.gorenstein
    assert p.poincare_k.coeffs[:4] == (1, 2, 4, 8)
    assert p.bass.coeffs[:4] == (2, 3, 6, 12)
    bare = square_zero_profile(trunc=6)
    quiet = artinian_profile(
        quotient_algebra(make_ideal(Q, ["x"], ["x^2"])), with_series=False)
    assert quiet.poincare_k is None and quiet.bass is None
    assert bare.provenance["type"] == "computed"


def test_cone_profile_shifts_series():
    base = square_zero_profile()
    c = cone_profile(base)
    assert (c.dim, c.depth, c.edim) == (1, 1, 3)
    assert (c.type, c.multiplicity, c.length) == (2, 3, None)
    # adjoining a free variable multiplies P by (1 + t) and the Bass
    # series by t
    assert c.poincare_k.coeffs[:5] == (1, 3, 6, 12, 24)
    assert c.bass.coeffs[:5] == (0, 2, 3, 6, 12)
    assert c.finite_cm_type is None
    # a cone over the base field is a power series ring
    r = cone_profile(artinian_profile(field_algebra(Q)), k=2)
    assert r.regular and r.finite_cm_type is True
    assert (r.dim, r.depth, r.edim) == (2, 2, 2)


def test_regular_and_curve_profiles():
    r = regular_profile(2, trunc=5)
    assert r.poincare_k.coeffs == (1, 2, 1, 0, 0, 0)
    assert r.bass.coeffs == (0, 0, 1, 0, 0, 0)
    assert r.gorenstein and r.cm and r.finite_cm_type is True
    c = plane_curve_profile(Q, 3, trunc=5)
    assert (c.dim, c.depth, c.edim, c.multiplicity) == (1, 1, 2, 2)
    assert c.curve_exponent == 3 and c.hypersurface
    assert c.analytically_unramified is True
    assert c.finite_cm_type is True
    assert c.poincare_k.coeffs == (1, 2, 2, 2, 2, 2)
    assert c.bass.coeffs == (0, 1, 0, 0, 0, 0)


def test_fiber_spec_rejects_field_factor():
    with pytest.raises(InvalidFiberError):
        FiberSpec(artinian_profile(field_algebra(Q)), regular_profile(1))
    f = FiberSpec(regular_profile(1), plane_curve_profile(Q, 2))
    g = f.swapped()
    assert g.left.curve_exponent == 2


def test_dim_depth_cm():
    a = sing("a", 0, 0)
    d1 = sing("d1", 1, 1)
    assert fiber_dim_depth(FiberSpec(a, a)) == (0, 0, True)
    assert fiber_dim_depth(FiberSpec(d1, a)) == (1, 0, False)
    assert fiber_dim_depth(FiberSpec(d1, d1)) == (1, 1, True)
    r2 = regular_profile(2)
    assert fiber_dim_depth(FiberSpec(r2, regular_profile(1))) == (2, 1, False)
    assert fiber_edim(FiberSpec(d1, sing("b", 0, 0, edim=3))) == 5


def test_type_table_both_singular():
    def t(dS, dT, tS, tT):
        S = sing("S", max(dS, 1) if dS else 0, dS, type=tS)
        S.dim = max(dS, S.dim)
        T = sing("T", max(dT, 1) if dT else 0, dT, type=tT)
        T.dim = max(dT, T.dim)
        return fiber_type(FiberSpec(S, T))

    assert t(0, 0, 2, 3) == 5
    assert t(0, 2, 2, 3) == 2
    assert t(2, 0, 2, 3) == 3
    assert t(1, 1, 2, 3) == 6
    assert t(1, 2, 2, 3) == 3
    assert t(2, 1, 2, 3) == 4
    assert t(2, 3, 9, 9) == 1


def test_type_table_one_regular():
    dvr = regular_profile(1)
    assert fiber_type(FiberSpec(sing("S", 0, 0, type=2), dvr)) == 2
    assert fiber_type(FiberSpec(dvr, sing("S", 0, 0, type=2))) == 2
    assert fiber_type(FiberSpec(sing("S", 1, 1, type=2), regular_profile(2))) == 3
    assert fiber_type(FiberSpec(sing("S", 2, 2, type=2), dvr)) == 1
    assert fiber_type(FiberSpec(dvr, dvr)) == 1
    # a zero-dimensional regular factor would be the residue field
    fake = RingProfile("pt", 0, 0, 1, regular=True)
    with pytest.raises(InvalidFiberError):
        fiber_type(FiberSpec(sing("S", 0, 0, type=2), fake))


def test_multiplicity():
    assert fiber_multiplicity(
        FiberSpec(sing("S", 1, 1, multiplicity=2),
                  sing("T", 1, 1, multiplicity=3))) == 5
    assert fiber_multiplicity(
        FiberSpec(sing("S", 2, 1, multiplicity=7),
                  sing("T", 1, 1, multiplicity=3))) == 7
    # both artinian: the shared residue field is counted once
    assert fiber_multiplicity(
        FiberSpec(sing("S", 0, 0, multiplicity=3),
                  sing("T", 0, 0, multiplicity=2))) == 4
    with pytest.raises(IncompleteProfileError):
        fiber_multiplicity(
            FiberSpec(sing("S", 0, 0, multiplicity=None), sing("T", 0, 0)))


def test_fiber_poincare():
    ones = SeriesTrunc((1,) * 7)
    # two Gorenstein points: P = 1/(1 - 2t)
    assert fiber_poincare_k(ones, ones).coeffs == (1, 2, 4, 8, 16, 32, 64)
    # two discrete valuation rings: P = (1 + t)/(1 - t)
    lin = SeriesTrunc.from_poly_coeffs([1, 1], 6)
    assert fiber_poincare_k(lin, lin).coeffs == (1, 2, 2, 2, 2, 2, 2)
    with pytest.raises(InconclusiveError):
        fiber_poincare_k(ones, lin, trunc=9)
    with pytest.raises(InvalidFiberError):
        fiber_poincare_k(SeriesTrunc.one(6), ones)
    with pytest.raises(StructuralError):
        fiber_poincare_k(SeriesTrunc.from_poly_coeffs([2, 1], 6), ones)


def test_fiber_bass_two_points():
    # the fiber of two Gorenstein points on one variable each is the
    # square-zero algebra on two generators; its Bass series
    # (2 - t)/(1 - 2t) is computed by direct resolution in test_homalg
    f = FiberSpec(point_profile("x"), point_profile("z"))
    B = fiber_bass_series(f, 5)
    assert B.coeffs == (2, 3, 6, 12, 24, 48)


def test_fiber_bass_two_dvrs():
    f = FiberSpec(regular_profile(1), regular_profile(1))
    B = fiber_bass_series(f, 6)
    assert B.coeffs == (0, 1, 0, 0, 0, 0, 0)


def test_fiber_bass_cone_against_dvr():
    # frozen from an independent run of the same formula at higher
    # truncation; the depth-1 coefficient must equal the type
    f = FiberSpec(cone_profile(square_zero_profile()), regular_profile(1))
    B = fiber_bass_series(f, 5)
    assert B.coeffs == (0, 3, 8, 24, 72, 216)
    assert B.coeffs[1] == fiber_type(f) == 3
    g = FiberSpec(regular_profile(1), cone_profile(square_zero_profile()))
    assert fiber_bass_series(g, 5) == B


def test_fiber_bass_error_paths():
    short = FiberSpec(point_profile("x", trunc=3), point_profile("z"))
    with pytest.raises(InconclusiveError):
        fiber_bass_series(short, 6)
    bare = FiberSpec(sing("S", 0, 0, type=1), sing("T", 0, 0, type=1))
    with pytest.raises(IncompleteProfileError):
        fiber_bass_series(bare, 4)


def test_fiber_present_and_length():
    IS = make_ideal(Q, ["x"], ["x^2"])
    IT = make_ideal(Q, ["z"], ["z^2"])
    J = fiber_present(IS, IT)
    texts = sorted(repr(g) for g in J.gens)
    assert texts == ["x*z", "x^2", "z^2"]
    inv = local_invariants(quotient_algebra(J))
    assert inv["length"] == 3 and inv["socle_dim"] == 2
    with pytest.raises(StructuralError):
        fiber_present(IS, make_ideal(Q, ["x"], ["x^3"]))


def test_fiber_profile_assembly():
    f = FiberSpec(point_profile("x"), point_profile("z"))
    p = fiber_profile(f, trunc=5)
    assert (p.dim, p.depth, p.cm) == (0, 0, True)
    assert (p.edim, p.type, p.multiplicity, p.length) == (2, 2, 3, 3)
    assert p.gorenstein is False
    assert p.poincare_k.coeffs == (1, 2, 4, 8, 16, 32)
    assert p.bass.coeffs == (2, 3, 6, 12, 24, 48)
    # profile values match the honest quotient of the presentation
    direct = artinian_profile(
        quotient_algebra(fiber_present(
            make_ideal(Q, ["x"], ["x^2"]), make_ideal(Q, ["z"], ["z^2"]))),
        trunc=5)
    assert direct.length == p.length and direct.type == p.type
    assert direct.poincare_k == p.poincare_k
    assert direct.bass == p.bass


def test_classify_gorenstein():
    node = FiberSpec(regular_profile(1), regular_profile(1))
    out = classify_gorenstein_fiber(node)
    assert out["gorenstein"] and "hypersurface" in out["reason"]
    tall = FiberSpec(regular_profile(2), regular_profile(1))
    assert not classify_gorenstein_fiber(tall)["gorenstein"]
    mixed = FiberSpec(point_profile("x"), regular_profile(1))
    assert not classify_gorenstein_fiber(mixed)["gorenstein"]


def test_classify_cm_fibers():
    dvr = regular_profile(1)
    assert classify_fcmt_cm(FiberSpec(dvr, dvr)) == {
        "finite_cm_type": True, "matched_condition": "ii"}
    for n in (2, 3):
        f = FiberSpec(plane_curve_profile(Q, n), dvr)
        assert classify_fcmt_cm(f)["finite_cm_type"]
        assert classify_fcmt_cm(f.swapped())["finite_cm_type"]
    # multiplicity 2 with infinitely many indecomposables: the declared
    # flag and the multiplicity bound must both say no
    line = monomial_dim1_profile(
        make_ideal(Q, ["x", "y"], ["x^2"]), name="line")
    line.declare(finite_cm_type=False)
    out = classify_fcmt_cm(FiberSpec(line, dvr))
    assert out == {"finite_cm_type": False, "matched_condition": "none"}


def test_classify_cm_refuses_and_reports_missing():
    with pytest.raises(UnsupportedInputError):
        classify_fcmt_cm(FiberSpec(regular_profile(1), point_profile("x")))
    bare = monomial_dim1_profile(
        make_ideal(Q, ["x", "y"], ["x^2"]), name="bare")
    with pytest.raises(IncompleteProfileError) as exc:
        classify_fcmt_cm(FiberSpec(bare, regular_profile(1)))
    assert list(exc.value.missing) == ["bare.finite_cm_type"]


def test_classify_depth_le1():
    dvr = regular_profile(1)
    pt = point_profile("x")
    curve = plane_curve_profile(Q, 3)
    assert classify_fcmt_depth_le1(FiberSpec(curve, pt)) == {
        "finite_cm_type": True, "matched_condition": "1"}
    assert classify_fcmt_depth_le1(FiberSpec(pt, curve))["finite_cm_type"]
    assert classify_fcmt_depth_le1(FiberSpec(curve, dvr)) == {
        "finite_cm_type": True, "matched_condition": "2"}
    assert classify_fcmt_depth_le1(FiberSpec(curve, curve)) == {
        "finite_cm_type": False, "matched_condition": "none"}
    assert not classify_fcmt_depth_le1(FiberSpec(pt, pt))["finite_cm_type"]
    # dimension > 1 answers without needing any flags
    tall = FiberSpec(RingProfile("tall", 2, 1, 3), pt)
    assert classify_fcmt_depth_le1(tall) == {
        "finite_cm_type": False, "matched_condition": "none"}


def test_recognized_normal_form():
    dvr = regular_profile(1)
    assert recognized_normal_form(FiberSpec(dvr, dvr)) == "k[[x,z]]/(xz)"
    f = FiberSpec(plane_curve_profile(Q, 3), dvr)
    want = "k[[x,y,z]]/(x^2 - y^3, xz, yz)"
    assert recognized_normal_form(f) == want
    assert recognized_normal_form(f.swapped()) == want
    assert recognized_normal_form(
        FiberSpec(point_profile("x"), point_profile("z"))) is None


def test_nil_multiplicity_agreeing_case():
    out = nil_multiplicity_check(make_ideal(Q, ["x", "y"], ["x^2", "x*y"]))
    assert out["equal"] and out["hypothesis_holds"]
    assert out["e_R"] == out["e_R_mod_nil"] == 1


def test_nil_multiplicity_ray_case():
    # (x^2, xz, yz): x*y^k stays standard and nilpotent for every k, so
    # deep powers of the maximal ideal keep meeting the nilradical and
    # the multiplicities genuinely differ
    out = nil_multiplicity_check(
        make_ideal(Q, ["x", "y", "z"], ["x^2", "x*z", "y*z"]))
    assert not out["hypothesis_holds"]
    assert out["e_R"] == 3 and out["e_R_mod_nil"] == 2
    assert not out["equal"]


def test_small_mult_flag():
    p = sing("p", 1, 1, multiplicity=3)
    assert small_mult_semidualizing_flag(p)
    assert not small_mult_semidualizing_flag(sing("q", 1, 1, multiplicity=9))
    with pytest.raises(IncompleteProfileError):
        small_mult_semidualizing_flag(sing("r", 1, 0, multiplicity=3))


def test_proposition_invariant_cases():
    out = proposition_proof_invariant(
        quotient_algebra(make_ideal(Q, ["x", "y"], ["x^2", "x*y", "y^2"])))
    assert out["identity_holds"] and not out["hypothesis_applies"]
    assert out["conclusion_holds"]
    chain = proposition_proof_invariant(
        quotient_algebra(make_ideal(Q, ["x"], ["x^4"])))
    assert chain["msquare_dim"] == 2 and chain["identity_holds"]
    # socle {x^2, y^2, z^2, xy} inside m^2 with type 4 at length 8
    firing = proposition_proof_invariant(quotient_algebra(make_ideal(
        Q, ["x", "y", "z"],
        ["x*z", "y*z", "x^3", "y^3", "z^3", "x^2*y", "x*y^2"])))
    assert firing["length"] == 8 and firing["type"] == 4
    assert firing["hypothesis_applies"] and firing["conclusion_holds"]
    assert firing["identity_holds"]


dims = st.integers(min_value=0, max_value=2)
types = st.integers(min_value=1, max_value=4)
mults = st.integers(min_value=1, max_value=5)


@st.composite
def singular_profiles(draw, tag):
    dim = draw(dims)
    depth = draw(st.integers(min_value=0, max_value=dim))
    edim = draw(st.integers(min_value=1, max_value=4))
    return RingProfile(tag, dim, depth, edim, type=draw(types),
                       multiplicity=draw(mults))


@settings(max_examples=80, deadline=None)
@given(singular_profiles("S"), singular_profiles("T"))
def test_fiber_invariants_are_symmetric(S, T):
    f = FiberSpec(S, T)
    g = f.swapped()
    assert fiber_dim_depth(f) == fiber_dim_depth(g)
    assert fiber_edim(f) == fiber_edim(g)
    assert fiber_multiplicity(f) == fiber_multiplicity(g)
    assert fiber_type(f) == fiber_type(g)
