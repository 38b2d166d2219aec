import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partialmaps import randomgen
from partialmaps.dermap import (
    AffineMap,
    ProjMap,
    affine_form,
    build_phi,
    fixed_point_data,
    fixed_point_form,
    infinity_multiplier,
    iterate,
    local_derivative,
    modified_newton,
    multiplier,
    multiplier_product_formula,
    newton_infinity_multiplier,
    orbit,
    periodic_report,
    psi_sequence,
    reconstruct,
    res_disc_check,
)
from partialmaps.errors import (
    DegenerateDegree,
    DegenerateMapWarning,
    DuplicatePoints,
    MultipleRoots,
    NewtonDegreeWarning,
    PreconditionError,
    SizeCapExceeded,
)
from partialmaps.fields import GF
from partialmaps.polyalg import BiForm, ProjPoint, UniPoly

CUBIC = BiForm([1, 0, -1, 0])  # X^3 - X Y^2
QUARTIC = BiForm([0, 1, -3, 2, 0])  # X^3 Y - 3 X^2 Y^2 + 2 X Y^3


def seeds():
    return st.integers(0, 10**6)


def test_build_phi_known_coefficients():
    phi = build_phi(QUARTIC)
    assert str(phi.P) == "X^3 - 6*X^2*Y + 6*X*Y^2"
    assert str(phi.Q) == "-3*X^2*Y + 6*X*Y^2 - 2*Y^3"
    assert phi.is_morphism()


def test_build_phi_rejects_bad_input():
    with pytest.raises(MultipleRoots):
        build_phi(BiForm([1, -2, 1]))
    with pytest.raises(PreconditionError):
        build_phi(BiForm([1, 0]))


def test_affine_form_is_x_minus_d_f_over_fprime():
    f = CUBIC.dehomogenize()
    expected = AffineMap(UniPoly.x() * f.derivative() - f * 3, f.derivative())
    assert affine_form(CUBIC) == expected
    assert affine_form(CUBIC).to_projmap() == build_phi(CUBIC)


def test_res_disc_small_cases():
    assert res_disc_check(CUBIC) == (-12, 4, True)
    assert res_disc_check(QUARTIC)[2]


@settings(max_examples=40, deadline=None)
@given(seeds(), st.integers(3, 7))
def test_res_disc_identity_random(seed, d):
    F = randomgen.random_squarefree_form(random.Random(seed), d)
    res, disc, ok = res_disc_check(F)
    sign = (-1) ** (d * (d - 1) // 2)
    assert ok
    assert res == sign * Fraction(d) ** (d - 2) * disc


@settings(max_examples=30, deadline=None)
@given(seeds(), st.integers(2, 6))
def test_fixed_point_form_proportional_to_F(seed, d):
    F = randomgen.random_squarefree_form(random.Random(seed), d)
    assert F.is_proportional(fixed_point_form(build_phi(F))) is not None


def test_fixed_multipliers_equal_one_minus_d():
    data = fixed_point_data(build_phi(QUARTIC))
    assert [str(p) for p, _ in data.points] == ["0", "1", "2", "inf"]
    assert all(lam == -3 for _, lam in data.points)
    assert data.relation_sum() == 1
    assert data.charpoly == UniPoly([27, 27, 9, 1])


def test_iterate_matches_pointwise_composition():
    phi = build_phi(BiForm([1, 0, 0, -2]))
    phi3 = iterate(phi, 3)
    pts = orbit(phi, ProjPoint(1), 3)
    assert [str(p) for p in pts] == ["1", "2", "1/2", "8"]
    assert phi3(ProjPoint(1)) == pts[-1]
    assert phi3.degree == 8


def test_iterate_size_cap():
    with pytest.raises(SizeCapExceeded):
        iterate(build_phi(QUARTIC), 10, size_cap=1000)


def test_local_derivative_charts_agree_with_conjugation():
    # multiplier at infinity by chart change equals derivative of the swap conjugate at 0
    phi = build_phi(QUARTIC)
    inf = ProjPoint.infinity()
    assert local_derivative(phi, inf) == infinity_multiplier(phi) == -3


def test_psi_sequence_degrees_and_scalars():
    steps = psi_sequence(QUARTIC, 3)
    assert [s.psi.degree for s in steps] == [3, 9, 27]
    assert all(s.c == -1 for s in steps)
    x = UniPoly.x()
    for s in steps:
        # phi^n(x) - x = d Psi_n / B_n
        assert AffineMap(s.A, s.B) - AffineMap.polynomial(x) == AffineMap(s.psi_raw * 4, s.B)


def test_psi_two_for_alpha_two():
    psi2 = psi_sequence(BiForm([0, 1, -3, 2, 0]), 2)[-1].psi
    expected = UniPoly.from_roots([0, 1, 2]) * UniPoly([-2, 0, 1]) * UniPoly([2, -2, 1]) * UniPoly([2, -4, 1])
    assert psi2 == expected


def test_psi_refused_for_degree_two():
    with pytest.raises(DegenerateDegree):
        psi_sequence(BiForm([1, 0, -1]), 2)


def test_periodic_report_charpoly_at_n1():
    rep = periodic_report(CUBIC, 1)
    t = UniPoly([2, 1])  # t - (1 - 3)
    # 0, 1, -1 are fixed and infinity is not
    assert not rep.infinity_periodic
    assert rep.multiplier_charpoly == t**3
    assert rep.full_charpoly == t**3
    assert rep.degree_ok


def test_product_formula_matches_chain_rule():
    rep = periodic_report(QUARTIC, 2)
    for pt, lam in rep.rational_points:
        if pt.is_infinity():
            continue
        assert multiplier_product_formula(QUARTIC, pt.x, 2) == lam == multiplier(build_phi(QUARTIC), pt, 2)


def test_modified_newton_degree_warning_and_infinity():
    f = UniPoly.from_roots([0, 1, -1])
    with pytest.warns(NewtonDegreeWarning):
        amap = modified_newton(f, 3)
    assert amap.to_projmap() == build_phi(BiForm.from_dehom(f, 3))
    assert newton_infinity_multiplier(f, 1) == Fraction(3, 2)
    with pytest.raises(MultipleRoots):
        modified_newton(UniPoly.from_roots([1, 1, 2]), 1)


def test_newton_roots_are_superattracting():
    f = UniPoly.from_roots([0, 1, -1])
    phi = modified_newton(f, 1).to_projmap()
    for r in (0, 1, -1):
        assert multiplier(phi, ProjPoint(r)) == 0


def test_reconstruct_phi_case_and_errors():
    pts = [ProjPoint(0), ProjPoint(1), ProjPoint.infinity()]
    F, phi = reconstruct(pts, 3)
    assert phi == build_phi(F)
    with pytest.raises(DuplicatePoints):
        reconstruct([ProjPoint(1), ProjPoint(1)], 2)
    with pytest.raises(PreconditionError):
        reconstruct([ProjPoint(0), ProjPoint(1), ProjPoint(2)], 1)
    with pytest.raises(PreconditionError):
        reconstruct(pts, 2)  # multiplier at infinity would be 2/0


def test_reconstruct_newton_case():
    pts = [ProjPoint(0), ProjPoint(2), ProjPoint(-1), ProjPoint.infinity()]
    f, phi = reconstruct(pts, Fraction(1, 2))
    assert phi == modified_newton(f, Fraction(1, 2)).to_projmap()
    data = fixed_point_data(phi)
    for pt, lam in data.points:
        assert lam == (Fraction(6, 5) if pt.is_infinity() else Fraction(1, 2))


def test_characteristic_divides_degree():
    fld = GF(3)
    F = BiForm([1, 0, 1, 1], fld)
    with pytest.warns(DegenerateMapWarning):
        phi = build_phi(F)
    assert phi.is_identity()


def test_field_mod_p_multipliers():
    fld = GF(7)
    F = BiForm.from_roots([ProjPoint(fld(v)) for v in (0, 1, 3)], fld)
    data = fixed_point_data(build_phi(F))
    assert all(lam == fld(-2) for _, lam in data.points)


@settings(max_examples=15, deadline=None)
@given(seeds())
def test_psi_degree_law_random(seed):
    rng = random.Random(seed)
    F = randomgen.random_squarefree_form(rng, rng.choice([3, 4]), bound=4)
    rep = periodic_report(F, 2)
    assert rep.degree_ok


def test_projmap_normalization_rules():
    P, Q = BiForm([2, 4]), BiForm([6, 8])
    phi = ProjMap(P, Q)
    assert phi == ProjMap(BiForm([1, 2]), BiForm([3, 4]))
    assert phi.normalized().P.coeffs == (1, 2)
    with pytest.raises(ValueError):
        ProjMap(BiForm([1, 0]), BiForm([1, 0, 0]))


def test_leading_zero_form_is_accepted_and_infinity_fixed():
    # a_d = 0 means infinity is a fixed point
    F = BiForm([0, 1, 0, -1])
    phi = build_phi(F)
    assert phi(ProjPoint.infinity()) == ProjPoint.infinity()
