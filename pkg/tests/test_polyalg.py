from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from partialmaps.errors import CharacteristicCollision, FieldMismatch, InexactDivision
from partialmaps.fields import GF, QQ, parse_field, scalar_str
from partialmaps.polyalg import (
    BiForm,
    ProjPoint,
    UniPoly,
    determinant,
    discriminant,
    form_gcd,
    gcd,
    interpolate,
    rational_roots,
    resultant,
    squarefree,
    uni_resultant,
)

X, Y = sympy.symbols("X Y")
x = sympy.Symbol("x")

small = st.integers(-9, 9)


def forms(dmin=1, dmax=6, field=QQ):
    return st.integers(dmin, dmax).flatmap(
        lambda d: st.lists(small, min_size=d + 1, max_size=d + 1)
        .filter(lambda cs: any(cs))
        .map(lambda cs: BiForm(cs, field))
    )


def sympy_sylvester_det(a, b):
    """Sylvester determinant with a, b given high-to-low; sympy does the det."""
    m, n = len(a) - 1, len(b) - 1
    rows = [[0] * i + list(a) + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + list(b) + [0] * (m - 1 - i) for i in range(m)]
    return sympy.Matrix(rows).det()


def to_sympy(F: BiForm):
    return sum(int(c) * X ** (F.d - i) * Y**i for i, c in enumerate(F.coeffs))


# ---- fields ----------------------------------------------------------------


def test_residue_arithmetic_and_errors():
    F7 = GF(7)
    a, b = F7(3), F7(5)
    assert a + b == F7(1)
    assert a * b == F7(1)
    assert a / b == F7(3 * 3)
    assert a**6 == F7.one
    with pytest.raises(CharacteristicCollision):
        a / F7(7)
    with pytest.raises(FieldMismatch):
        a + GF(5)(1)


def test_rationals_reject_floats():
    with pytest.raises(TypeError):
        QQ(0.5)
    assert QQ("3/4") == Fraction(3, 4)


def test_parse_field_and_scalar_str():
    assert parse_field("q") == QQ
    assert parse_field("fp:11") == GF(11)
    with pytest.raises(ValueError):
        parse_field("fp:12")
    assert scalar_str(Fraction(-3, 4)) == "-3/4"
    assert scalar_str(GF(5)(8)) == "3"


# ---- univariate ------------------------------------------------------------


def test_unipoly_divmod_and_exact_div():
    f = UniPoly.from_roots([1, 2, 3])
    q, r = divmod(f, UniPoly([-2, 1]))
    assert r.is_zero()
    assert q == UniPoly.from_roots([1, 3])
    with pytest.raises(InexactDivision):
        f.exact_div(UniPoly([-5, 1]))


@given(st.lists(small, max_size=6), st.lists(small, min_size=1, max_size=5).filter(lambda c: c[-1]))
def test_division_identity(a, b):
    f, g = UniPoly(a), UniPoly(b)
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


def test_gcd_is_monic_common_factor():
    f = UniPoly.from_roots([1, 2, Fraction(1, 3)])
    g = UniPoly.from_roots([2, Fraction(1, 3), 5])
    assert gcd(f, g) == UniPoly.from_roots([2, Fraction(1, 3)])


@settings(max_examples=60)
@given(st.lists(small, min_size=2, max_size=6), st.lists(small, min_size=2, max_size=6))
def test_euclid_resultant_matches_sympy(a, b):
    f, g = UniPoly(a), UniPoly(b)
    if f.is_constant() or g.is_constant():
        return
    # sympy.resultant gets the sign wrong for some degree pairs (x+1, x^3),
    # so the oracle is sympy's determinant of the Sylvester matrix instead.
    ha = [int(c) for c in reversed(f.coeffs)]
    hb = [int(c) for c in reversed(g.coeffs)]
    assert uni_resultant(f, g) == sympy_sylvester_det(ha, hb)


def test_euclid_resultant_root_product():
    # Res(f, g) = lc(f)^deg g * prod g(roots of f)
    f = UniPoly.from_roots([1, -2, Fraction(1, 3)]) * 3
    g = UniPoly([5, 0, -1, 2])
    expected = Fraction(3) ** 3 * g(1) * g(-2) * g(Fraction(1, 3))
    assert uni_resultant(f, g) == expected
    assert uni_resultant(UniPoly([1, 1]), UniPoly([0, 0, 0, 1])) == -1


def test_interpolate_recovers_polynomial():
    p = UniPoly([3, -1, Fraction(1, 2), 4])
    xs = [0, 1, 2, 5]
    assert interpolate(xs, [p(v) for v in xs], QQ) == p


def test_determinant_against_sympy(rng):
    for _ in range(20):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert determinant([[QQ(v) for v in r] for r in rows], QQ) == sympy.Matrix(rows).det()


# ---- binary forms ----------------------------------------------------------


def test_form_string_and_partials():
    F = BiForm([1, -3, 2, 0])
    assert str(F) == "X^3 - 3*X^2*Y + 2*X*Y^2"
    Fx, Fy = F.partials()
    assert Fx == BiForm([3, -6, 2])
    assert Fy == BiForm([-3, 4, 0])


@given(forms())
def test_euler_identity(F):
    Fx, Fy = F.partials()
    assert BiForm.X() * Fx + BiForm.Y() * Fy == F.scale(F.d)


@given(forms(1, 4, GF(7)))
def test_euler_identity_mod_p(F):
    Fx, Fy = F.partials()
    fld = F.field
    assert BiForm.X(fld) * Fx + BiForm.Y(fld) * Fy == F.scale(F.d)


@settings(max_examples=60)
@given(forms(1, 5), forms(1, 5))
def test_sylvester_resultant_matches_sympy_det(F, G):
    assert resultant(F, G) == sympy_sylvester_det([int(c) for c in F.coeffs], [int(c) for c in G.coeffs])


@settings(max_examples=60)
@given(forms(1, 5), forms(1, 5))
def test_form_resultant_agrees_with_euclid(F, G):
    # with both leads nonzero the form resultant is the univariate one
    if F.lead and G.lead:
        assert resultant(F, G) == uni_resultant(F.dehomogenize(), G.dehomogenize())


@settings(max_examples=60)
@given(forms(1, 4), forms(1, 4), forms(1, 3))
def test_resultant_multiplicative(F, G, H):
    assert resultant(F * G, H) == resultant(F, H) * resultant(G, H)


@settings(max_examples=40)
@given(forms(1, 3, GF(5)), forms(1, 3, GF(5)))
def test_resultant_zero_iff_common_root_brute_force(F, G):
    fld = GF(5)
    pts = [ProjPoint(fld(v)) for v in range(5)] + [ProjPoint.infinity(fld)]
    # common roots over the algebraic closure show up as a nontrivial gcd
    common = any(not F(p.x, p.y) and not G(p.x, p.y) for p in pts)
    has_gcd = form_gcd(F, G).d > 0
    assert (resultant(F, G) == 0) == has_gcd
    if common:
        assert resultant(F, G) == 0


@settings(max_examples=60)
@given(forms(2, 6))
def test_discriminant_matches_sympy(F):
    f = to_sympy(F).subs(Y, 1)
    if F.coeffs[0] == 0:
        return
    assert discriminant(F) == sympy.discriminant(f, X)


def test_discriminant_root_product_formula():
    roots = [Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(5)]
    F = BiForm.from_roots([ProjPoint(r) for r in roots])
    expected = Fraction(1)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            expected *= (roots[i] - roots[j]) ** 2
    assert discriminant(F) == expected


def test_discriminant_with_root_at_infinity():
    # X Y (X - Y): the swap fallback must still give the root-product value
    F = BiForm([0, 1, -1, 0])
    assert discriminant(F) == 1
    assert discriminant(BiForm([0, 1, 0, -1])) == 4


def test_squarefree_and_rational_roots():
    F = BiForm([0, 1, -3, 2, 0])
    assert squarefree(F)
    roots = [str(p) for p, _ in rational_roots(F)]
    assert roots == ["0", "1", "2", "inf"]
    assert not squarefree(BiForm([1, -2, 1]))
    assert rational_roots(BiForm([1, 0, 1])) == []


def test_substitute_composes_with_matrices():
    F = BiForm([2, -1, 3, 1])
    once = F.substitute(1, 2, 0, 1).substitute(3, 0, 1, 1)
    combined = F.substitute(1 * 3 + 2 * 1, 0 + 2 * 1, 1, 1)
    assert once == combined


def test_projpoint_canonical():
    assert ProjPoint(2, 4) == ProjPoint(Fraction(1, 2))
    assert ProjPoint(3, 0).is_infinity()
    with pytest.raises(ValueError):
        ProjPoint(0, 0)


def test_brute_force_roots_over_small_field():
    fld = GF(3)
    for cs in product(range(3), repeat=3):
        if not any(cs):
            continue
        F = BiForm(cs, fld)
        if F.d and not F.is_zero():
            found = {p for p, _ in rational_roots(F)}
            pts = [ProjPoint(fld(v)) for v in range(3)] + [ProjPoint.infinity(fld)]
            assert found == {p for p in pts if not F(p.x, p.y)}


def test_multimodular_resultant_matches_euclid_over_q(rng):
    from partialmaps.polyalg import _uni_resultant_euclid

    for _ in range(10):
        f = UniPoly([Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(rng.randint(2, 12))])
        g = UniPoly([Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(rng.randint(2, 12))])
        if f.degree > 0 and g.degree > 0:
            assert uni_resultant(f, g) == _uni_resultant_euclid(f, g)
