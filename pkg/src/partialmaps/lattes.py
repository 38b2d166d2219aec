"""Elliptic curves y^2 = x^3 + a x^2 + b x + c: division polynomials and Lattes maps."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .dermap import AffineMap, ProjMap, build_phi, modified_newton
from .errors import NotCMFamily, PreconditionError, RatioUndefined, SingularCurve, YFactorError
from .fields import QQ, PrimeField
from .moduli import Moebius, invariance_check, is_automorphism
from .polyalg import BiForm, UniPoly, discriminant, resultant


class EllCurve:
    """The curve y^2 = g(x) = x^3 + a x^2 + b x + c; rejects singular cubics."""

    __slots__ = ("a", "b", "c", "field", "g")

    def __init__(self, a, b, c, field=QQ):
        self.field = field
        self.a, self.b, self.c = field(a), field(b), field(c)
        self.g = UniPoly([self.c, self.b, self.a, 1], field)
        if not self.disc:
            raise SingularCurve(f"y^2 = {self.g} is singular")

    @property
    def disc(self):
        return discriminant(self.g.homogenize(3))

    @property
    def j(self):
        a, b = self.a, self.b
        c4 = 16 * a * a - 48 * b
        return c4 ** 3 / (16 * self.disc)

    def __eq__(self, other):
        return isinstance(other, EllCurve) and (self.a, self.b, self.c, self.field) == (
            other.a, other.b, other.c, other.field)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.field))

    def __repr__(self):
        return f"EllCurve({self.a}, {self.b}, {self.c})"

    def __str__(self):
        return f"y^2 = {self.g}"


class CurvePoly:
    """even(x) + y*odd(x) in K[x, y]/(y^2 - g(x))."""

    __slots__ = ("even", "odd", "curve")

    def __init__(self, even: UniPoly, odd: UniPoly, curve: EllCurve):
        self.even = even
        self.odd = odd
        self.curve = curve

    @classmethod
    def const(cls, c, curve: EllCurve) -> CurvePoly:
        return cls(UniPoly([c], curve.field), UniPoly((), curve.field), curve)

    def __add__(self, other: CurvePoly) -> CurvePoly:
        return CurvePoly(self.even + other.even, self.odd + other.odd, self.curve)

    def __neg__(self) -> CurvePoly:
        return CurvePoly(-self.even, -self.odd, self.curve)

    def __sub__(self, other: CurvePoly) -> CurvePoly:
        return self + (-other)

    def __mul__(self, other) -> CurvePoly:
        if not isinstance(other, CurvePoly):
            return CurvePoly(self.even * other, self.odd * other, self.curve)
        g = self.curve.g
        even = self.even * other.even + self.odd * other.odd * g
        odd = self.even * other.odd + self.odd * other.even
        return CurvePoly(even, odd, self.curve)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CurvePoly:
        out = CurvePoly.const(1, self.curve)
        for _ in range(e):
            out = out * self
        return out

    def div_y(self) -> CurvePoly:
        """Exact division by y: (e + y o)/y = o + y e/g."""
        return CurvePoly(self.odd, self.even.exact_div(self.curve.g), self.curve)

    def is_pure_x(self) -> bool:
        return self.odd.is_zero()

    def x_part(self) -> UniPoly:
        """The polynomial in x; the y-part must vanish."""
        if not self.is_pure_x():
            raise YFactorError(f"unexpected y-part {self.odd}")
        return self.even

    def __eq__(self, other):
        return isinstance(other, CurvePoly) and self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((self.even, self.odd))

    def __repr__(self):
        return f"CurvePoly({self.even!r}, {self.odd!r})"

    def __str__(self):
        if self.odd.is_zero():
            return str(self.even)
        if self.even.is_zero():
            return f"y*({self.odd})"
        return f"{self.even} + y*({self.odd})"


def psi3_closed_form(E: EllCurve) -> UniPoly:
    """3x^4 + 4a x^3 + 6b x^2 + 12c x + (4ac - b^2)."""
    a, b, c = E.a, E.b, E.c
    return UniPoly([4 * a * c - b * b, 12 * c, 6 * b, 4 * a, 3], E.field)


def _psi4_over_y(E: EllCurve) -> UniPoly:
    """Psi_4 / y = 2 (2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2 + (b2 b8 - b4 b6) x + b4 b8 - b6^2)."""
    b2, b4, b6 = 4 * E.a, 2 * E.b, 4 * E.c
    b8 = 4 * E.a * E.c - E.b * E.b
    inner = UniPoly([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2], E.field)
    return inner * 2


def division_polynomials(E: EllCurve, m: int) -> list[CurvePoly]:
    """[Psi_0, ..., Psi_m] for the curve."""
    if m < 0:
        raise PreconditionError("m must be nonnegative")
    fld = E.field
    zero = UniPoly((), fld)
    psi = [
        CurvePoly(zero, zero, E),
        CurvePoly.const(1, E),
        CurvePoly(zero, UniPoly([2], fld), E),
        CurvePoly(psi3_closed_form(E), zero, E),
        CurvePoly(zero, _psi4_over_y(E), E),
    ]
    for n in range(5, m + 1):
        k = n // 2
        if n % 2:
            new = psi[k + 2] * psi[k] ** 3 - psi[k - 1] * psi[k + 1] ** 3
        else:
            inner = psi[k + 2] * psi[k - 1] ** 2 - psi[k - 2] * psi[k + 1] ** 2
            new = (psi[k] * inner).div_y() * (fld.one / 2)
        psi.append(new)
    return psi[: m + 1]


def division_polynomial(E: EllCurve, m: int) -> CurvePoly:
    if m < 1:
        raise PreconditionError("m must be at least 1")
    return division_polynomials(E, m)[m]


def _lattes_parts(E: EllCurve, m: int):
    psi = division_polynomials(E, m + 1)
    x = UniPoly.x(E.field)
    sq = (psi[m] * psi[m]).x_part()
    prod = (psi[m - 1] * psi[m + 1]).x_part()
    return x * sq - prod, sq, prod


def lattes_map(E: EllCurve, m: int) -> ProjMap:
    """x -> x - Psi_(m-1) Psi_(m+1) / Psi_m^2 as a degree-m^2 map."""
    if m < 2:
        raise PreconditionError("m must be at least 2")
    num, den, _ = _lattes_parts(E, m)
    phi = AffineMap(num, den).to_projmap()
    if phi.degree != m * m:
        raise YFactorError(f"Lattes map has degree {phi.degree}, expected {m * m}")
    return phi


def doubling_formula(E: EllCurve) -> ProjMap:
    """x([2]P) from the tangent line: g'^2/(4g) - a - 2x."""
    g = E.g
    x = UniPoly.x(E.field)
    gp = g.derivative()
    num = gp * gp - (x * 2 + E.a) * g * 4
    return AffineMap(num, g * 4).to_projmap()


def doubling_from_torsion(E: EllCurve):
    """x - 3 f/f' for the monic 3-torsion polynomial f, and whether it equals [2]."""
    if E.field.char in (2, 3):
        raise PreconditionError("characteristic 2 and 3 are excluded")
    f = psi3_closed_form(E).monic()
    amap = modified_newton(f, 3)
    return amap, amap.to_projmap() == lattes_map(E, 2)


def three_torsion_by_integration(E: EllCurve) -> UniPoly:
    """An antiderivative of g with constant -(b^2 - 4ac)/12."""
    if E.field.char != 0:
        raise PreconditionError("needs characteristic 0")
    fld = E.field
    g = E.g
    C = -(E.b * E.b - 4 * E.a * E.c) / fld(12)
    return UniPoly([C] + [g[i] / fld(i + 1) for i in range(g.degree + 1)], fld)


@dataclass
class ResDiscReport:
    m: int
    disc: Fraction
    res: Fraction
    ratio: Fraction
    sign: int
    num_factors: dict
    den_factors: dict
    primes_divide: bool

    @property
    def primes(self) -> list[int]:
        return sorted(set(self.num_factors) | set(self.den_factors))


def res_disc_experiment(E: EllCurve, m: int) -> ResDiscReport:
    """Ratio Disc(Psi_(m-1) Psi_(m+1)) / Res(phi_(E,m)) with its factorization.

    The map coordinates are taken unnormalized: x Psi_m^2 - Psi_(m-1) Psi_(m+1)
    and Psi_m^2, homogenized to degree m^2.
    """
    if E.field.char != 0:
        raise PreconditionError("the experiment runs over Q")
    if m < 2:
        raise PreconditionError("m must be at least 2")
    num, den, prod = _lattes_parts(E, m)
    D = m * m
    res = resultant(BiForm.from_dehom(num, D), BiForm.from_dehom(den, D))
    disc = discriminant(prod.homogenize())
    if not res or not disc:
        raise RatioUndefined("ratio not well-defined: a side vanishes")
    ratio = disc / res
    nf = factorint(abs(ratio.numerator))
    df = factorint(ratio.denominator)
    allowed = 2 * (m - 1) * (m + 1)
    ok = all(allowed % p == 0 for p in set(nf) | set(df))
    return ResDiscReport(m, disc, res, ratio, 1 if ratio > 0 else -1, nf, df, ok)


def _cube_root_of_unity(field):
    if not isinstance(field, PrimeField) or field.p % 3 != 1:
        return None
    for v in field.elements()[2:]:
        if v ** 3 == field.one:
            return v
    return None


@dataclass
class CMReport:
    family: str
    moebius: Moebius | None
    results: list
    skipped: str | None = None


def torsion_forms(E: EllCurve) -> list[tuple[str, BiForm]]:
    """The homogenized 2-torsion cubic g and 3-torsion quartic Psi_3."""
    return [("2-torsion", E.g.homogenize(3)), ("3-torsion", psi3_closed_form(E).homogenize(4))]


def cm_automorphism_suite(E: EllCurve) -> CMReport:
    """Check the extra automorphism x -> u^2 x on the torsion-derived maps."""
    fld = E.field
    if not E.a and not E.c:
        family = "j=1728"
        g = Moebius.diag(fld(-1), fld.one)
    elif not E.a and not E.b:
        family = "j=0"
        zeta = _cube_root_of_unity(fld)
        if zeta is None:
            return CMReport(family, None, [], "skipped: no cube root of unity in field")
        g = Moebius.diag(zeta, fld.one)
    else:
        raise NotCMFamily(f"{E} is not a recognized CM family")
    results = []
    for name, F in torsion_forms(E):
        chi = invariance_check(F, g)
        results.append({
            "torsion": name,
            "form": F,
            "chi": chi,
            "automorphism": is_automorphism(build_phi(F), g),
        })
    return CMReport(family, g, results)
