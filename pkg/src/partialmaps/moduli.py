"""PGL_2 conjugation, normal forms, the degree-4 alpha family and automorphisms."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .dermap import ProjMap, build_phi
from .errors import IrrationalFixedPoints, PreconditionError
from .fields import QQ, field_of
from .polyalg import BiForm, ProjPoint, UniPoly, rational_roots, squarefree, uni_rational_roots, unsplit_part


class Moebius:
    """Invertible 2x2 matrix [[a, b], [c, d]] acting by (X, Y) -> (aX + bY, cX + dY).

    The entries are kept as given, since the invariance character depends on
    the representative; equality is up to scale.
    """

    __slots__ = ("a", "b", "c", "d", "field")

    def __init__(self, a, b, c, d, field=None):
        if field is None:
            field = next((field_of(v) for v in (a, b, c, d) if field_of(v) != QQ), QQ)
        self.field = field
        self.a, self.b, self.c, self.d = (field(v) for v in (a, b, c, d))
        if not self.det:
            raise PreconditionError("singular matrix: ad - bc = 0")

    @classmethod
    def identity(cls, field=QQ) -> Moebius:
        return cls(1, 0, 0, 1, field)

    @classmethod
    def swap(cls, field=QQ) -> Moebius:
        return cls(0, 1, 1, 0, field)

    @classmethod
    def diag(cls, u, v=1, field=None) -> Moebius:
        return cls(u, 0, 0, v, field)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def canonical(self) -> tuple:
        """Entries scaled so the first nonzero one is 1."""
        lead = next(v for v in self.entries if v)
        return tuple(v / lead for v in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __mul__(self, other: Moebius) -> Moebius:
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.field)

    def inverse(self) -> Moebius:
        a, b, c, d = self.entries
        return Moebius(d, -b, -c, a, self.field)

    def __call__(self, pt: ProjPoint) -> ProjPoint:
        return ProjPoint(self.a * pt.x + self.b * pt.y, self.c * pt.x + self.d * pt.y)

    def as_map(self) -> ProjMap:
        fld = self.field
        return ProjMap(BiForm([self.a, self.b], fld), BiForm([self.c, self.d], fld))

    def __repr__(self):
        return "Moebius(%s, %s, %s, %s)" % tuple(str(v) for v in self.entries)


def conjugate_map(phi: ProjMap, g: Moebius) -> ProjMap:
    """g^-1 o phi o g, normalized."""
    a, b, c, d = g.entries
    P = phi.P.substitute(a, b, c, d)
    Q = phi.Q.substitute(a, b, c, d)
    # g^-1 is the adjugate up to scale
    return ProjMap(P.scale(d) - Q.scale(b), Q.scale(a) - P.scale(c)).normalized()


def conjugate_form(F: BiForm, g: Moebius) -> BiForm:
    """F o g in primitive form; its map is the conjugate of phi_F by g."""
    if not squarefree(F):
        raise PreconditionError(f"{F} has multiple roots")
    return F.substitute(*g.entries).primitive()[1]


def is_automorphism(phi: ProjMap, g: Moebius) -> bool:
    return conjugate_map(phi, g) == phi


def invariance_check(F: BiForm, g: Moebius):
    """chi with F o g == chi * F, or None when F is not a relative invariant of g."""
    return F.is_proportional(F.substitute(*g.entries))


def cross_ratio_orbit(alpha) -> list:
    """The six values of alpha under relabelling 0, 1, infinity."""
    one = field_of(alpha).one
    vals = {alpha, one - alpha, one / alpha, one / (one - alpha), (alpha - one) / alpha, alpha / (alpha - one)}
    return sorted(vals, key=lambda v: ProjPoint(v).sort_key())


def moebius_to_01inf(p0: ProjPoint, p1: ProjPoint, p2: ProjPoint) -> Moebius:
    """The Moebius map sending p0, p1, p2 to 0, 1, infinity."""

    def lin(p, q):
        return p.x * q.y - p.y * q.x

    k0, k2 = lin(p1, p2), lin(p1, p0)
    return Moebius(k0 * p0.y, -k0 * p0.x, k2 * p2.y, -k2 * p2.x, p0.field)


@dataclass
class NormalForm:
    points: list
    moebius: Moebius
    anchors: tuple
    normalized_form: BiForm

    @property
    def orbits(self) -> list:
        return [cross_ratio_orbit(p) for p in self.points]


def normal_form(F: BiForm) -> NormalForm:
    """Send three fixed points of phi_F to 0, 1, infinity and report the rest.

    If 0, 1 and infinity are all roots they are kept as anchors (identity);
    otherwise the roots are ordered affine-ascending with infinity last and the
    first three are used.
    """
    if F.d < 3:
        raise PreconditionError("normal form needs d >= 3")
    if not squarefree(F):
        raise PreconditionError(f"{F} has multiple roots")
    roots = [p for p, _ in rational_roots(F)]
    if len(roots) < F.d:
        raise IrrationalFixedPoints(unsplit_part(F))
    fld = F.field
    zero, one, inf = ProjPoint(fld.zero), ProjPoint(fld.one), ProjPoint.infinity(fld)
    roots.sort(key=ProjPoint.sort_key)
    if {zero, one, inf} <= set(roots):
        anchors = (zero, one, inf)
    else:
        anchors = tuple(roots[:3])
    h = moebius_to_01inf(*anchors)
    rest = [h(p).x for p in roots if p not in anchors]
    return NormalForm(rest, h, anchors, conjugate_form(F, h.inverse()))


class AlphaFamily(NamedTuple):
    alpha: object

    @classmethod
    def of(cls, alpha) -> AlphaFamily:
        if isinstance(alpha, AlphaFamily):
            return alpha
        fld = field_of(alpha)
        alpha = fld(alpha)
        if alpha == fld.zero or alpha == fld.one:
            raise PreconditionError("alpha must avoid 0 and 1")
        return cls(alpha)


def alpha_family_form(alpha):
    """The form X Y (X - Y)(X - alpha Y) and the displayed coefficients of its map."""
    a = AlphaFamily.of(alpha).alpha
    fld = field_of(a)
    F = BiForm([0, 1, -(a + 1), a, 0], fld)
    P = BiForm([1, -2 * (a + 1), 3 * a, 0], fld)
    Q = BiForm([0, -3, 2 * (a + 1), -a], fld)
    return F, ProjMap(P, Q)


class TwoPeriodic(NamedTuple):
    quadratics: list
    points: list
    fixed_points: list


def two_periodic_points(alpha) -> TwoPeriodic:
    """The quadratics cutting out the period-2 cycles and their rational roots."""
    a = AlphaFamily.of(alpha).alpha
    fld = field_of(a)
    quads = [
        UniPoly([-a, 0, 1], fld),  # x^2 - alpha
        UniPoly([a, -2, 1], fld),  # (x-1)^2 - (1-alpha)
        UniPoly([a, -2 * a, 1], fld),  # (x-alpha)^2 - (alpha^2-alpha)
    ]
    pts = []
    for q in quads:
        pts.extend(ProjPoint(r) for r, _ in uni_rational_roots(q))
    fixed = [ProjPoint(fld.zero), ProjPoint(fld.one), ProjPoint(a), ProjPoint.infinity(fld)]
    return TwoPeriodic(quads, sorted(set(pts), key=ProjPoint.sort_key), sorted(fixed, key=ProjPoint.sort_key))


def pythagorean_alphas(max_hypotenuse: int) -> list[Fraction]:
    """All p^2/q^2 in lowest terms with p < q <= bound and q^2 - p^2 a square."""
    if max_hypotenuse < 5:
        raise PreconditionError("bound must be at least 5")
    out = []
    for q in range(2, max_hypotenuse + 1):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            r2 = q * q - p * p
            if math.isqrt(r2) ** 2 == r2:
                out.append(Fraction(p * p, q * q))
    return sorted(out)


def alpha_phi(alpha) -> ProjMap:
    """build_phi of the alpha-family form."""
    return build_phi(alpha_family_form(alpha)[0])
