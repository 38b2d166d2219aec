"""Partial-derivative maps phi_F = (F_Y, -F_X), their iterates and periodic points."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

from .errors import (
    DegenerateDegree,
    DegenerateMapWarning,
    DuplicatePoints,
    InexactDivision,
    MultipleRoots,
    NewtonDegreeWarning,
    NonScalarRatio,
    NotAMorphism,
    PreconditionError,
    SizeCapExceeded,
)
from .fields import PrimeField, scalar_str
from .polyalg import (
    BiForm,
    ProjPoint,
    UniPoly,
    discriminant,
    form_exact_div,
    form_gcd,
    gcd,
    interpolate,
    normalizing_scale,
    rational_roots,
    resultant,
    solve_linear,
    squarefree,
    uni_rational_roots,
    uni_resultant,
)

DEFAULT_SIZE_CAP = 10_000


class ProjMap:
    """Self-map of P^1, (X, Y) -> (P(X, Y), Q(X, Y)).

    Equality is projective: two maps compare equal when their coefficient
    vectors agree after :meth:`normalized`.
    """

    __slots__ = ("P", "Q")

    def __init__(self, P: BiForm, Q: BiForm):
        if P.d != Q.d:
            raise ValueError(f"coordinate degrees differ: {P.d} and {Q.d}")
        if P.field != Q.field:
            raise ValueError("coordinates live in different fields")
        if P.is_zero() and Q.is_zero():
            raise ValueError("both coordinates are zero")
        self.P = P
        self.Q = Q

    @property
    def degree(self) -> int:
        return self.P.d

    @property
    def field(self):
        return self.P.field

    def normalized(self) -> ProjMap:
        s = normalizing_scale(self.P.coeffs + self.Q.coeffs, self.field)
        return ProjMap(self.P.scale(s), self.Q.scale(s))

    def reduced(self) -> ProjMap:
        """Cancel the common factor of the coordinates, then normalize."""
        g = form_gcd(self.P, self.Q)
        if g.d == 0:
            return self.normalized()
        return ProjMap(form_exact_div(self.P, g), form_exact_div(self.Q, g)).normalized()

    def key(self) -> tuple:
        n = self.normalized()
        return (n.P.d, n.P.coeffs, n.Q.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def resultant(self):
        return resultant(self.P, self.Q)

    def is_morphism(self) -> bool:
        return form_gcd(self.P, self.Q).d == 0

    def check_morphism(self) -> ProjMap:
        if not self.is_morphism():
            raise NotAMorphism(f"coordinates of {self} share a root")
        return self

    def is_identity(self) -> bool:
        X, Y = BiForm.X(self.field), BiForm.Y(self.field)
        return self == ProjMap(X, Y)

    def __call__(self, pt: ProjPoint) -> ProjPoint:
        return ProjPoint(self.P(pt.x, pt.y), self.Q(pt.x, pt.y))

    def compose(self, inner: ProjMap) -> ProjMap:
        """self o inner."""
        return ProjMap(self.P(inner.P, inner.Q), self.Q(inner.P, inner.Q))

    def swap_conjugate(self) -> ProjMap:
        """s o phi o s for the swap s(X, Y) = (Y, X)."""
        return ProjMap(self.Q.swap(), self.P.swap())

    def affine(self) -> AffineMap:
        return AffineMap(self.P.dehomogenize(), self.Q.dehomogenize())

    def fixed_point_form(self) -> BiForm:
        return fixed_point_form(self)

    def __repr__(self):
        return f"ProjMap({self.P!r}, {self.Q!r})"

    def __str__(self):
        return f"({self.P}, {self.Q})"


class AffineMap:
    """Rational function num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = UniPoly.constant(1, den.field)
        else:
            g = gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
        inv = den.field.one / den.lc
        self.num = num * inv
        self.den = den * inv

    @classmethod
    def polynomial(cls, p: UniPoly) -> AffineMap:
        return cls(p, UniPoly.constant(1, p.field))

    @property
    def field(self):
        return self.den.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("pole")
        return self.num(x) / d

    def image(self, pt: ProjPoint) -> ProjPoint:
        return self.to_projmap()(pt)

    def derivative(self) -> AffineMap:
        n, d = self.num, self.den
        return AffineMap(n.derivative() * d - n * d.derivative(), d * d)

    def __sub__(self, other):
        if isinstance(other, UniPoly):
            other = AffineMap.polynomial(other)
        return AffineMap(self.num * other.den - other.num * self.den, self.den * other.den)

    def compose(self, inner: AffineMap) -> AffineMap:
        return AffineMap.from_projmap(self.to_projmap().compose(inner.to_projmap()))

    def to_projmap(self) -> ProjMap:
        D = self.degree
        return ProjMap(BiForm.from_dehom(self.num, D), BiForm.from_dehom(self.den, D)).normalized()

    @classmethod
    def from_projmap(cls, phi: ProjMap) -> AffineMap:
        return cls(phi.P.dehomogenize(), phi.Q.dehomogenize())

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"AffineMap({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _require_valid_form(F: BiForm):
    if F.d < 2:
        raise PreconditionError(f"need degree d >= 2, got {F.d}")
    if not squarefree(F):
        raise MultipleRoots(f"{F} has multiple roots")


def _char_divides(field, d: int) -> bool:
    return isinstance(field, PrimeField) and d % field.p == 0


def build_phi(F: BiForm) -> ProjMap:
    """The normalized map (F_Y, -F_X)."""
    _require_valid_form(F)
    Fx, Fy = F.partials()
    if _char_divides(F.field, F.d):
        warnings.warn(
            f"degenerate: identity (characteristic {F.field.p} divides {F.d})",
            DegenerateMapWarning,
            stacklevel=2,
        )
        return ProjMap(Fy, -Fx).reduced()
    return ProjMap(Fy, -Fx).normalized()


def affine_form(F: BiForm) -> AffineMap:
    """x - d f(x)/f'(x) for the dehomogenization f of F."""
    _require_valid_form(F)
    f = F.dehomogenize()
    fp = f.derivative()
    x = UniPoly.x(F.field)
    return AffineMap(x * fp - f * F.d, fp)


def fixed_point_form(phi: ProjMap) -> BiForm:
    """Y*P - X*Q, whose roots are the fixed points of phi."""
    fld = phi.field
    return BiForm.Y(fld) * phi.P - BiForm.X(fld) * phi.Q


def res_disc_check(F: BiForm):
    """Return (Res(F_Y, -F_X), Disc(F), whether the two satisfy the identity)."""
    _require_valid_form(F)
    d = F.d
    Fx, Fy = F.partials()
    res = resultant(Fy, -Fx)
    disc = discriminant(F)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    rhs = F.field(sign * d ** (d - 2)) * disc
    return res, disc, res == rhs


def _check_cap(degree: int, cap: int):
    if degree + 1 > cap:
        raise SizeCapExceeded(degree, cap)


def iterate(phi: ProjMap, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> ProjMap:
    """phi^n = phi(phi^(n-1)), normalized at each step."""
    if n < 1:
        raise PreconditionError("n must be positive")
    _check_cap(phi.degree ** n, size_cap)
    out = phi.normalized()
    for _ in range(n - 1):
        out = phi.compose(out).normalized()
    return out


def orbit(phi: ProjMap, pt: ProjPoint, n: int) -> list[ProjPoint]:
    """[pt, phi(pt), ..., phi^n(pt)]."""
    out = [pt]
    for _ in range(n):
        out.append(phi(out[-1]))
    return out


def local_derivative(phi: ProjMap, pt: ProjPoint):
    """Derivative of phi at pt in the standard charts of pt and phi(pt).

    Affine points use the coordinate x = X/Y, infinity uses w = Y/X.
    """
    image = phi(pt)
    if pt.is_infinity():
        P, Q = phi.P.dehomogenize_x(), phi.Q.dehomogenize_x()
        t0 = phi.field.zero
    else:
        P, Q = phi.P.dehomogenize(), phi.Q.dehomogenize()
        t0 = pt.x
    num, den = (Q, P) if image.is_infinity() else (P, Q)
    dv = den(t0)
    return (num.derivative()(t0) * dv - num(t0) * den.derivative()(t0)) / (dv * dv)


def multiplier(phi: ProjMap, pt: ProjPoint, n: int = 1):
    """Multiplier of a point of period dividing n, by the chain rule along its orbit."""
    pts = orbit(phi, pt, n)
    if pts[-1] != pt:
        raise PreconditionError(f"{pt} is not periodic with period dividing {n}")
    lam = phi.field.one
    for p in pts[:-1]:
        lam = lam * local_derivative(phi, p)
    return lam


def infinity_multiplier(phi: ProjMap):
    """Multiplier at a fixed infinity: conjugate by the swap, differentiate at 0."""
    psi = phi.swap_conjugate()
    zero = ProjPoint(phi.field.zero)
    if psi(zero) != zero:
        raise PreconditionError("infinity is not fixed")
    return psi.affine().derivative()(phi.field.zero)


@dataclass
class PsiStep:
    """One step of the periodic-point recursion.

    ``A/B`` is the n-th iterate in affine form with ``B`` normalized,
    ``c`` is the scalar c_(n-1) = -B_n / F_X(A_(n-1), B_(n-1)), ``psi_raw``
    satisfies phi^n(x) - x = d*psi_raw/B exactly and ``psi`` is its monic
    normalization.
    """

    n: int
    psi: UniPoly
    psi_raw: UniPoly
    A: UniPoly
    B: UniPoly
    c: object


def psi_sequence(F: BiForm, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> list[PsiStep]:
    """Psi_1..Psi_n by the recursion on (A_k, B_k)."""
    _require_valid_form(F)
    if n < 1:
        raise PreconditionError("n must be positive")
    d = F.d
    if d == 2 and n >= 2:
        raise DegenerateDegree("dynamically trivial degree-1 map: Psi_n is refused for n >= 2")
    _check_cap(d * (d - 1) ** (n - 1), size_cap)
    fld = F.field
    Fx, Fy = F.partials()
    x = UniPoly.x(fld)
    A, B = x, UniPoly.constant(1, fld)
    psi = UniPoly((), fld)
    steps = []
    for k in range(n):
        FA = F(A, B)
        FxA = Fx(A, B)
        FyA = Fy(A, B)
        s, B_next = (-FxA).primitive()
        A_next = FyA * s
        q, r = divmod(-B_next, FxA)
        if not r.is_zero() or q.degree != 0:
            raise NonScalarRatio(f"c_{k} is not a scalar")
        c = q.lc
        num = (FA - psi * FxA) * c
        quo, rem = divmod(num, B)
        if not rem.is_zero():
            raise InexactDivision(f"B_{k} does not divide the numerator of Psi_{k + 1}")
        direct = (A_next - x * B_next) * (fld.one / fld(d))
        if quo != direct:
            raise InexactDivision(f"Psi_{k + 1} disagrees with the iterate")
        psi, A, B = quo, A_next, B_next
        steps.append(PsiStep(k + 1, psi.monic(), psi, A, B, c))
    return steps


def multiplier_product_formula(F: BiForm, x0, n: int):
    """prod_{i<n} (1 - d + d f f''/f'^2) along the affine orbit of x0.

    Returns None when the orbit leaves the affine line or meets a critical
    point of f, where the formula does not apply.
    """
    fld = F.field
    d = fld(F.d)
    f = F.dehomogenize()
    f1, f2 = f.derivative(), f.derivative().derivative()
    phi = affine_form(F)
    lam = fld.one
    x = fld(x0)
    for _ in range(n):
        fp = f1(x)
        if not fp:
            return None
        lam = lam * (fld.one - d + d * f(x) * f2(x) / (fp * fp))
        try:
            x = phi(x)
        except ZeroDivisionError:
            return None
    return lam


def multiplier_charpoly(psi: UniPoly, num: UniPoly, den: UniPoly) -> UniPoly:
    """Monic charpoly in t of (num/den)'(r) over the roots r of psi.

    The derivative N/D = (num' den - num den')/den^2 is left unreduced and
    both parts are reduced mod psi; den must not vanish at any root of psi.
    The charpoly is Res_x(psi(x), t*D(x) - N(x)) up to scale, interpolated
    from deg(psi) + 1 evaluations in t.
    """
    fld = psi.field
    k = psi.degree
    if k <= 0:
        return UniPoly.constant(1, fld)
    if isinstance(fld, PrimeField) and fld.p <= k:
        raise PreconditionError(f"F_{fld.p} has too few elements to interpolate a degree-{k} charpoly")
    N = (num.derivative() * den - num * den.derivative()) % psi
    D = (den * den) % psi
    ts = list(range(k + 1))
    vals = [uni_resultant(psi, D * fld(t) - N) for t in ts]
    return interpolate(ts, vals, fld).monic()


@dataclass
class PeriodicReport:
    period: int
    psi: UniPoly
    rational_points: list
    multiplier_charpoly: UniPoly
    infinity_periodic: bool
    infinity_multiplier: object = None
    c_scalars: list = dc_field(default_factory=list)
    expected_degree: int = 0

    @property
    def full_charpoly(self) -> UniPoly:
        """Charpoly over all periodic points, infinity included."""
        if not self.infinity_periodic:
            return self.multiplier_charpoly
        fld = self.psi.field
        return self.multiplier_charpoly * UniPoly([-self.infinity_multiplier, 1], fld)

    @property
    def degree_ok(self) -> bool:
        return self.psi.degree == self.expected_degree


def periodic_report(F: BiForm, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> PeriodicReport:
    steps = psi_sequence(F, n, size_cap)
    last = steps[-1]
    phi = build_phi(F)
    phin = iterate(phi, n, size_cap)
    fld = F.field
    inf = ProjPoint.infinity(fld)
    inf_periodic = phin(inf) == inf
    points = []
    for r, _ in uni_rational_roots(last.psi) if last.psi.degree > 0 else []:
        p = ProjPoint(r)
        points.append((p, multiplier(phi, p, n)))
    inf_mult = None
    if inf_periodic:
        inf_mult = multiplier(phi, inf, n)
        points.append((inf, inf_mult))
    charpoly = multiplier_charpoly(last.psi, last.A, last.B)
    expected = (F.d - 1) ** n + 1 - (1 if inf_periodic else 0)
    return PeriodicReport(
        period=n,
        psi=last.psi,
        rational_points=points,
        multiplier_charpoly=charpoly,
        infinity_periodic=inf_periodic,
        infinity_multiplier=inf_mult,
        c_scalars=[s.c for s in steps],
        expected_degree=expected,
    )


def modified_newton(f: UniPoly, r) -> AffineMap:
    """x - r f(x)/f'(x) in lowest terms."""
    fld = f.field
    r = fld(r)
    if not r:
        raise PreconditionError("r must be nonzero")
    if f.degree < 2:
        raise PreconditionError("need deg f >= 2")
    if not gcd(f, f.derivative()).is_constant():
        raise MultipleRoots(f"{f} is not squarefree")
    if r == fld(f.degree):
        warnings.warn("r equals degree: infinity is not fixed", NewtonDegreeWarning, stacklevel=2)
    fp = f.derivative()
    return AffineMap(UniPoly.x(fld) * fp - f * r, fp)


def newton_infinity_multiplier(f: UniPoly, r):
    """deg f / (deg f - r)."""
    fld = f.field
    k = fld(f.degree)
    r = fld(r)
    if k == r:
        raise PreconditionError("infinity is not fixed when r equals deg f")
    return k / (k - r)


def reconstruct(points, r):
    """The map with the given fixed points, multiplier 1 - r at each affine one.

    Returns ``(F, phi)`` with F a form in the phi_F case (r equal to the number
    of points) and ``(f, phi)`` with f the monic affine root polynomial in the
    modified Newton case, where infinity must be among the points.
    """
    points = list(points)
    if len(points) < 2:
        raise PreconditionError("need at least two fixed points")
    if len(set(points)) != len(points):
        raise DuplicatePoints("duplicate points")
    fld = points[0].field
    r = fld(r)
    if not r:
        raise PreconditionError("r must be nonzero")
    affine = [p.x for p in points if not p.is_infinity()]
    has_inf = len(affine) < len(points)
    if r == fld(len(points)):
        F = BiForm.from_roots(points, fld)
        return F, build_phi(F)
    if not has_inf:
        raise PreconditionError(f"without infinity r must equal the number of points ({len(points)})")
    k = len(affine)
    if r == fld(k):
        raise PreconditionError(f"multiplier at infinity {k}/({k}-{scalar_str(r)}) is undefined")
    f = UniPoly.from_roots(affine, fld)
    # The multiplier condition 1 - r f'(x_i)/Q(x_i) = 1 - r pins Q at the k
    # distinct roots; the Vandermonde system has a unique solution.
    fp = f.derivative()
    rows = [[a ** j for j in range(k)] for a in affine]
    Q = UniPoly(solve_linear(rows, [fp(a) for a in affine], fld), fld)
    amap = AffineMap(UniPoly.x(fld) * Q - f * r, Q)
    return f, amap.to_projmap()


@dataclass
class FixedPointData:
    """Rational fixed points with multipliers, plus the affine multiplier charpoly."""

    points: list
    charpoly: UniPoly
    infinity_multiplier: object
    fully_rational: bool

    def relation_sum(self):
        """sum 1/(1 - lambda) over all fixed points; None unless all are rational."""
        if not self.fully_rational:
            return None
        fld = self.charpoly.field
        return sum((fld.one / (fld.one - lam) for _, lam in self.points), fld.zero)


def fixed_point_data(phi: ProjMap) -> FixedPointData:
    fpf = fixed_point_form(phi)
    roots = rational_roots(fpf)
    pts = [(p, multiplier(phi, p)) for p, _ in roots]
    inf_mult = next((lam for p, lam in pts if p.is_infinity()), None)
    affine = fpf.dehomogenize().monic()
    charpoly = multiplier_charpoly(affine, phi.P.dehomogenize(), phi.Q.dehomogenize())
    total = sum(k for _, k in roots)
    simple = all(k == 1 for _, k in roots)
    return FixedPointData(pts, charpoly, inf_mult, total == fpf.d and simple)
