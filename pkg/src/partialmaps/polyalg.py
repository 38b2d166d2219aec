"""Univariate polynomials, binary forms and their resultants over Q or F_p."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import divisors, factor_list, nextprime, Poly, Symbol
from sympy.ntheory.modular import crt

from .errors import FieldMismatch, InexactDivision, LeadingCoefficientZero
from .fields import QQ, PrimeField, Residue, field_of, scalar_str

NEG_INF = float("-inf")

# Above this size the rational-root theorem needs integer factorizations that
# are too expensive; linear factors come from a full factorization instead.
_DIVISOR_LIMIT = 10**15


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _check_same(f1, f2):
    if f1 != f2:
        raise FieldMismatch(f"cannot mix {f1!r} and {f2!r}")


class UniPoly:
    """Polynomial in one variable; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence = (), field=QQ):
        self.field = field
        self.coeffs = _strip([field(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs, field) -> UniPoly:
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = _strip(list(coeffs))
        return p

    @classmethod
    def x(cls, field=QQ) -> UniPoly:
        return cls._raw([field.zero, field.one], field)

    @classmethod
    def constant(cls, c, field=QQ) -> UniPoly:
        return cls([c], field)

    @classmethod
    def from_roots(cls, roots, field=QQ) -> UniPoly:
        out = cls.constant(1, field)
        for r in roots:
            out = out * cls([-field(r), 1], field)
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _lift(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            _check_same(self.field, other.field)
            return other
        return UniPoly([other], self.field)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.field(other)
            return UniPoly._raw([c * a for a in self.coeffs], self.field)
        _check_same(self.field, other.field)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw([], self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly._raw([self.field.one], self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = self.field.one / other.lc
        if len(rem) - 1 < db:
            return UniPoly._raw([], self.field), self
        quo = [self.field.zero] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly._raw(quo, self.field), UniPoly._raw(rem[:db], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InexactDivision(f"{self} is not divisible by {other}")
        return q

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or another polynomial."""
        if isinstance(x, UniPoly):
            acc = UniPoly._raw([], self.field)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = self.field(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (self.field.one / self.lc)

    def primitive(self):
        """Return ``(s, s*self)`` where ``s*self`` is the normalized representative."""
        s = normalizing_scale(list(reversed(self.coeffs)), self.field)
        return s, self * s

    def homogenize(self, d: int | None = None) -> BiForm:
        if d is None:
            d = max(self.degree, 0)
        return BiForm.from_dehom(self, d)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Residue)):
            return self.coeffs == UniPoly._raw([self.field(other)], self.field).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        return f"UniPoly({[scalar_str(c) for c in self.coeffs]}, {self.field!r})"

    def __str__(self):
        return format_terms([(c, (i,)) for i, c in enumerate(self.coeffs)][::-1], ("x",))

    def to_str(self, var: str = "x") -> str:
        return format_terms([(c, (i,)) for i, c in enumerate(self.coeffs)][::-1], (var,))


def format_terms(terms, names) -> str:
    """Render ``[(coeff, (exponents,)), ...]`` as ``3*X^2*Y - X*Y^2``."""
    parts = []
    for c, exps in terms:
        if not c:
            continue
        s = scalar_str(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
        )
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def normalizing_scale(coeffs: Sequence, field):
    """Scalar s such that s*coeffs is the canonical representative.

    Over Q: integer entries with gcd 1 and first nonzero entry positive.
    Over F_p: first nonzero entry equal to 1.  ``coeffs`` is scanned in order.
    """
    nz = [c for c in coeffs if c]
    if not nz:
        return field.one
    if isinstance(field, PrimeField):
        return field.one / nz[0]
    den = 1
    for c in nz:
        den = math.lcm(den, c.denominator)
    num = 0
    for c in nz:
        num = math.gcd(num, c.numerator * (den // c.denominator))
    s = Fraction(den, num)
    if nz[0] < 0:
        s = -s
    return s


class BiForm:
    """Homogeneous binary form of degree d.

    Stored through its dehomogenization ``f(x) = F(x, 1)``: the coefficient of
    x^i in ``f`` is the coefficient of X^i Y^(d-i).  ``coeffs`` exposes the
    sequence a_d, a_(d-1), ..., a_0.
    """

    __slots__ = ("d", "f")

    def __init__(self, coeffs: Sequence, field=QQ):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a form needs at least one coefficient")
        self.d = len(coeffs) - 1
        self.f = UniPoly(reversed(coeffs), field)

    @classmethod
    def from_dehom(cls, f: UniPoly, d: int) -> BiForm:
        if not f.is_zero() and f.degree > d:
            raise ValueError(f"polynomial of degree {f.degree} does not fit in degree {d}")
        F = cls.__new__(cls)
        F.d = d
        F.f = f
        return F

    @classmethod
    def X(cls, field=QQ) -> BiForm:
        return cls([1, 0], field)

    @classmethod
    def Y(cls, field=QQ) -> BiForm:
        return cls([0, 1], field)

    @classmethod
    def from_roots(cls, points, field=QQ) -> BiForm:
        """The product of (b X - a Y) over projective points (a, b)."""
        out = cls([1], field)
        for p in points:
            out = out * cls([p.y, -p.x], field)
        return out

    @property
    def field(self):
        return self.f.field

    @property
    def degree(self) -> int:
        return self.d

    @property
    def coeffs(self) -> tuple:
        return tuple(self.f[i] for i in range(self.d, -1, -1))

    def coeff(self, i: int):
        """Coefficient a_i of X^i Y^(d-i)."""
        return self.f[i]

    @property
    def lead(self):
        return self.f[self.d]

    def is_zero(self) -> bool:
        return self.f.is_zero()

    def y_multiplicity(self) -> int:
        """Multiplicity of the root at infinity (1, 0), i.e. the power of Y dividing F."""
        return self.d - self.f.degree

    def x_multiplicity(self) -> int:
        for i, c in enumerate(self.f.coeffs):
            if c:
                return i
        return self.d

    def dehomogenize(self) -> UniPoly:
        """f(x) = F(x, 1)."""
        return self.f

    def dehomogenize_x(self) -> UniPoly:
        """F(1, w) as a polynomial in w."""
        return UniPoly._raw(list(self.coeffs), self.field)

    def swap(self) -> BiForm:
        """F(Y, X)."""
        return BiForm.from_dehom(self.dehomogenize_x(), self.d)

    def partials(self) -> tuple[BiForm, BiForm]:
        if self.d == 0:
            z = BiForm.from_dehom(UniPoly._raw([], self.field), 0)
            return z, z
        fx = self.f.derivative()
        fy = UniPoly._raw([(self.d - i) * c for i, c in enumerate(self.f.coeffs)], self.field)
        return BiForm.from_dehom(fx, self.d - 1), BiForm.from_dehom(fy, self.d - 1)

    def _lift(self, other) -> BiForm:
        if isinstance(other, BiForm):
            _check_same(self.field, other.field)
            return other
        return BiForm.from_dehom(UniPoly([other], self.field), 0)

    def __add__(self, other):
        other = self._lift(other)
        if other.d != self.d:
            raise ValueError(f"cannot add forms of degree {self.d} and {other.d}")
        return BiForm.from_dehom(self.f + other.f, self.d)

    def __neg__(self):
        return BiForm.from_dehom(-self.f, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        if isinstance(other, BiForm):
            _check_same(self.field, other.field)
            return BiForm.from_dehom(self.f * other.f, self.d + other.d)
        return BiForm.from_dehom(self.f * other, self.d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return BiForm.from_dehom(self.f ** e, self.d * e)

    def scale(self, c) -> BiForm:
        return BiForm.from_dehom(self.f * c, self.d)

    def __call__(self, X, Y):
        """Evaluate at scalars, or substitute forms / polynomials for X and Y."""
        d = self.d
        if not isinstance(X, (UniPoly, BiForm)):
            X, Y = self.field(X), self.field(Y)
        xp = [X ** 0]
        yp = [Y ** 0]
        for _ in range(d):
            xp.append(xp[-1] * X)
            yp.append(yp[-1] * Y)
        acc = xp[d] * yp[0] * self.field.zero
        for i, c in enumerate(self.f.coeffs):
            if c:
                acc = acc + xp[i] * yp[d - i] * c
        return acc

    def substitute(self, a, b, c, d) -> BiForm:
        """F(aX + bY, cX + dY)."""
        fld = self.field
        L1 = BiForm([a, b], fld)
        L2 = BiForm([c, d], fld)
        return self(L1, L2)

    def primitive(self):
        s = normalizing_scale(self.coeffs, self.field)
        return s, self.scale(s)

    def is_proportional(self, other: BiForm):
        """Return lambda with other == lambda*self, or None."""
        if self.d != other.d:
            return None
        lam = None
        for a, b in zip(self.coeffs, other.coeffs):
            if a:
                r = b / a
                if lam is None:
                    lam = r
                elif r != lam:
                    return None
            elif b:
                return None
        return lam

    def __eq__(self, other):
        if isinstance(other, BiForm):
            return self.d == other.d and self.f == other.f
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.f))

    def __repr__(self):
        return f"BiForm({[scalar_str(c) for c in self.coeffs]}, {self.field!r})"

    def __str__(self):
        d = self.d
        return format_terms([(self.f[i], (i, d - i)) for i in range(d, -1, -1)], ("X", "Y"))


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^1 in canonical form: (x, 1) or (1, 0)."""

    x: object
    y: object = 1

    def __post_init__(self):
        x, y = self.x, self.y
        fld = field_of(x) if isinstance(x, Residue) else field_of(y)
        x, y = fld(x), fld(y)
        if not x and not y:
            raise ValueError("(0, 0) is not a point of P^1")
        if y:
            x, y = x / y, fld.one
        else:
            x = fld.one
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def infinity(cls, field=QQ) -> ProjPoint:
        return cls(field.one, field.zero)

    @property
    def field(self):
        return field_of(self.x)

    def is_infinity(self) -> bool:
        return not self.y

    def sort_key(self):
        if self.is_infinity():
            return (1, 0)
        v = self.x.v if isinstance(self.x, Residue) else self.x
        return (0, v)

    def __str__(self):
        return "inf" if self.is_infinity() else scalar_str(self.x)


def determinant(rows: list[list], field) -> object:
    """Exact determinant by Gaussian elimination over the field."""
    n = len(rows)
    if n == 0:
        return field.one
    m = [list(r) for r in rows]
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = field.one / pv
        for r in range(col + 1, n):
            fac = m[r][col] * inv
            if fac:
                row, prow = m[r], m[col]
                for k in range(col, n):
                    row[k] = row[k] - fac * prow[k]
    return det


def sylvester_matrix(p: Sequence, q: Sequence, field) -> list[list]:
    """Sylvester matrix of two coefficient sequences given leading-first."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([field.zero] * i + list(p) + [field.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([field.zero] * i + list(q) + [field.zero] * (size - n - 1 - i))
    return rows


def resultant(P: BiForm, Q: BiForm):
    """Resultant of two binary forms: det of the Sylvester matrix."""
    _check_same(P.field, Q.field)
    return determinant(sylvester_matrix(P.coeffs, Q.coeffs, P.field), P.field)


def _euclid_resultant_mod(a: list[int], b: list[int], p: int) -> int:
    """Res(a, b) mod p for low-to-high coefficient lists whose leads are units mod p."""
    acc = 1
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return acc * pow(b[0], m, p) % p
        if m == 0:
            return acc * pow(a[0], n, p) % p
        inv = pow(b[-1], -1, p)
        r = a[:]
        for i in range(m - n, -1, -1):
            q = r[i + n] * inv % p
            if q:
                for j in range(n + 1):
                    r[i + j] = (r[i + j] - q * b[j]) % p
        r = r[:n]
        while r and not r[-1]:
            r.pop()
        if not r:
            return 0
        k = len(r) - 1
        if m * n % 2:
            acc = -acc
        acc = acc * pow(b[-1], m - k, p) % p
        a, b = b, r


# Moduli for the multimodular resultant, primes just above 2^61, grown on demand.
_PRIMES: list[int] = []


def _prime(i: int) -> int:
    while len(_PRIMES) <= i:
        _PRIMES.append(nextprime(_PRIMES[-1] if _PRIMES else 2**61))
    return _PRIMES[i]


def _int_resultant(a: list[int], b: list[int]) -> int:
    """Exact resultant of integer polynomials via CRT over word-sized primes.

    Hadamard's bound |Res| <= |a|_2^deg b * |b|_2^deg a fixes how many
    primes are needed; primes dividing a leading coefficient are skipped.
    """
    m, n = len(a) - 1, len(b) - 1
    norm_a = math.isqrt(sum(c * c for c in a)) + 1
    norm_b = math.isqrt(sum(c * c for c in b)) + 1
    bits = n * norm_a.bit_length() + m * norm_b.bit_length() + 2
    residues, moduli, total = [], [], 0
    i = 0
    while total <= bits:
        p = _prime(i)
        i += 1
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        residues.append(_euclid_resultant_mod([c % p for c in a], [c % p for c in b], p))
        moduli.append(p)
        total += p.bit_length() - 1
    value, modulus = crt(moduli, residues)
    value, modulus = int(value), int(modulus)
    return value - modulus if value > modulus // 2 else value


def uni_resultant(a: UniPoly, b: UniPoly):
    """Resultant of univariate polynomials of their true degrees.

    Over Q the denominators are cleared and the integer resultant is found
    multimodularly; over F_p it is computed by Euclid directly.
    """
    _check_same(a.field, b.field)
    fld = a.field
    if a.is_zero() or b.is_zero():
        return fld.zero
    if fld == QQ and a.degree > 0 and b.degree > 0:
        (sa, ia), (sb, ib) = a.primitive(), b.primitive()
        res = _int_resultant([int(c) for c in ia.coeffs], [int(c) for c in ib.coeffs])
        return Fraction(res) / (sa ** b.degree * sb ** a.degree)
    return _uni_resultant_euclid(a, b)


def _uni_resultant_euclid(a: UniPoly, b: UniPoly):
    fld = a.field
    acc = fld.one
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return acc * b.lc ** m
        if m == 0:
            return acc * a.lc ** n
        r = a % b
        if r.is_zero():
            return fld.zero
        k = r.degree
        if (m * n) % 2:
            acc = -acc
        acc = acc * b.lc ** (m - k)
        a, b = b, r


def discriminant_ex(F: BiForm, fallback: bool = True):
    """Return ``(Disc(F), reduced)``.

    ``reduced`` is True only when the monomial X^i Y^j had to be divided out
    because no unimodular change of coordinates moved infinity off the roots.
    """
    d = F.d
    if F.lead:
        Fx, _ = F.partials()
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        return sign * resultant(F, Fx) / F.lead, False
    if not fallback:
        raise LeadingCoefficientZero("leading coefficient zero")
    if F.coeff(0):
        return discriminant_ex(F.swap(), fallback=False)[0], False
    fld = F.field
    candidates = range(1, d + 2) if fld.char == 0 else range(1, fld.char)
    for t in candidates:
        # (X, Y) -> (X, tX + Y) has determinant 1, so the discriminant is unchanged.
        G = F.substitute(1, 0, t, 1)
        if G.lead:
            return discriminant_ex(G, fallback=False)[0], False
    i, j = F.x_multiplicity(), F.y_multiplicity()
    core = BiForm.from_dehom(UniPoly._raw(F.f.coeffs[i:], fld), d - i - j)
    return discriminant_ex(core, fallback=False)[0], True


def discriminant(F: BiForm, fallback: bool = True):
    return discriminant_ex(F, fallback)[0]


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    _check_same(p.field, q.field)
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def form_gcd(P: BiForm, Q: BiForm) -> BiForm:
    """Greatest common divisor of two forms, up to a scalar."""
    if P.is_zero():
        return Q
    if Q.is_zero():
        return P
    k = min(P.y_multiplicity(), Q.y_multiplicity())
    g = gcd(P.f, Q.f)
    return BiForm.from_dehom(g, g.degree + k)


def form_exact_div(P: BiForm, G: BiForm) -> BiForm:
    return BiForm.from_dehom(P.f.exact_div(G.f), P.d - G.d)


def squarefree(F: BiForm) -> bool:
    if F.is_zero():
        raise ValueError("zero form")
    value, reduced = discriminant_ex(F)
    if not reduced:
        return bool(value)
    i, j = F.x_multiplicity(), F.y_multiplicity()
    return i <= 1 and j <= 1 and bool(value)


def _int_coeffs(f: UniPoly) -> list[int]:
    _, g = f.primitive()
    return [int(c) for c in g.coeffs]


def _divide_out(f: UniPoly, lin: UniPoly) -> tuple[UniPoly, int]:
    k = 0
    while True:
        q, r = divmod(f, lin)
        if not r.is_zero():
            return f, k
        f, k = q, k + 1


def _rational_root_candidates(coeffs: list[int]):
    a0, an = abs(coeffs[0]), abs(coeffs[-1])
    if a0 > _DIVISOR_LIMIT or an > _DIVISOR_LIMIT:
        return None
    cands = set()
    for p in divisors(a0):
        for q in divisors(an):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


def _linear_factor_roots(coeffs: list[int]) -> list[Fraction]:
    x = Symbol("x")
    _, factors = factor_list(Poly(list(reversed(coeffs)), x))
    roots = []
    for fac, _ in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            roots.append(Fraction(-int(b), int(a)))
    return roots


def uni_rational_roots(f: UniPoly) -> list[tuple[object, int]]:
    """Roots of f in its field with multiplicities, sorted."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    fld = f.field
    found = []
    if isinstance(fld, PrimeField):
        for r in fld.elements():
            if not f(r):
                f, k = _divide_out(f, UniPoly._raw([-r, fld.one], fld))
                found.append((r, k))
        return found
    zero_mult = 0
    while f.degree > 0 and not f[0]:
        f = UniPoly._raw(f.coeffs[1:], fld)
        zero_mult += 1
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    if f.degree >= 1:
        ic = _int_coeffs(f)
        cands = _rational_root_candidates(ic)
        if cands is None:
            cands = _linear_factor_roots(ic)
        for r in cands:
            if not f(r):
                f, k = _divide_out(f, UniPoly([-r.numerator, r.denominator], fld))
                found.append((r, k))
    return sorted(found, key=lambda t: t[0])


def rational_roots(F: BiForm) -> list[tuple[ProjPoint, int]]:
    """K-rational projective roots of F with multiplicities; infinity last."""
    if F.is_zero():
        raise ValueError("zero form")
    out = [(ProjPoint(r), k) for r, k in uni_rational_roots(F.f)] if F.f.degree > 0 else []
    m = F.y_multiplicity()
    if m:
        out.append((ProjPoint.infinity(F.field), m))
    return out


def unsplit_part(F: BiForm) -> UniPoly:
    """What remains of the dehomogenization after removing rational linear factors."""
    f = F.f
    fld = F.field
    for r, k in (uni_rational_roots(f) if f.degree > 0 else []):
        lin = UniPoly._raw([-r, fld.one], fld)
        for _ in range(k):
            f = f.exact_div(lin)
    return f


def solve_linear(rows: list[list], rhs: list, field) -> list:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = field.one / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                fac = m[r][col]
                m[r] = [a - fac * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def interpolate(xs: Sequence, ys: Sequence, field) -> UniPoly:
    """Newton divided-difference interpolation through (xs[i], ys[i])."""
    xs = [field(v) for v in xs]
    coef = [field(v) for v in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = UniPoly._raw([coef[-1]], field)
    for i in range(n - 2, -1, -1):
        out = out * UniPoly._raw([-xs[i], field.one], field) + coef[i]
    return out
