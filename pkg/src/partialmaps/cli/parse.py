"""Parser for polynomial expressions such as ``X^3*Y - 3*X^2*Y^2 + 2*X*Y^3``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..fields import QQ
from ..polyalg import BiForm, ProjPoint, UniPoly


class PolyParseError(ValueError):
    def __init__(self, msg: str, src: str = "", pos: int | None = None):
        if pos is not None:
            msg = f"{msg} at position {pos}: {src!r}"
        super().__init__(msg)
        self.pos = pos


@dataclass(frozen=True)
class PolyExpr:
    source: str
    parsed: object


class _Parser:
    def __init__(self, src: str, variables: tuple[str, ...]):
        self.src = src.replace("−", "-")
        self.vars = variables
        self.i = 0

    def error(self, msg):
        raise PolyParseError(msg, self.src, self.i)

    def peek(self) -> str:
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1
        return self.src[self.i] if self.i < len(self.src) else ""

    def integer(self) -> int:
        self.peek()
        start = self.i
        while self.i < len(self.src) and self.src[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.src[start:self.i])

    def term(self):
        """Returns (coefficient, exponents, source text)."""
        start = self.i
        coeff = Fraction(1)
        exps = [0] * len(self.vars)
        seen_factor = False
        if self.peek().isdigit():
            coeff = Fraction(self.integer())
            if self.peek() == "/":
                self.i += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                coeff /= den
            seen_factor = True
        while True:
            ch = self.peek()
            if ch == "*":
                if not seen_factor:
                    self.error("unexpected '*'")
                self.i += 1
                ch = self.peek()
                if ch not in self.vars:
                    self.error(f"expected one of {', '.join(self.vars)} after '*'")
            if ch in self.vars:
                self.i += 1
                e = 1
                if self.peek() == "^":
                    self.i += 1
                    e = self.integer()
                exps[self.vars.index(ch)] += e
                seen_factor = True
                continue
            if ch.isalpha():
                self.error(f"unknown variable {ch!r}")
            break
        if not seen_factor:
            self.error("expected a term")
        return coeff, tuple(exps), self.src[start:self.i].strip()

    def parse(self):
        terms = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        while True:
            c, e, text = self.term()
            terms.append((sign * c, e, text))
            ch = self.peek()
            if not ch:
                return terms
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.i += 1


def parse_poly(src: str, mode: str = "homogeneous", field=QQ) -> PolyExpr:
    """Parse ``src`` into a BiForm (mode "homogeneous") or UniPoly (mode "affine")."""
    if not src or not src.strip():
        raise PolyParseError("empty input")
    variables = ("X", "Y") if mode == "homogeneous" else ("x",)
    terms = _Parser(src, variables).parse()
    if mode == "homogeneous":
        d = sum(terms[0][1])
        for _, e, text in terms:
            if sum(e) != d:
                raise PolyParseError(f"not homogeneous: term {text!r} has degree {sum(e)}, expected {d}")
        coeffs = [field.zero] * (d + 1)
        for c, (i, _), _ in terms:
            coeffs[d - i] += field(c)
        if not any(coeffs):
            raise PolyParseError("zero polynomial")
        return PolyExpr(src, BiForm(coeffs, field))
    deg = max(e[0] for _, e, _ in terms)
    coeffs = [field.zero] * (deg + 1)
    for c, (i,), _ in terms:
        coeffs[i] += field(c)
    poly = UniPoly(coeffs, field)
    if poly.is_zero():
        raise PolyParseError("zero polynomial")
    return PolyExpr(src, poly)


def parse_scalar(text: str, field=QQ):
    try:
        return field(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad scalar {text!r}") from exc


def parse_scalars(text: str, field=QQ, count: int | None = None) -> list:
    vals = [parse_scalar(t, field) for t in text.split(",")]
    if count is not None and len(vals) != count:
        raise PolyParseError(f"expected {count} comma-separated values, got {len(vals)}")
    return vals


def parse_point(text: str, field=QQ) -> ProjPoint:
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo"):
        return ProjPoint.infinity(field)
    return ProjPoint(parse_scalar(t, field))
