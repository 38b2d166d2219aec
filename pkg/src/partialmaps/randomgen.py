"""Seeded random inputs shared by the property suites and the CLI ``check`` command."""
from __future__ import annotations

import random
from fractions import Fraction

from .fields import QQ, PrimeField
from .moduli import Moebius
from .polyalg import BiForm, squarefree


def random_form(rng: random.Random, d: int, bound: int = 9, field=QQ) -> BiForm:
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(d + 1)]
        if any(field(c) for c in coeffs):
            return BiForm(coeffs, field)


def random_squarefree_form(rng: random.Random, d: int, bound: int = 9, field=QQ) -> BiForm:
    while True:
        F = random_form(rng, d, bound, field)
        if squarefree(F):
            return F


def random_moebius(rng: random.Random, bound: int = 5, field=QQ) -> Moebius:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if field(a * d - b * c):
            return Moebius(a, b, c, d, field)


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_alpha(rng: random.Random, bound: int = 9) -> Fraction:
    while True:
        a = random_rational(rng, bound)
        if a not in (0, 1):
            return a


def random_points(rng: random.Random, k: int, bound: int = 9) -> list[Fraction]:
    pts: set[Fraction] = set()
    while len(pts) < k:
        pts.add(random_rational(rng, bound))
    return sorted(pts)


def random_prime_field_form(rng: random.Random, p: int, d: int) -> BiForm:
    return random_squarefree_form(rng, d, bound=p, field=PrimeField(p))
