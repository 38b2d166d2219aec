"""Exact arithmetic for the partial-derivative maps (F_Y, -F_X) on P^1."""
from .dermap import (
    AffineMap,
    PeriodicReport,
    ProjMap,
    affine_form,
    build_phi,
    fixed_point_form,
    iterate,
    modified_newton,
    periodic_report,
    psi_sequence,
    reconstruct,
    res_disc_check,
)
from .fields import GF, QQ, Residue
from .lattes import EllCurve, division_polynomial, doubling_from_torsion, lattes_map
from .moduli import Moebius, conjugate_form, conjugate_map, is_automorphism, normal_form
from .polyalg import BiForm, ProjPoint, UniPoly, discriminant, gcd, rational_roots, resultant, squarefree

__all__ = [
    "AffineMap",
    "BiForm",
    "EllCurve",
    "GF",
    "Moebius",
    "PeriodicReport",
    "ProjMap",
    "ProjPoint",
    "QQ",
    "Residue",
    "UniPoly",
    "affine_form",
    "build_phi",
    "conjugate_form",
    "conjugate_map",
    "discriminant",
    "division_polynomial",
    "doubling_from_torsion",
    "fixed_point_form",
    "gcd",
    "is_automorphism",
    "iterate",
    "lattes_map",
    "modified_newton",
    "normal_form",
    "periodic_report",
    "psi_sequence",
    "rational_roots",
    "reconstruct",
    "res_disc_check",
    "resultant",
    "squarefree",
]

__version__ = "0.1.0"
