"""Upper half-plane geometry of PSL(2,Z) elements: axes and elliptic fixed points."""

import logging
from fractions import Fraction
from typing import Union

import sympy

from core.errors import InvalidCertificate, NotElliptic, NotHyperbolic
from models.matrices import Axis, IntMatrix2, IsometryClass, UpperHalfPlanePoint
from models.words import Word
from services.modular import classify, to_matrix

logger = logging.getLogger(__name__)


def axis(w: Word) -> Axis:
    """Geodesic joining the fixed points of a hyperbolic element, roots of m21·x² + (m22 − m11)·x − m12."""
    if classify(w) != IsometryClass.HYPERBOLIC:
        raise NotHyperbolic(f"{w} is not hyperbolic")
    m = to_matrix(w)
    p, q, D = m.m11 - m.m22, 2 * m.m21, m.trace ** 2 - 4
    if q < 0:
        p, q = -p, -q
    return Axis(p=p, q=q, D=D, center=Fraction(p, q), radius_sq=Fraction(D, q * q))


def elliptic_fixed_point(w: Word) -> UpperHalfPlanePoint:
    if not classify(w).is_elliptic:
        raise NotElliptic(f"{w} is not elliptic")
    m = to_matrix(w)
    return UpperHalfPlanePoint(
        real=Fraction(m.m11 - m.m22, 2 * m.m21),
        imag_sq=Fraction(4 - m.trace ** 2, 4 * m.m21 ** 2),
    )


def axis_residual(ax: Axis, point: UpperHalfPlanePoint) -> Fraction:
    """Signed power of the point with respect to the axis semicircle; zero iff incident."""
    return (point.real - ax.center) ** 2 + point.imag_sq - ax.radius_sq


def reverser_on_axis_check(w: Word, reverser: Word, tolerance: float = 1e-9) -> bool:
    if w.conjugate(reverser) != ~w or not (reverser * reverser).is_identity or reverser.is_identity:
        raise InvalidCertificate(f"{reverser} is not an involution reversing {w}")
    residual = axis_residual(axis(w), elliptic_fixed_point(reverser))
    logger.debug("axis residual for %s under %s: %s", w, reverser, residual)
    return abs(float(residual)) < tolerance


def mobius_image(m: IntMatrix2, z: Union[sympy.Expr, int]) -> sympy.Expr:
    """Exact image (m11·z + m12)/(m21·z + m22)."""
    z = sympy.sympify(z)
    return sympy.radsimp((m.m11 * z + m.m12) / (m.m21 * z + m.m22))


def same_point(z1: sympy.Expr, z2: sympy.Expr) -> bool:
    return sympy.simplify(sympy.expand_complex(z1 - z2)) == 0
