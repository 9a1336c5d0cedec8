from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List

import sympy

from core.errors import InvalidInvariant


@dataclass(frozen=True)
class IntMatrix2:
    """A PSL(2,Z) representative: determinant 1, first nonzero of (m11, m12, m21) positive."""

    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.m11 * self.m22 - self.m12 * self.m21 != 1:
            raise InvalidInvariant(f"determinant of {self.to_list()} is not 1")

    @classmethod
    def normalized(cls, m11: int, m12: int, m21: int, m22: int) -> "IntMatrix2":
        lead = next((x for x in (m11, m12, m21) if x != 0), 0)
        if lead < 0:
            m11, m12, m21, m22 = -m11, -m12, -m21, -m22
        return cls(m11, m12, m21, m22)

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2.normalized(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    def to_list(self) -> List[List[int]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]

    def __str__(self) -> str:
        return f"[[{self.m11},{self.m12}],[{self.m21},{self.m22}]]"


class IsometryClass(str, Enum):
    IDENTITY = "identity"
    ELLIPTIC_ORDER_2 = "elliptic-order-2"
    ELLIPTIC_ORDER_3 = "elliptic-order-3"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"

    @property
    def is_elliptic(self) -> bool:
        return self in (IsometryClass.ELLIPTIC_ORDER_2, IsometryClass.ELLIPTIC_ORDER_3)


@dataclass(frozen=True)
class QuadraticIrrational:
    """(p + sign·√D)/q with q > 0."""

    p: int
    q: int
    D: int
    sign: int

    def as_expr(self) -> sympy.Expr:
        return (sympy.Integer(self.p) + self.sign * sympy.sqrt(self.D)) / self.q

    def __float__(self) -> float:
        return float(self.as_expr())

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.p} {op} sqrt({self.D}))/{self.q}"


@dataclass(frozen=True)
class Axis:
    p: int
    q: int
    D: int
    center: Fraction
    radius_sq: Fraction

    @property
    def endpoints(self) -> tuple:
        return (QuadraticIrrational(self.p, self.q, self.D, -1), QuadraticIrrational(self.p, self.q, self.D, 1))

    def as_dict(self) -> dict:
        return {
            "endpoints": [str(e) for e in self.endpoints],
            "center": str(self.center),
            "radius_sq": str(self.radius_sq),
        }


@dataclass(frozen=True)
class UpperHalfPlanePoint:
    """real + i·√imag_sq, both exact rationals."""

    real: Fraction
    imag_sq: Fraction

    def as_expr(self) -> sympy.Expr:
        return sympy.Rational(self.real.numerator, self.real.denominator) + sympy.I * sympy.sqrt(
            sympy.Rational(self.imag_sq.numerator, self.imag_sq.denominator)
        )

    def as_dict(self) -> dict:
        return {"real": str(self.real), "imag_sq": str(self.imag_sq)}
