"""Exact arithmetic helpers: rationals scaled by powers of pi, rational
complex numbers, and the Pochhammer symbol.

All constants produced by the degree computations are rational multiples of
an integer power of pi, so we never evaluate pi numerically until a float
rendition is explicitly requested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def pochhammer(x, k: int) -> Fraction:
    """Rising factorial (x)_k = x(x+1)...(x+k-1), exact; (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


@dataclass(frozen=True)
class PiScaledRational:
    """A value coeff * pi**pi_power with an exact rational coeff.

    Multiplication and division combine pi powers; addition is defined only
    between values with equal pi_power (anything else would leave the exact
    domain).
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "pi_power", int(self.pi_power))

    @staticmethod
    def of(value, pi_power: int = 0) -> "PiScaledRational":
        return PiScaledRational(Fraction(value), pi_power)

    def __mul__(self, other):
        if isinstance(other, PiScaledRational):
            return PiScaledRational(self.coeff * other.coeff,
                                    self.pi_power + other.pi_power)
        return PiScaledRational(self.coeff * Fraction(other), self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScaledRational):
            return PiScaledRational(self.coeff / other.coeff,
                                    self.pi_power - other.pi_power)
        return PiScaledRational(self.coeff / Fraction(other), self.pi_power)

    def __add__(self, other):
        if not isinstance(other, PiScaledRational):
            other = PiScaledRational(Fraction(other), 0)
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_power != other.pi_power:
            raise ValueError(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms")
        return PiScaledRational(self.coeff + other.coeff, self.pi_power)

    def __sub__(self, other):
        if not isinstance(other, PiScaledRational):
            other = PiScaledRational(Fraction(other), 0)
        return self + PiScaledRational(-other.coeff, other.pi_power)

    def __pow__(self, n: int):
        return PiScaledRational(self.coeff ** n, self.pi_power * n)

    def __eq__(self, other):
        if isinstance(other, PiScaledRational):
            if self.coeff == 0 and other.coeff == 0:
                return True
            return self.coeff == other.coeff and self.pi_power == other.pi_power
        if isinstance(other, Rational):
            return self == PiScaledRational(Fraction(other), 0)
        return NotImplemented

    def __hash__(self):
        if self.coeff == 0:
            return hash(Fraction(0))
        return hash((self.coeff, self.pi_power))

    def __float__(self):
        return float(self.coeff) * math.pi ** self.pi_power

    def as_rational(self) -> Fraction:
        """The coefficient, asserting the value is pi-free."""
        if self.coeff != 0 and self.pi_power != 0:
            raise ValueError(f"value carries pi^{self.pi_power}, not rational")
        return self.coeff

    def to_json(self) -> dict:
        return {
            "num": str(self.coeff.numerator),
            "den": str(self.coeff.denominator),
            "pi_power": self.pi_power,
            "float": float(self),
        }

    def __repr__(self):
        if self.pi_power == 0:
            return f"{self.coeff}"
        return f"{self.coeff}*pi^{self.pi_power}"


@dataclass(frozen=True)
class QC:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(value) -> "QC":
        if isinstance(value, QC):
            return value
        if isinstance(value, complex):
            raise TypeError("float complex is not exact; use QC(re, im)")
        return QC(Fraction(value))

    def __add__(self, other):
        other = QC.of(other)
        return QC(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = QC.of(other)
        return QC(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        other = QC.of(other)
        return QC(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return QC(-self.re, -self.im)

    def conjugate(self) -> "QC":
        return QC(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}j)"
