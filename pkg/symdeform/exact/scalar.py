"""
Exact complex scalars with rational real and imaginary parts.

Text form is ``a/b+c/di`` with optional parts, e.g. ``3``, ``-1/2``, ``2i``,
``1+1i``, ``1/2-3/4i``. A bare ``i`` means one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from symdeform.errors import ParseError

ScalarLike = Union["GaussianRational", int, Fraction]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        # Fraction already keeps lowest terms with a positive denominator.
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def coerce(cls, value: object) -> "GaussianRational":
        """Convert an int, Fraction, string or GaussianRational."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value), Fraction(0))
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """
        Parse the text form.

        Raises:
            ParseError: with the character position of the problem
        """
        if not text:
            raise ParseError("Empty scalar literal", position=0)

        real = None
        imag = None
        pos = 0
        length = len(text)
        while pos < length:
            sign = 1
            if text[pos] in "+-":
                sign = -1 if text[pos] == "-" else 1
                pos += 1
            elif pos != 0:
                raise ParseError(f"Expected '+' or '-' in {text!r}", position=pos)

            value, pos = _read_rational(text, pos)
            if pos < length and text[pos] == "i":
                pos += 1
                if imag is not None:
                    raise ParseError(f"Repeated imaginary part in {text!r}", position=pos - 1)
                imag = sign * (Fraction(1) if value is None else value)
            else:
                if value is None:
                    raise ParseError(f"Expected a number in {text!r}", position=pos)
                if real is not None:
                    raise ParseError(f"Repeated real part in {text!r}", position=pos)
                real = sign * value

        return cls(real or Fraction(0), imag or Fraction(0))

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: object) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: object) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.im == 0 and o.im == 0:
            return GaussianRational(self.re * o.re, Fraction(0))
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero GaussianRational")
        if o.im == 0:
            return GaussianRational(self.re / o.re, self.im / o.re)
        d = o.norm()
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other: object) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero

    # ------------------------------------------------------------------
    # Text form
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imag = f"{self.im}i"
        if self.re == 0:
            return imag
        sign = "" if self.im < 0 else "+"
        return f"{self.re}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def _read_rational(text: str, pos: int) -> Tuple[Fraction | None, int]:
    """Read ``digits[/digits]`` starting at ``pos``; returns (None, pos) if no digits."""
    start = pos
    while pos < len(text) and "0" <= text[pos] <= "9":
        pos += 1
    if pos == start:
        return None, pos
    numerator = int(text[start:pos])
    if pos < len(text) and text[pos] == "/":
        pos += 1
        den_start = pos
        while pos < len(text) and "0" <= text[pos] <= "9":
            pos += 1
        if pos == den_start:
            raise ParseError(f"Missing denominator in {text!r}", position=pos)
        denominator = int(text[den_start:pos])
        if denominator == 0:
            raise ParseError(f"Zero denominator in {text!r}", position=den_start)
        return Fraction(numerator, denominator), pos
    return Fraction(numerator), pos


def gr(value: ScalarLike | str) -> GaussianRational:
    """Shorthand for :meth:`GaussianRational.coerce`."""
    return GaussianRational.coerce(value)
