"""Exact arithmetic in Q(i)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction, "GaussRat"]


class GaussRat:
    """re + i*im with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> None:
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x: Scalar) -> GaussRat:
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Rational)):
            return cls(Fraction(x))
        if isinstance(x, complex):
            raise TypeError("refusing to coerce a float complex into Q(i)")
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(i)")

    def __add__(self, other: Scalar) -> GaussRat:
        o = GaussRat.coerce(other)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussRat:
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> GaussRat:
        o = GaussRat.coerce(other)
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> GaussRat:
        return GaussRat.coerce(other) - self

    def __mul__(self, other: Scalar) -> GaussRat:
        o = GaussRat.coerce(other)
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussRat:
        return GaussRat(self.re, -self.im)

    def inverse(self) -> GaussRat:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalar) -> GaussRat:
        return self * GaussRat.coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> GaussRat:
        return GaussRat.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> GaussRat:
        if n < 0:
            return self.inverse() ** (-n)
        out, base = GaussRat(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        try:
            o = GaussRat.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    def __repr__(self) -> str:
        return f"GaussRat({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj: dict | str | int) -> GaussRat:
        if isinstance(obj, dict):
            return cls(Fraction(obj.get("re", "0")), Fraction(obj.get("im", "0")))
        return cls(Fraction(obj))


I = GaussRat(0, 1)
ZERO = GaussRat(0)
ONE = GaussRat(1)
