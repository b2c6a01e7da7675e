"""Exact arithmetic in the number field Q(i, sqrt2).

Every matrix entry in this package lives in this field. An element is
stored as ``(a + b*r2 + c*i + d*i*r2) / den`` with integer numerators and a
positive common denominator, kept in lowest terms, so equality is structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = ["FieldScalar", "ZERO", "ONE", "R2", "I", "scalar_add", "scalar_mul", "scalar_inv"]

Coercible = Union["FieldScalar", int, Fraction]

_SQRT2 = math.sqrt(2.0)


class FieldScalar:
    __slots__ = ("_n", "_den", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        fa, fb, fc, fd = (Fraction(v) for v in (a, b, c, d))
        den = math.lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
        n = (
            fa.numerator * (den // fa.denominator),
            fb.numerator * (den // fb.denominator),
            fc.numerator * (den // fc.denominator),
            fd.numerator * (den // fd.denominator),
        )
        self._set(n, den)

    def _set(self, n, den):
        g = math.gcd(den, *n)
        if g != 1:
            n = tuple(v // g for v in n)
            den //= g
        self._n = n
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, n, den):
        # n: 4-tuple of ints, den: positive int; reduces to canonical form
        obj = cls.__new__(cls)
        obj._set(n, den)
        return obj

    @classmethod
    def coerce(cls, value: Coercible) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            return value
        if isinstance(value, int):
            return cls._raw((value, 0, 0, 0), 1)
        if isinstance(value, Rational):
            return cls._raw((value.numerator, 0, 0, 0), value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldScalar")

    # coordinates in the basis {1, r2, i, i*r2}
    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return self._n[1] == 0 and self._n[2] == 0 and self._n[3] == 0

    def __bool__(self) -> bool:
        return any(self._n)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldScalar):
            return self._den == other._den and self._n == other._n
        if isinstance(other, (int, Rational)):
            return self == FieldScalar.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._den))
            else:
                self._hash = hash((self._n, self._den))
        return self._hash

    def __neg__(self) -> "FieldScalar":
        return FieldScalar._raw(tuple(-v for v in self._n), self._den)

    def __pos__(self) -> "FieldScalar":
        return self

    def __add__(self, other: Coercible) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == o._den:
            den = self._den
            n = tuple(p + q for p, q in zip(self._n, o._n))
        else:
            den = self._den * o._den
            n = tuple(p * o._den + q * self._den for p, q in zip(self._n, o._n))
        return FieldScalar._raw(n, den)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Coercible) -> "FieldScalar":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._n
        e, f, g, h = o._n
        den = self._den * o._den
        if not (b or c or d) and not (f or g or h):
            return FieldScalar._raw((a * e, 0, 0, 0), den)
        # write x = A + B*i, y = E + G*i with A, B, E, G in Q(r2)
        # x*y = (AE - BG) + (AG + BE)*i, and (p + q r2)(s + t r2) = (ps + 2qt) + (pt + qs) r2
        re0 = a * e + 2 * b * f - (c * g + 2 * d * h)
        re1 = a * f + b * e - (c * h + d * g)
        im0 = a * g + 2 * b * h + c * e + 2 * d * f
        im1 = a * h + b * g + c * f + d * e
        return FieldScalar._raw((re0, re1, im0, im1), den)

    __rmul__ = __mul__

    def conj_i(self) -> "FieldScalar":
        """Galois conjugate i -> -i."""
        a, b, c, d = self._n
        return FieldScalar._raw((a, b, -c, -d), self._den)

    def conj_r2(self) -> "FieldScalar":
        """Galois conjugate r2 -> -r2."""
        a, b, c, d = self._n
        return FieldScalar._raw((a, -b, c, -d), self._den)

    def norm(self) -> Fraction:
        """Product of the four Galois conjugates; a rational number."""
        half = self * self.conj_i()
        full = half * half.conj_r2()
        assert full.is_rational()
        return full.a

    def inverse(self) -> "FieldScalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i, r2)")
        others = self.conj_i() * self.conj_r2() * self.conj_i().conj_r2()
        return others * FieldScalar.coerce(1 / self.norm())

    def __truediv__(self, other: Coercible) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_rational():
            if not o:
                raise ZeroDivisionError("division by zero in Q(i, r2)")
            p, q = o._n[0], o._den
            sign = 1 if p > 0 else -1
            return FieldScalar._raw(tuple(v * q * sign for v in self._n), self._den * abs(p))
        return self * o.inverse()

    def __rtruediv__(self, other: Coercible) -> "FieldScalar":
        return FieldScalar.coerce(other) / self

    def __pow__(self, k: int) -> "FieldScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __complex__(self) -> complex:
        a, b, c, d = (v / self._den for v in self._n)
        return complex(a + b * _SQRT2, c + d * _SQRT2)

    def __repr__(self) -> str:
        return f"FieldScalar({self})"

    def __str__(self) -> str:
        terms = []
        for coeff, unit in zip(self.coords, ("", "r2", "i", "i*r2")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if unit and mag == 1:
                body = unit
            elif unit:
                body = f"{mag}*{unit}"
            else:
                body = str(mag)
            terms.append(("-" if coeff < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text: str) -> "FieldScalar":
        """Parse the text form produced by ``str``.

        Terms are rationals optionally followed by ``*r2``, ``*i`` or ``*i*r2``;
        a bare unit such as ``-i`` means coefficient one.
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        coords = [Fraction(0)] * 4
        units = {"": 0, "r2": 1, "i": 2, "i*r2": 3, "r2*i": 3}
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse scalar {text!r}")
            sign, num, unit = m.group("sign"), m.group("num"), m.group("unit") or ""
            if num is None and not unit:
                raise ValueError(f"cannot parse scalar {text!r}")
            coeff = Fraction(num) if num is not None else Fraction(1)
            if sign == "-":
                coeff = -coeff
            coords[units[unit]] += coeff
            pos = m.end()
        return cls(*coords)


_TERM = re.compile(
    r"(?P<sign>[+-])(?P<num>\d+(?:/\d+)?)?(?:\*?(?P<unit>i\*r2|r2\*i|r2|i))?"
)

ZERO = FieldScalar()
ONE = FieldScalar(1)
R2 = FieldScalar(0, 1)
I = FieldScalar(0, 0, 1)


def scalar_add(x: Coercible, y: Coercible) -> FieldScalar:
    return FieldScalar.coerce(x) + y


def scalar_mul(x: Coercible, y: Coercible) -> FieldScalar:
    return FieldScalar.coerce(x) * y


def scalar_inv(x: Coercible) -> FieldScalar:
    return FieldScalar.coerce(x).inverse()
