"""Exact scalar fields: the rationals and the Gaussian rationals Q(i).

Rationals are plain :class:`fractions.Fraction` values. Gaussian rationals
are :class:`GaussianRational` instances that mix freely with ``int`` and
``Fraction`` operands.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GaussianRational",
    "I",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "FIELDS",
]

FIELDS = ("Q", "Qi")


class GaussianRational:
    """Element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floating point values are not exact scalars")
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def real(self) -> Fraction:
        return self._re

    @property
    def imag(self) -> Fraction:
        return self._im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o._re * o._re + o._im * o._im
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num._re / norm, num._im / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / (self ** (-n))
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


I = GaussianRational(0, 1)


def as_scalar(x):
    """Coerce ``x`` to an exact scalar; ints become Fractions, floats are rejected."""
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")


def _parse_rational(text: str, original: str) -> Fraction:
    if not _RAT.fullmatch(text):
        raise ValueError(f"malformed scalar {original!r}")
    return Fraction(text)


def parse_scalar(text: str, field: str = "Q"):
    """Parse ``"p/q"``, ``"p"``, or (over Q(i)) ``"p/q+r/s*i"``.

    Either part of a Gaussian rational may be omitted: ``"i"``, ``"-3/2*i"``,
    ``"1-i"``.
    """
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("i"):
        q = _parse_rational(s, text)
        return GaussianRational(q) if field == "Qi" else q
    if field != "Qi":
        raise ValueError(f"imaginary scalar {text!r} outside field Q")
    body = s[:-1]
    if body.endswith("*"):
        body = body[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    re_text, im_text = (body[:cut], body[cut:]) if cut > 0 else ("", body)
    re_part = _parse_rational(re_text, text) if re_text else Fraction(0)
    if im_text in ("", "+"):
        im_part = Fraction(1)
    elif im_text == "-":
        im_part = Fraction(-1)
    else:
        im_part = _parse_rational(im_text, text)
    return GaussianRational(re_part, im_part)


def _fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text form used in every JSON file."""
    if isinstance(x, GaussianRational):
        re_, im = x.real, x.imag
        if im == 0:
            return _fmt_rational(re_)
        im_txt = _fmt_rational(im) + "*i"
        if re_ == 0:
            return im_txt
        return _fmt_rational(re_) + ("" if im < 0 else "+") + im_txt
    return _fmt_rational(as_scalar(x))
