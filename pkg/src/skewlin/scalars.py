"""Exact scalars: the rational field and the quaternion division ring over it.

Rationals are plain :class:`fractions.Fraction` values.  Quaternions keep four
integer numerators over one shared positive denominator, reduced after every
operation, so equality is structural and no rounding ever happens.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Any, Union

__all__ = [
    "Quaternion",
    "ParseError",
    "DivisionRing",
    "RationalField",
    "QuaternionRing",
    "RATIONALS",
    "QUATERNIONS",
    "get_ring",
    "ring_of",
    "parse_scalar",
    "format_scalar",
    "mul",
    "invert",
    "conj",
]

Scalar = Union[Fraction, "Quaternion"]


class ParseError(ValueError):
    """Malformed scalar or document text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            raise ParseError(f"not a rational number: {value!r}") from None
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Quaternion:
    """Quaternion ``w + x i + y j + z k`` with rational coefficients.

    >>> Quaternion(0, 1, 0, 0) * Quaternion(0, 0, 1, 0)
    Quaternion('k')
    """

    __slots__ = ("_a", "_b", "_c", "_d", "_den")

    def __init__(self, w: Any = 0, x: Any = 0, y: Any = 0, z: Any = 0) -> None:
        fw, fx, fy, fz = (_as_fraction(v) for v in (w, x, y, z))
        den = fw.denominator
        for f in (fx, fy, fz):
            den = den * f.denominator // gcd(den, f.denominator)
        self._set(
            fw.numerator * (den // fw.denominator),
            fx.numerator * (den // fx.denominator),
            fy.numerator * (den // fy.denominator),
            fz.numerator * (den // fz.denominator),
            den,
        )

    def _set(self, a: int, b: int, c: int, d: int, den: int) -> None:
        g = gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        self._a, self._b, self._c, self._d, self._den = a, b, c, d, den

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> Quaternion:
        q = object.__new__(cls)
        q._set(a, b, c, d, den)
        return q

    @classmethod
    def coerce(cls, value: Any) -> Quaternion:
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, str):
            return parse_scalar(value)
        f = _as_fraction(value)
        return cls._raw(f.numerator, 0, 0, 0, f.denominator)

    # coefficient access -------------------------------------------------

    @property
    def w(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def x(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def y(self) -> Fraction:
        return Fraction(self._c, self._den)

    @property
    def z(self) -> Fraction:
        return Fraction(self._d, self._den)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def is_real(self) -> bool:
        return self._b == 0 and self._c == 0 and self._d == 0

    # arithmetic ---------------------------------------------------------

    def _other(self, other: Any) -> Quaternion | None:
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Rational)):
            f = Fraction(other)
            return Quaternion._raw(f.numerator, 0, 0, 0, f.denominator)
        return None

    def __add__(self, other: Any) -> Quaternion:
        o = self._other(other)
        if o is None:
            return NotImplemented
        n1, n2 = self._den, o._den
        return Quaternion._raw(
            self._a * n2 + o._a * n1,
            self._b * n2 + o._b * n1,
            self._c * n2 + o._c * n1,
            self._d * n2 + o._d * n1,
            n1 * n2,
        )

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __pos__(self) -> Quaternion:
        return self

    def __sub__(self, other: Any) -> Quaternion:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> Quaternion:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> Quaternion:
        o = self._other(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = o._a, o._b, o._c, o._d
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            self._den * o._den,
        )

    def __rmul__(self, other: Any) -> Quaternion:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other: Any) -> Quaternion:
        # Only rational divisors: for a quaternion divisor the side is ambiguous.
        if isinstance(other, Quaternion):
            if not other.is_real():
                raise TypeError("ambiguous quaternion division; multiply by invert() on the intended side")
            other = other.w
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        f = Fraction(other)
        if f == 0:
            raise ZeroDivisionError("division by zero")
        return Quaternion._raw(
            self._a * f.denominator,
            self._b * f.denominator,
            self._c * f.denominator,
            self._d * f.denominator,
            self._den * f.numerator,
        )

    def conj(self) -> Quaternion:
        return Quaternion._raw(self._a, -self._b, -self._c, -self._d, self._den)

    def norm_sq(self) -> Fraction:
        return Fraction(
            self._a * self._a + self._b * self._b + self._c * self._c + self._d * self._d,
            self._den * self._den,
        )

    def inverse(self) -> Quaternion:
        n = self._a * self._a + self._b * self._b + self._c * self._c + self._d * self._d
        if n == 0:
            raise ZeroDivisionError("quaternion zero has no inverse")
        den = self._den
        return Quaternion._raw(self._a * den, -self._b * den, -self._c * den, -self._d * den, n)

    # comparison & hashing -------------------------------------------------

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Quaternion):
            return (
                self._a == other._a
                and self._b == other._b
                and self._c == other._c
                and self._d == other._d
                and self._den == other._den
            )
        if isinstance(other, (int, Rational)):
            return self.is_real() and Fraction(self._a, self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_real():
            return hash(Fraction(self._a, self._den))
        return hash((self._a, self._b, self._c, self._d, self._den))

    def __bool__(self) -> bool:
        return bool(self._a or self._b or self._c or self._d)

    def __repr__(self) -> str:
        return f"Quaternion({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __reduce__(self):
        return (Quaternion, self.coefficients)


# ---------------------------------------------------------------------------
# text grammar:  term (("+"|"-") term)*,  term = [int["/"int]] [i|j|k]


_UNITS = {"i": 1, "j": 2, "k": 3}


def parse_scalar(text: str) -> Quaternion:
    """Parse the scalar grammar, e.g. ``"1+k"``, ``"-1/2 + 3/4 i"``, ``"j"``."""
    if not isinstance(text, str):
        raise ParseError(f"expected text, got {type(text).__name__}")
    coeffs = [Fraction(0)] * 4
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int | None:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        return int(text[start:pos]) if pos > start else None

    skip_ws()
    if pos == n:
        raise ParseError("empty scalar", pos)
    first = True
    while True:
        skip_ws()
        sign = 1
        if pos < n and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        term_start = pos
        num = read_int()
        coeff = Fraction(1)
        if num is not None:
            coeff = Fraction(num)
            skip_ws()
            if pos < n and text[pos] == "/":
                pos += 1
                skip_ws()
                slash_pos = pos
                den = read_int()
                if den is None:
                    raise ParseError("expected denominator after '/'", slash_pos)
                if den == 0:
                    raise ParseError("zero denominator", slash_pos)
                coeff = Fraction(num, den)
            skip_ws()
        unit = 0
        if pos < n and text[pos] in _UNITS:
            unit = _UNITS[text[pos]]
            pos += 1
        elif num is None:
            if pos < n:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            raise ParseError("expected a term", term_start)
        coeffs[unit] += sign * coeff
        first = False
        skip_ws()
        if pos == n:
            break
    return Quaternion(*coeffs)


_RATIONAL_TOKEN = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?")


def _rational_token(obj: Any) -> Fraction:
    """A JSON coefficient: ``"p"`` or ``"p/q"`` (bare integers tolerated)."""
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if isinstance(obj, str):
        m = _RATIONAL_TOKEN.fullmatch(obj)
        if m and m.group(2) != "0":
            return Fraction(int(m.group(1)), int(m.group(2) or 1))
    raise ParseError(f"expected a rational string 'p' or 'p/q', got {obj!r}")


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(value: Scalar) -> str:
    """Render a scalar in the text grammar; inverse of :func:`parse_scalar`."""
    if not isinstance(value, Quaternion):
        return _format_fraction(Fraction(value))
    parts: list[str] = []
    for coeff, unit in zip(value.coefficients, ("", "i", "j", "k")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = _format_fraction(mag)
        if unit and mag == 1:
            body = ""
        parts.append(sign + body + unit)
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out[0] == "+" else out


# ---------------------------------------------------------------------------
# division-ring descriptors


class DivisionRing:
    """Behaviour shared by every scalar domain a :class:`~skewlin.matrix.Matrix` can hold."""

    name: str
    commutative: bool

    @property
    def zero(self) -> Scalar:
        raise NotImplementedError

    @property
    def one(self) -> Scalar:
        raise NotImplementedError

    def coerce(self, value: Any) -> Scalar:
        raise NotImplementedError

    def conj(self, value: Scalar) -> Scalar:
        raise NotImplementedError

    def inverse(self, value: Scalar) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, value: Scalar) -> str:
        return format_scalar(value)

    def to_json(self, value: Scalar) -> Any:
        raise NotImplementedError

    def from_json(self, obj: Any) -> Scalar:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r}>"


class RationalField(DivisionRing):
    name = "rational"
    commutative = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Quaternion):
            if not value.is_real():
                raise TypeError(f"{value} is not rational")
            return value.w
        if isinstance(value, str):
            return self.parse(value)
        return _as_fraction(value)

    def conj(self, value: Fraction) -> Fraction:
        return value

    def inverse(self, value: Fraction) -> Fraction:
        if value == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / Fraction(value)

    def parse(self, text: str) -> Fraction:
        q = parse_scalar(text)
        if not q.is_real():
            raise ParseError(f"imaginary unit in a rational scalar: {text!r}")
        return q.w

    def to_json(self, value: Fraction) -> str:
        return _format_fraction(Fraction(value))

    def from_json(self, obj: Any) -> Fraction:
        return _rational_token(obj)


class QuaternionRing(DivisionRing):
    name = "quaternion"
    commutative = False

    @property
    def zero(self) -> Quaternion:
        return Quaternion()

    @property
    def one(self) -> Quaternion:
        return Quaternion(1)

    def coerce(self, value: Any) -> Quaternion:
        return Quaternion.coerce(value)

    def conj(self, value: Quaternion) -> Quaternion:
        return value.conj()

    def inverse(self, value: Quaternion) -> Quaternion:
        return value.inverse()

    def parse(self, text: str) -> Quaternion:
        return parse_scalar(text)

    def to_json(self, value: Quaternion) -> list[str]:
        return [_format_fraction(c) for c in value.coefficients]

    def from_json(self, obj: Any) -> Quaternion:
        # Lenient on input: the grammar string form is accepted too.
        if isinstance(obj, str):
            return parse_scalar(obj)
        if isinstance(obj, list) and len(obj) == 4:
            return Quaternion(*(_rational_token(c) for c in obj))
        raise ParseError(f"quaternion must be 4 rational strings, got {obj!r}")


RATIONALS = RationalField()
QUATERNIONS = QuaternionRing()

_RINGS = {r.name: r for r in (RATIONALS, QUATERNIONS)}


def get_ring(name: str) -> DivisionRing:
    try:
        return _RINGS[name]
    except KeyError:
        raise ParseError(f"unknown ring {name!r}; expected one of {sorted(_RINGS)}") from None


def ring_of(*values: Any) -> DivisionRing:
    """The smallest ring holding all ``values``."""
    return QUATERNIONS if any(isinstance(v, Quaternion) for v in values) else RATIONALS


def mul(a: Scalar, b: Scalar) -> Scalar:
    """Product in the written order, ``a`` then ``b``."""
    return a * b


def invert(a: Scalar) -> Scalar:
    if isinstance(a, Quaternion):
        return a.inverse()
    return RATIONALS.inverse(a)


def conj(a: Scalar) -> Scalar:
    return a.conj() if isinstance(a, Quaternion) else a
