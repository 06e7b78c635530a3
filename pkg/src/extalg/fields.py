"""Coefficient fields: exact rationals and prime fields GF(p).

Field elements are plain Python numbers. Rationals are ``fractions.Fraction``
(or ``int``, which behaves identically under arithmetic); GF(p) elements are
``int`` in ``range(p)``. All kernel code does arithmetic with the ordinary
operators and then calls :meth:`Field.reduce`, which is the identity over
the rationals and ``x % p`` over GF(p).
"""
from fractions import Fraction
import re

__all__ = [
    "Field", "Rationals", "PrimeField", "QQ", "GF", "parse_field", "format_scalar", "FieldMismatch",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class FieldMismatch(ValueError):
    """Raised when elements over different fields meet in one expression."""


class Field:
    characteristic = 0

    def reduce(self, x):
        raise NotImplementedError

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(f"cannot combine elements over {self} and {other}")


class Rationals(Field):
    characteristic = 0

    def reduce(self, x):
        return x

    def __call__(self, x):
        if isinstance(x, str):
            return _parse_rational(x)
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, float):
            raise TypeError("floating point values are not accepted; pass an int, Fraction or 'a/b'")
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1, x) if isinstance(x, int) else 1 / x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if p < 2 or p >= 2**31 or not _is_prime(p):
            raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {p}")
        self.p = p
        self.characteristic = p

    def reduce(self, x):
        return x % self.p

    def __call__(self, x):
        if isinstance(x, str):
            x = _parse_rational(x)
        if isinstance(x, float):
            raise TypeError("floating point values are not accepted")
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def parse_field(spec):
    """Parse ``"rational"`` / ``"QQ"`` or ``"fp:<prime>"`` into a field."""
    if spec is None:
        return QQ
    if isinstance(spec, Field):
        return spec
    s = str(spec).strip().lower()
    if s in ("rational", "rationals", "qq", "q"):
        return QQ
    if s.startswith("fp:") or s.startswith("gf:"):
        return PrimeField(int(s[3:]))
    raise ValueError(f"unknown field {spec!r}; use 'rational' or 'fp:<prime>'")


def _parse_rational(s):
    m = _RATIONAL_RE.match(s)
    if not m:
        raise ValueError(f"not a rational number: {s!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return num
    den = int(m.group(2))
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    q = Fraction(num, den)
    return q.numerator if q.denominator == 1 else q


def format_scalar(x):
    """Serialize a field element: integers bare, other rationals as ``"a/b"``."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return f"{x.numerator}/{x.denominator}"
    return int(x)


def _is_prime(p):
    if p < 4:
        return p >= 2
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True
