"""Exact coefficient fields.

Field elements are plain Python values so that polynomial kernels stay cheap:
rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator), prime-field residues are ``int`` in ``[0, p)``.
A :class:`Field` object carries the arithmetic for its elements.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; see :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int
    modulus: int | None
    zero: object
    one: object

    def __call__(self, value):
        return self.convert(value)

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)

    def descriptor(self):
        raise NotImplementedError


class Rationals(Field):
    characteristic = 0
    modulus = None
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value) -> Fraction:
        if isinstance(value, (Integral, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot convert {value!r} to a rational")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def descriptor(self):
        return "rationals"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.characteristic = p
        self.modulus = p
        self.zero = 0
        self.one = 1

    def convert(self, value) -> int:
        p = self.modulus
        if isinstance(value, Integral):
            return int(value) % p
        if isinstance(value, Rational):
            den = int(value.denominator) % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return int(value.numerator) * pow(den, -1, p) % p
        if isinstance(value, str):
            return self.convert(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to GF({p})")

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def inv(self, a):
        if a % self.modulus == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.modulus)

    def descriptor(self):
        return {"prime": self.modulus}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc) -> Field:
    """``"rationals"`` or ``{"prime": p}`` (also accepts a bare int p)."""
    if desc in (None, "rationals", "QQ", 0):
        return QQ
    if isinstance(desc, dict) and "prime" in desc:
        return PrimeField(desc["prime"])
    if isinstance(desc, int):
        return PrimeField(desc)
    raise ValueError(f"unknown field descriptor {desc!r}")
