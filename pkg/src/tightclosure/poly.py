"""Sparse multivariate polynomials over an exact field.

A monomial is a tuple of non-negative exponents, one per ambient variable.
A :class:`Polynomial` maps monomials to nonzero field elements; terms print
in graded reverse lexicographic order with ``x > y > z``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import FieldMismatchError, NonHomogeneousError, ParseError
from .fields import QQ, Field

XYZ = ("x", "y", "z")


# -- monomials ---------------------------------------------------------------

def grevlex_key(m: tuple) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(m),) + tuple(-e for e in reversed(m))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(i + j for i, j in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(i - j for i, j in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True when ``a`` divides ``b``."""
    return all(i <= j for i, j in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(i, j) for i, j in zip(a, b))


def monomials_of_degree(nvars: int, d: int):
    """All exponent vectors of total degree d, largest grevlex first."""
    if d < 0:
        return []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    if nvars == 0:
        return [()] if d == 0 else []
    rec((), d, nvars)
    out.sort(key=grevlex_key, reverse=True)
    return out


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial; ``terms`` must not be mutated by callers."""

    __slots__ = ("terms", "field", "variables", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None, field: Field = QQ,
                 variables: Sequence[str] = XYZ):
        self.field = field
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for variables {self.variables}")
            c = field.convert(c)
            if c != 0:
                prev = clean.get(mono)
                if prev is not None:
                    c = field.add(prev, c)
                    if c == 0:
                        del clean[mono]
                        continue
                clean[mono] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, field: Field, variables: tuple) -> "Polynomial":
        """Trusted constructor: terms already canonical, no zeros."""
        p = object.__new__(cls)
        p.terms = terms
        p.field = field
        p.variables = variables
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, field: Field = QQ, variables: Sequence[str] = XYZ) -> "Polynomial":
        return cls._raw({}, field, tuple(variables))

    @classmethod
    def constant(cls, c, field: Field = QQ, variables: Sequence[str] = XYZ) -> "Polynomial":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, field, variables)

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1, field: Field = QQ,
                 variables: Sequence[str] = XYZ) -> "Polynomial":
        return cls({tuple(exps): c}, field, variables)

    @classmethod
    def variable(cls, name: str, field: Field = QQ, variables: Sequence[str] = XYZ) -> "Polynomial":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls._raw({tuple(exps): field.one}, field, variables)

    def like(self, terms: dict) -> "Polynomial":
        return Polynomial._raw(terms, self.field, self.variables)

    # basic queries
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int | None:
        """Maximum total degree of the support; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_degree(self) -> int | None:
        """Degree of a homogeneous polynomial (None for zero); raises otherwise."""
        degs = {sum(m) for m in self.terms}
        if len(degs) > 1:
            raise NonHomogeneousError(f"{self} is not homogeneous")
        return degs.pop() if degs else None

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=0)

    def coefficient(self, mono: Sequence[int]):
        return self.terms.get(tuple(mono), self.field.zero)

    def sorted_terms(self):
        """(monomial, coefficient) pairs, largest grevlex first."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            return None
        m = max(self.terms, key=grevlex_key)
        return m, self.terms[m]

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.field != other.field or self.variables != other.variables:
            raise FieldMismatchError(
                f"incompatible operands: {self.field}{self.variables} vs {other.field}{other.variables}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.field, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, f.zero), c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return self.like(out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return self.like({m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        f = self.field
        c = f.convert(c)
        if c == 0:
            return self.like({})
        return self.like({m: f.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, mono: tuple, c) -> "Polynomial":
        f = self.field
        if c == 0:
            return self.like({})
        return self.like({mono_mul(m, mono): f.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        mod = f.modulus
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        if mod is None:
            out = {m: c for m, c in out.items() if c != 0}
        else:
            out = {m: c % mod for m, c in out.items() if c % mod != 0}
        return self.like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.field, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, i: int) -> "Polynomial":
        f = self.field
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                v = f.mul(f.convert(m[i]), c)
                if v != 0:
                    mm = list(m)
                    mm[i] -= 1
                    out[tuple(mm)] = v
        return self.like(out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace variable i by ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError("one image per variable required")
        result = Polynomial.zero(images[0].field, images[0].variables)
        powers: dict = {}
        for m, c in self.terms.items():
            t = Polynomial.constant(c, images[0].field, images[0].variables)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    t = t * powers[key]
            result = result + t
        return result

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.field == other.field and self.variables == other.variables
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.field, self.variables)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.variables, frozenset(self.terms.items())))
        return self._hash

    # printing
    def _format_monomial(self, m) -> str:
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = self.field.modulus is None and c < 0
            a = -c if neg else c
            mono = self._format_monomial(m)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {self.field!r})"


def total_degree(p: Polynomial) -> int | None:
    return p.total_degree()


# -- parsing -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, field: Field, variables: tuple):
        self.text = text
        self.pos = 0
        self.field = field
        self.variables = variables

    def error(self, msg, pos=None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        if not self.text.strip():
            self.error("empty expression")
        p = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*" and not self.text.startswith("**", self.pos):
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        self.skip()
        if self.text.startswith("^", self.pos) or self.text.startswith("**", self.pos):
            self.pos += 1 if self.text[self.pos] == "^" else 2
            base = base ** self.integer()
        return base

    def atom(self) -> Polynomial:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.integer()
                if den == 0:
                    self.error("division by zero", den_pos)
                value = Fraction(num, den)
            else:
                value = num
            try:
                return Polynomial.constant(value, self.field, self.variables)
            except ZeroDivisionError:
                self.error("denominator vanishes in the coefficient field")
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.variables:
                self.error(f"unknown variable {name!r}", start)
            return Polynomial.variable(name, self.field, self.variables)
        self.error(f"unexpected character {ch!r}")


def parse_polynomial(text: str, field: Field = QQ, variables: Sequence[str] = XYZ) -> Polynomial:
    """Parse ``text`` such as ``"x^3+y^3+z^3"``.

    Integer coefficients, ``+ - *``, ``^`` (or ``**``) powers and parentheses
    are accepted; ``a/b`` between integer literals gives a rational
    coefficient.  Raises :class:`ParseError` carrying the offending position.
    """
    return _Parser(text, field, tuple(variables)).parse()


# -- Laurent elements for the Cech model ---------------------------------------

class LaurentElement:
    """Element of R localized at xy, in z-reduced form.

    Keys are ``(a, b, c)`` meaning ``x^a y^b z^c`` with ``0 <= c < delta``;
    ``a`` and ``b`` may be negative.
    """

    __slots__ = ("terms", "field", "delta")

    def __init__(self, terms: Mapping[tuple, object], field: Field, delta: int):
        clean = {}
        for (a, b, c), v in terms.items():
            if not 0 <= c < delta:
                raise ValueError(f"z exponent {c} outside [0, {delta - 1}]")
            v = field.convert(v)
            if v != 0:
                clean[(int(a), int(b), int(c))] = v
        self.terms = clean
        self.field = field
        self.delta = delta

    @classmethod
    def from_polynomial(cls, p: Polynomial, delta: int, x_shift: int = 0, y_shift: int = 0):
        """``p / (x^x_shift * y^y_shift)`` for a z-reduced polynomial p in x, y, z."""
        terms = {(m[0] - x_shift, m[1] - y_shift, m[2]): c for m, c in p.terms.items()}
        return cls(terms, p.field, delta)

    def degrees(self) -> set:
        return {a + b + c for a, b, c in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        f = self.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = f.add(out.get(k, f.zero), v)
        return LaurentElement(out, f, self.delta)

    def scale(self, c) -> "LaurentElement":
        f = self.field
        c = f.convert(c)
        return LaurentElement({k: f.mul(c, v) for k, v in self.terms.items()}, f, self.delta)

    def __eq__(self, other):
        return isinstance(other, LaurentElement) and self.terms == other.terms and self.delta == other.delta

    def __repr__(self):
        return f"LaurentElement({self.terms!r}, delta={self.delta})"


# -- vectors in graded free modules ------------------------------------------

class ModuleVector:
    """Element of a graded free module ``sum_i S(-d_i)``.

    Entry i is homogeneous of degree ``degree - twists[i]`` or zero.
    """

    __slots__ = ("entries", "twists")

    def __init__(self, entries: Sequence[Polynomial], twists: Sequence[int] | None = None,
                 check: bool = True):
        self.entries = tuple(entries)
        if not self.entries:
            raise ValueError("empty module vector")
        self.twists = tuple(twists) if twists is not None else (0,) * len(self.entries)
        if len(self.twists) != len(self.entries):
            raise ValueError("one twist per entry required")
        first = self.entries[0]
        for e in self.entries[1:]:
            first._check(e)
        if check:
            self.degree  # validates homogeneity

    @property
    def field(self):
        return self.entries[0].field

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int | None:
        deg = None
        for e, t in zip(self.entries, self.twists):
            d = e.homogeneous_degree()
            if d is None:
                continue
            if deg is None:
                deg = d + t
            elif deg != d + t:
                raise NonHomogeneousError(f"module vector {self} is not homogeneous")
        return deg

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def dot(self, gens: Sequence[Polynomial]) -> Polynomial:
        total = Polynomial.zero(self.field, self.entries[0].variables)
        for e, g in zip(self.entries, gens):
            if e:
                total = total + e * g
        return total

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        return ModuleVector([a + b for a, b in zip(self.entries, other.entries)], self.twists, check=False)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return ModuleVector([a - b for a, b in zip(self.entries, other.entries)], self.twists, check=False)

    def __rmul__(self, c) -> "ModuleVector":
        return ModuleVector([c * e for e in self.entries], self.twists, check=False)

    __mul__ = __rmul__

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def __repr__(self):
        return f"ModuleVector({str(self)})"


def linear_combination(coeffs: Iterable[Polynomial], vectors: Sequence[ModuleVector]) -> ModuleVector:
    out = None
    for c, v in zip(coeffs, vectors):
        term = c * v
        out = term if out is None else out + term
    return out
