"""Plane curve rings R = K[x,y,z]/(F) and line-bundle cohomology on Proj R.

R is a free K[x,y]-module on 1, z, ..., z^(delta-1) once F is monic in z.
Elements are stored as z-reduced polynomials.  H^1(Y, O_Y(k)) is modelled
on the cover {x != 0}, {y != 0}: it is spanned by the monomials
x^a y^b z^c with a, b <= -1 and 0 <= c < delta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .errors import NoMonicCoordinateError, NonHomogeneousError, SingularCurveError
from .fields import Field
from .groebner import DEFAULT_MAX_PAIRS, buchberger
from .poly import LaurentElement, Polynomial, monomials_of_degree


@dataclass(frozen=True)
class HypersurfaceRing:
    F: Polynomial
    delta: int
    field: Field
    original: Polynomial
    shift: tuple = (0, 0)
    smooth: bool = True
    sop: bool = True
    _z_rule: dict = field(default=None, repr=False, compare=False)

    @property
    def genus(self) -> int:
        return (self.delta - 1) * (self.delta - 2) // 2

    @property
    def variables(self) -> tuple:
        return self.F.variables

    def require_smooth(self):
        if not self.smooth:
            raise SingularCurveError(f"{self.original} defines a singular curve")

    def transform(self, p: Polynomial) -> Polynomial:
        """Move p into the coordinates where F is monic in z."""
        a, b = self.shift
        if (a, b) == (0, 0):
            return p
        return p.substitute(_shift_images(self.field, self.variables, a, b))

    def z_reduce(self, p: Polynomial) -> Polynomial:
        """Canonical representative with z-degree below delta."""
        d = self.delta
        if all(m[2] < d for m in p.terms):
            return p
        mod = self.field.modulus
        rule = self._z_rule
        terms = dict(p.terms)
        while True:
            top = max((m[2] for m in terms), default=0)
            if top < d:
                break
            for m in [m for m in terms if m[2] == top]:
                c = terms.pop(m)
                base = (m[0], m[1], m[2] - d)
                for (a, b, e), v in rule.items():
                    k = (base[0] + a, base[1] + b, base[2] + e)
                    nv = terms.get(k, 0) + c * v
                    if mod is not None:
                        nv %= mod
                    if nv:
                        terms[k] = nv
                    else:
                        terms.pop(k, None)
        return p.like(terms)

    def to_ring(self, p: Polynomial) -> Polynomial:
        if p.field != self.field or p.variables != self.variables:
            from .errors import FieldMismatchError
            raise FieldMismatchError("polynomial and ring disagree on field or variables")
        return self.z_reduce(self.transform(p))

    def monomial_basis(self, m: int) -> list:
        """Monomials x^a y^b z^c (c < delta) of degree m: a K-basis of R_m."""
        return [Polynomial._raw({e: self.field.one}, self.field, self.variables)
                for e in monomials_of_degree(3, m) if e[2] < self.delta]


def _shift_images(field_, variables, a, b):
    x = Polynomial.variable(variables[0], field_, variables)
    y = Polynomial.variable(variables[1], field_, variables)
    z = Polynomial.variable(variables[2], field_, variables)
    return [x + z.scale(a), y + z.scale(b), z]


def _shift_candidates(field_: Field):
    yield (0, 0)
    yield (1, 0)
    yield (0, 1)
    yield (1, 1)
    limit = field_.modulus if field_.modulus is not None else 8
    for c in range(2, limit):
        yield (c, 0)
        yield (0, c)
        yield (c, c)
    for a, b in itertools.product(range(limit), repeat=2):
        yield (a, b)


def _evaluate_at(F: Polynomial, point):
    f = F.field
    total = f.zero
    for m, c in F.terms.items():
        v = c
        for e, t in zip(m, point):
            if e:
                v = f.mul(v, f.convert(t ** e))
        total = f.add(total, v)
    return total


def _is_primary_to_irrelevant(gens, max_pairs) -> bool:
    gens = [g for g in gens if g]
    if not gens:
        return False
    gb = buchberger(gens, track=False, max_pairs=max_pairs)
    nv = gens[0].nvars
    for i in range(nv):
        if not any(all(e == 0 for k, e in enumerate(mo) if k != i) for _, mo in gb.leads):
            return False
    return True


def make_ring(F: Polynomial, *, max_pairs: int = DEFAULT_MAX_PAIRS) -> HypersurfaceRing:
    """Build R = K[x,y,z]/(F) with F made monic in z.

    If the z^delta coefficient vanishes, coordinates are changed by
    x -> x + a z, y -> y + b z for the first (a, b) with F(a, b, 1) != 0;
    :meth:`HypersurfaceRing.transform` applies the same change to other
    polynomials.  Smoothness is checked by the Jacobian criterion and
    recorded, not enforced.
    """
    if F.nvars != 3:
        raise ValueError("F must be a polynomial in three variables")
    delta = F.homogeneous_degree()
    if delta is None or delta < 1:
        raise ValueError("F must be homogeneous of positive degree")
    field_ = F.field
    for a, b in _shift_candidates(field_):
        if _evaluate_at(F, (a, b, 1)) != 0:
            break
    else:
        raise NoMonicCoordinateError(f"no coordinate change makes {F} monic in z over {field_}")
    G = F if (a, b) == (0, 0) else F.substitute(_shift_images(field_, F.variables, a, b))
    lead = G.coefficient((0, 0, delta))
    G = G.scale(field_.inv(lead))
    # z^delta = -(G - z^delta)
    rule = {m: field_.neg(c) for m, c in G.terms.items() if m != (0, 0, delta)}
    jac = [G] + [G.diff(i) for i in range(3)]
    smooth = _is_primary_to_irrelevant(jac, max_pairs)
    x = Polynomial.variable(G.variables[0], field_, G.variables)
    y = Polynomial.variable(G.variables[1], field_, G.variables)
    sop = _is_primary_to_irrelevant([x, y, G], max_pairs)
    return HypersurfaceRing(F=G, delta=delta, field=field_, original=F, shift=(a, b),
                            smooth=smooth, sop=sop, _z_rule=rule)


def _binom2(n: int) -> int:
    return comb(n, 2) if n >= 2 else 0


def h0_dim(ring_or_delta, k: int) -> int:
    """dim R_k = C(k+2, 2) - C(k-delta+2, 2); zero for k < 0."""
    delta = ring_or_delta.delta if isinstance(ring_or_delta, HypersurfaceRing) else int(ring_or_delta)
    if k < 0:
        return 0
    return _binom2(k + 2) - _binom2(k - delta + 2)


def h1_dim(ring_or_delta, k: int) -> int:
    """Number of basis monomials x^a y^b z^c (a, b <= -1) of degree k."""
    delta = ring_or_delta.delta if isinstance(ring_or_delta, HypersurfaceRing) else int(ring_or_delta)
    return sum(max(0, c - k - 1) for c in range(delta))


@dataclass(frozen=True)
class CechClass:
    """Element of H^1(Y, O_Y(k)) in the monomial basis; zero is the empty map."""

    degree: int
    coeffs: dict
    field: Field
    delta: int

    def __post_init__(self):
        for (a, b, c), v in self.coeffs.items():
            if a > -1 or b > -1 or not 0 <= c < self.delta or a + b + c != self.degree:
                raise ValueError(f"({a}, {b}, {c}) is not a basis monomial of degree {self.degree}")
            if v == 0:
                raise ValueError("zero coefficient stored")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "CechClass") -> "CechClass":
        if other.degree != self.degree:
            raise ValueError("classes of different degree")
        f = self.field
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            nv = f.add(out.get(k, f.zero), v)
            if nv == 0:
                out.pop(k, None)
            else:
                out[k] = nv
        return CechClass(self.degree, out, f, self.delta)

    def scale(self, c) -> "CechClass":
        f = self.field
        c = f.convert(c)
        if c == 0:
            return CechClass(self.degree, {}, f, self.delta)
        return CechClass(self.degree, {k: f.mul(c, v) for k, v in self.coeffs.items()}, f, self.delta)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*x^{a}*y^{b}*z^{c}" for (a, b, c), v in sorted(self.coeffs.items()))


def cech_reduce(ring, u: LaurentElement, k: int) -> CechClass:
    """Class of u in (R_xy / (R_x + R_y))_k: keep the terms with a, b <= -1."""
    delta = ring.delta if isinstance(ring, HypersurfaceRing) else int(ring)
    degs = u.degrees()
    if degs and degs != {k}:
        raise NonHomogeneousError(f"Laurent element of degrees {sorted(degs)} is not of degree {k}")
    kept = {t: v for t, v in u.terms.items() if t[0] < 0 and t[1] < 0}
    return CechClass(k, kept, u.field, delta)


def cohomology_table(ring_or_delta, lo: int, hi: int) -> list:
    return [(k, h0_dim(ring_or_delta, k), h1_dim(ring_or_delta, k)) for k in range(lo, hi + 1)]
