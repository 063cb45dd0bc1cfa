"""Relation-module splitting and forcing classes of candidate elements.

For generators f_1..f_n in K[x,y] the relation module over K[x,y] is free
(Hilbert-Burch) and stays free over R because R is free over K[x,y].  The
forcing class of f_0 is computed on the cover D+(x), D+(y): lift f_0 over
each chart with witnesses of x^N and y^M in the ideal, take the difference,
write it in the free relation basis and keep the Cech-nontrivial part of
each coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotPrimaryError, ResourceExhaustedError, SplittingNotEstablishedError
from .groebner import (DEFAULT_MAX_PAIRS, GroebnerBasis, SyzygyMatrix, buchberger,
                       module_coordinates, normal_form, pull_back, syzygies)
from .hypersurface import CechClass, HypersurfaceRing, cech_reduce, h1_dim
from .poly import LaurentElement, ModuleVector, Polynomial

DEFAULT_MAX_DENOMINATOR_EXP = 64


@dataclass
class IdealData:
    """Homogeneous R_+-primary generators in a plane curve ring.

    Generators are stored in ring coordinates (see
    :meth:`HypersurfaceRing.to_ring`), z-reduced.
    """

    ring: HypersurfaceRing
    generators: list
    degrees: tuple
    gb: GroebnerBasis = field(repr=False)
    max_pairs: int = DEFAULT_MAX_PAIRS
    _witness_cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def create(cls, ring: HypersurfaceRing, generators: Sequence[Polynomial], *,
               max_pairs: int = DEFAULT_MAX_PAIRS) -> "IdealData":
        if not generators:
            raise ValueError("at least one generator required")
        gens = [ring.to_ring(g) for g in generators]
        degrees = []
        for g, orig in zip(gens, generators):
            d = orig.homogeneous_degree()
            if g.is_zero() or d is None:
                raise ValueError(f"generator {orig} vanishes in R")
            if d < 1:
                raise NotPrimaryError("a unit generator makes the ideal trivial")
            degrees.append(d)
        gb = buchberger(gens + [ring.F], max_pairs=max_pairs)
        for i in range(3):
            if not any(all(e == 0 for k, e in enumerate(mo) if k != i) for _, mo in gb.leads):
                raise NotPrimaryError(
                    f"no power of {ring.variables[i]} lies in the ideal; generators are not R_+-primary")
        return cls(ring=ring, generators=gens, degrees=tuple(degrees), gb=gb, max_pairs=max_pairs)

    @property
    def n(self) -> int:
        return len(self.generators)

    def contains(self, f: Polynomial):
        """Membership of a ring-coordinate element; returns (member, witnesses)."""
        rem, qs = normal_form(f, self.gb)
        if rem:
            return False, []
        w = pull_back(qs, self.gb)[: self.n]
        return True, [self.ring.z_reduce(p) for p in w]

    def power_witness(self, var: int, start: int = 1, cap: int = DEFAULT_MAX_DENOMINATOR_EXP):
        """Least N in [start, cap] with var^N in the ideal, and witnesses h_i."""
        for N in range(start, cap + 1):
            key = (var, N)
            if key not in self._witness_cache:
                exps = [0, 0, 0]
                exps[var] = N
                p = Polynomial._raw({tuple(exps): self.ring.field.one}, self.ring.field, self.ring.variables)
                self._witness_cache[key] = self.contains(p)
            member, w = self._witness_cache[key]
            if member:
                return N, w
        raise ResourceExhaustedError(
            f"no power of {self.ring.variables[var]} up to exponent {cap} lies in the ideal")


@dataclass
class SplittingData:
    basis: SyzygyMatrix
    twists: tuple
    provenance: str = "hilbert-burch over two-variable subring"

    @property
    def dual_twists(self) -> tuple:
        """Twists a_j of F(0) = sum O(a_j); they equal the column degrees b_j."""
        return self.twists


def splitting_data(ideal: IdealData) -> SplittingData:
    """Free K[x,y] relation basis for generators lying in K[x,y]."""
    for g in ideal.generators:
        if any(m[2] for m in g.terms):
            raise SplittingNotEstablishedError(
                f"generator {g} involves z; splitting of the relation sheaf is not established")
    basis = syzygies(ideal.generators, ideal.degrees, hilbert_burch=True, max_pairs=ideal.max_pairs)
    assert sum(basis.col_twists) == sum(ideal.degrees)
    return SplittingData(basis=basis, twists=basis.col_twists)


@dataclass(frozen=True)
class ForcingClass:
    degree: int
    twists: tuple
    components: tuple
    exponents: tuple = (0, 0)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "ForcingClass") -> "ForcingClass":
        return ForcingClass(self.degree, self.twists,
                            tuple(a + b for a, b in zip(self.components, other.components)))

    def scale(self, c) -> "ForcingClass":
        return ForcingClass(self.degree, self.twists, tuple(x.scale(c) for x in self.components),
                            self.exponents)

    def __eq__(self, other):
        return (isinstance(other, ForcingClass) and self.degree == other.degree
                and self.components == other.components)

    def __hash__(self):
        return hash((self.degree, self.twists))


def class_is_zero(c: CechClass) -> bool:
    return c.is_zero()


def forcing_class(ideal: IdealData, split: SplittingData, f0: Polynomial, *,
                  max_denominator_exp: int = DEFAULT_MAX_DENOMINATOR_EXP,
                  start_exponents: tuple = (1, 1), ring_coordinates: bool = False) -> ForcingClass:
    """Components c_j in H^1(Y, O_Y(m - b_j)) of the forcing class of f0.

    ``f0`` is given in the coordinates of the original F unless
    ``ring_coordinates`` is set.  ``start_exponents`` sets where the search
    for x^N, y^M in the ideal begins; the class does not depend on it.
    """
    ring = ideal.ring
    f = f0 if ring_coordinates else ring.to_ring(f0)
    f = ring.z_reduce(f)
    m = (f0 if not ring_coordinates else f).homogeneous_degree()
    twists = split.twists
    if f.is_zero():
        return ForcingClass(m if m is not None else 0, twists,
                            tuple(CechClass(m - b if m is not None else 0, {}, ring.field, ring.delta)
                                  for b in twists))
    N, hx = ideal.power_witness(0, start_exponents[0], max_denominator_exp)
    M, hy = ideal.power_witness(1, start_exponents[1], max_denominator_exp)
    field_, variables = ring.field, ring.variables
    xN = Polynomial._raw({(N, 0, 0): field_.one}, field_, variables)
    yM = Polynomial._raw({(0, M, 0): field_.one}, field_, variables)
    # x^N y^M (g^x - g^y) = f0 (h^x y^M - h^y x^N)
    rho = [ring.z_reduce(f * (a * yM - b * xN)) for a, b in zip(hx, hy)]
    coords = module_coordinates(ModuleVector(rho, ideal.degrees, check=False), split.basis)
    comps = []
    for u, b in zip(coords, twists):
        u = ring.z_reduce(u)
        lau = LaurentElement.from_polynomial(u, ring.delta, N, M)
        comps.append(cech_reduce(ring, lau, m - b))
    return ForcingClass(m, twists, tuple(comps), (N, M))


def nontrivial_components(split: SplittingData, ring: HypersurfaceRing, m: int) -> list:
    """Indices j whose cohomology group H^1(O_Y(m - b_j)) is nonzero."""
    return [j for j, b in enumerate(split.twists) if h1_dim(ring, m - b) > 0]
