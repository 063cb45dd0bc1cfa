"""Buchberger's algorithm for ideals and graded submodules of free modules.

Module elements are handled internally as dicts ``{(pos, monomial): coeff}``;
ideals are the rank-one case.  Every basis keeps a transformation matrix
expressing its elements in the input generators, which gives membership
witnesses and, through Schreyer's construction, generators of the syzygy
module.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (BasisNotFreeError, NotARelationError, NotPrimaryError,
                     ResourceExhaustedError)
from .poly import (ModuleVector, Polynomial, grevlex_key, mono_div, mono_divides,
                   mono_lcm, mono_mul)

DEFAULT_MAX_PAIRS = 200_000


# -- orders ------------------------------------------------------------------

class MonomialOrder:
    """Total order on module terms ``(pos, monomial)``, given as a sort key.

    ``top``: degree (shifted by the twist of the position) first, then
    grevlex on the monomial, then lower position index wins.  For rank one
    this is plain grevlex.  ``schreyer``: compares ``t * lead_j`` in a base
    order, ties broken by position.
    """

    def __init__(self, name: str, shifts: Sequence[int] = (), base: "MonomialOrder | None" = None,
                 leads: Sequence[tuple] = ()):
        self.name = name
        self.shifts = tuple(shifts)
        self.base = base
        self.leads = tuple(leads)
        if name == "top":
            sh = self.shifts

            def key(term):
                pos, m = term
                return (sum(m) + (sh[pos] if sh else 0),) + tuple(-e for e in reversed(m)) + (-pos,)
        elif name == "schreyer":
            bkey = base.key
            ld = self.leads

            def key(term):
                pos, m = term
                lp, lm = ld[pos]
                return bkey((lp, mono_mul(m, lm))) + (-pos,)
        else:
            raise ValueError(f"unknown order {name!r}")
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


def grevlex() -> MonomialOrder:
    return MonomialOrder("top")


def term_over_position(shifts: Sequence[int]) -> MonomialOrder:
    return MonomialOrder("top", shifts)


def schreyer_order(base: MonomialOrder, leads: Sequence[tuple]) -> MonomialOrder:
    return MonomialOrder("schreyer", base=base, leads=leads)


# -- low-level vector kernels ------------------------------------------------

def _to_vec(g) -> dict:
    if isinstance(g, Polynomial):
        return {(0, m): c for m, c in g.terms.items()}
    return {(i, m): c for i, e in enumerate(g.entries) for m, c in e.terms.items()}


def _lead(vec: dict, key):
    return max(vec, key=key)


def _sub_multiple(p: dict, g: dict, mono: tuple, c, mod) -> None:
    """p -= c * mono * g, in place."""
    for (pos, m), v in g.items():
        k = (pos, mono_mul(m, mono))
        nv = p.get(k, 0) - c * v
        if mod is not None:
            nv %= mod
        if nv:
            p[k] = nv
        else:
            p.pop(k, None)


def _poly_sub_multiple(p: dict, g: dict, mono: tuple, c, mod) -> None:
    for m, v in g.items():
        k = mono_mul(m, mono)
        nv = p.get(k, 0) - c * v
        if mod is not None:
            nv %= mod
        if nv:
            p[k] = nv
        else:
            p.pop(k, None)


def _scale(vec: dict, c, mod) -> dict:
    if mod is None:
        return {k: v * c for k, v in vec.items()}
    return {k: v * c % mod for k, v in vec.items()}


def _poly_add_to(p: dict, g: dict, mod) -> None:
    for m, v in g.items():
        nv = p.get(m, 0) + v
        if mod is not None:
            nv %= mod
        if nv:
            p[m] = nv
        else:
            p.pop(m, None)


def _poly_mul(a: dict, b: dict, mod) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    if mod is None:
        return {m: c for m, c in out.items() if c != 0}
    return {m: c % mod for m, c in out.items() if c % mod}


# -- Groebner bases ----------------------------------------------------------

@dataclass
class GroebnerBasis:
    """Reduced Groebner basis with its transformation matrix.

    ``transform[k][i]`` is the coefficient of input generator i in basis
    element k, so ``element_k = sum_i transform[k][i] * input_i``.
    """

    elements: list
    leads: list
    order: MonomialOrder
    field: object
    variables: tuple
    rank: int
    twists: tuple
    inputs: list
    transform: list | None = None

    @property
    def is_ideal(self) -> bool:
        return self.rank == 1 and not isinstance(self.inputs[0] if self.inputs else None, ModuleVector)

    def _wrap(self, vec: dict):
        if self.is_ideal:
            return Polynomial._raw({m: c for (_, m), c in vec.items()}, self.field, self.variables)
        entries = [dict() for _ in range(self.rank)]
        for (pos, m), c in vec.items():
            entries[pos][m] = c
        return ModuleVector([Polynomial._raw(e, self.field, self.variables) for e in entries],
                            self.twists, check=False)

    @property
    def generators(self) -> list:
        return [self._wrap(v) for v in self.elements]

    def transformation(self) -> list:
        if self.transform is None:
            raise ValueError("basis was computed without transformation tracking")
        return [[Polynomial._raw(dict(p), self.field, self.variables) for p in row] for row in self.transform]

    def __len__(self):
        return len(self.elements)


def _prepare(generators):
    if not generators:
        raise ValueError("at least one generator required")
    g0 = generators[0]
    if isinstance(g0, Polynomial):
        field_, variables, rank, twists = g0.field, g0.variables, 1, (0,)
    else:
        field_, variables, rank, twists = g0.field, g0.entries[0].variables, g0.rank, g0.twists
    for g in generators:
        if isinstance(g, Polynomial):
            g0_ = g
            if rank != 1 or isinstance(g0, ModuleVector):
                raise ValueError("mixed polynomial and module generators")
        else:
            g0_ = g.entries[0]
            if g.rank != rank:
                raise ValueError("module generators of different rank")
        if g0_.field != field_ or g0_.variables != variables:
            from .errors import FieldMismatchError
            raise FieldMismatchError("generators over different rings")
    return field_, variables, rank, twists


def _term_degree(term, twists):
    pos, m = term
    return sum(m) + twists[pos]


def buchberger(generators: Sequence, order: MonomialOrder | None = None, *,
               max_pairs: int = DEFAULT_MAX_PAIRS, track: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal or submodule spanned by ``generators``.

    Pairs are processed by the normal strategy (smallest lcm first).  Raises
    :class:`ResourceExhaustedError` after ``max_pairs`` S-pair reductions.
    """
    generators = list(generators)
    field_, variables, rank, twists = _prepare(generators)
    order = order or term_over_position(twists)
    key = order.key
    mod = field_.modulus
    ngens = len(generators)
    zero_row = lambda: [dict() for _ in range(ngens)]  # noqa: E731

    elems: list = []
    leads: list = []
    trs: list = []

    def add(vec, tr):
        lt = _lead(vec, key)
        inv = field_.inv(vec[lt])
        vec = _scale(vec, inv, mod)
        if tr is not None:
            tr = [_scale(p, inv, mod) for p in tr]
        elems.append(vec)
        leads.append(lt)
        trs.append(tr)
        return len(elems) - 1

    heap: list = []
    counter = itertools.count()

    def push_pairs(j):
        pj, mj = leads[j]
        for i in range(j):
            pi, mi = leads[i]
            if pi != pj:
                continue
            if rank == 1 and all(a == 0 or b == 0 for a, b in zip(mi, mj)):
                continue  # coprime leading monomials
            lcm = mono_lcm(mi, mj)
            heapq.heappush(heap, (_term_degree((pi, lcm), twists), key((pi, lcm)), next(counter), i, j))

    for idx, g in enumerate(generators):
        vec = _to_vec(g)
        if not vec:
            continue
        tr = None
        if track:
            tr = zero_row()
            tr[idx] = {(0,) * len(variables): field_.one}
        j = add(vec, tr)
        push_pairs(j)

    processed = 0
    while heap:
        _, _, _, i, j = heapq.heappop(heap)
        processed += 1
        if processed > max_pairs:
            raise ResourceExhaustedError(f"pair queue cap of {max_pairs} exceeded")
        pos, mi = leads[i]
        _, mj = leads[j]
        lcm = mono_lcm(mi, mj)
        ti, tj = mono_div(lcm, mi), mono_div(lcm, mj)
        s = {}
        _sub_multiple(s, elems[i], ti, -1, mod)
        _sub_multiple(s, elems[j], tj, 1, mod)
        tr = None
        if track:
            tr = zero_row()
            for l in range(ngens):
                _poly_sub_multiple(tr[l], trs[i][l], ti, -1, mod)
                _poly_sub_multiple(tr[l], trs[j][l], tj, 1, mod)
        s, tr = _top_reduce(s, tr, elems, leads, trs, key, mod, field_)
        if s:
            push_pairs(add(s, tr))

    # drop redundant leading terms
    keep = []
    for i, (pi, mi) in enumerate(leads):
        redundant = False
        for j, (pj, mj) in enumerate(leads):
            if i == j or pi != pj or not mono_divides(mj, mi):
                continue
            if mj != mi or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    elems = [elems[i] for i in keep]
    leads = [leads[i] for i in keep]
    trs = [trs[i] for i in keep]

    # reduce tails
    for k in range(len(elems)):
        lt = leads[k]
        lc = elems[k][lt]
        tail = {t: v for t, v in elems[k].items() if t != lt}
        others_e = elems[:k] + elems[k + 1:]
        others_l = leads[:k] + leads[k + 1:]
        others_t = trs[:k] + trs[k + 1:]
        tr = [dict(p) for p in trs[k]] if track else None
        rem, tr = _full_reduce(tail, tr, others_e, others_l, others_t, key, mod, field_)
        rem[lt] = lc
        elems[k] = rem
        trs[k] = tr

    perm = sorted(range(len(elems)), key=lambda k: (_term_degree(leads[k], twists), key(leads[k])))
    return GroebnerBasis(
        elements=[elems[k] for k in perm],
        leads=[leads[k] for k in perm],
        order=order, field=field_, variables=variables, rank=rank, twists=twists,
        inputs=generators,
        transform=[trs[k] for k in perm] if track else None,
    )


def _find_divisor(term, leads):
    pos, m = term
    for k, (pk, mk) in enumerate(leads):
        if pk == pos and mono_divides(mk, m):
            return k
    return -1


def _top_reduce(p, tr, elems, leads, trs, key, mod, field_):
    while p:
        lt = _lead(p, key)
        k = _find_divisor(lt, leads)
        if k < 0:
            break
        c = field_.div(p[lt], elems[k][leads[k]])
        t = mono_div(lt[1], leads[k][1])
        _sub_multiple(p, elems[k], t, c, mod)
        if tr is not None:
            for l in range(len(tr)):
                _poly_sub_multiple(tr[l], trs[k][l], t, c, mod)
    return p, tr


def _full_reduce(p, tr, elems, leads, trs, key, mod, field_):
    rem = {}
    p = dict(p)
    while p:
        lt = _lead(p, key)
        k = _find_divisor(lt, leads)
        if k < 0:
            rem[lt] = p.pop(lt)
            continue
        c = field_.div(p[lt], elems[k][leads[k]])
        t = mono_div(lt[1], leads[k][1])
        _sub_multiple(p, elems[k], t, c, mod)
        if tr is not None:
            for l in range(len(tr)):
                _poly_sub_multiple(tr[l], trs[k][l], t, c, mod)
    return rem, tr


def _divide(vec: dict, gb: GroebnerBasis):
    """Division with remainder; returns (remainder dict, quotient dicts per basis element)."""
    key = gb.order.key
    mod = gb.field.modulus
    quotients = [dict() for _ in gb.elements]
    rem = {}
    p = dict(vec)
    while p:
        lt = _lead(p, key)
        k = _find_divisor(lt, gb.leads)
        if k < 0:
            rem[lt] = p.pop(lt)
            continue
        c = gb.field.div(p[lt], gb.elements[k][gb.leads[k]])
        t = mono_div(lt[1], gb.leads[k][1])
        _sub_multiple(p, gb.elements[k], t, c, mod)
        nv = quotients[k].get(t, 0) + c
        if mod is not None:
            nv %= mod
        if nv:
            quotients[k][t] = nv
        else:
            quotients[k].pop(t, None)
    return rem, quotients


def normal_form(v, gb: GroebnerBasis):
    """Return ``(remainder, quotients)`` with ``v = sum q_k * gb_k + remainder``.

    No remainder term is divisible by a leading term of ``gb``.
    """
    if isinstance(v, ModuleVector):
        if v.rank != gb.rank:
            raise ValueError(f"vector of rank {v.rank} against basis of rank {gb.rank}")
    elif gb.rank != 1:
        raise ValueError("polynomial against a module basis")
    rem, quotients = _divide(_to_vec(v), gb)
    qs = [Polynomial._raw(q, gb.field, gb.variables) for q in quotients]
    if isinstance(v, Polynomial):
        return Polynomial._raw({m: c for (_, m), c in rem.items()}, gb.field, gb.variables), qs
    entries = [dict() for _ in range(gb.rank)]
    for (pos, m), c in rem.items():
        entries[pos][m] = c
    return ModuleVector([Polynomial._raw(e, gb.field, gb.variables) for e in entries],
                        v.twists, check=False), qs


def pull_back(quotients: Sequence[Polynomial], gb: GroebnerBasis) -> list:
    """Express ``sum_k quotients[k] * gb_k`` in the input generators."""
    if gb.transform is None:
        raise ValueError("basis was computed without transformation tracking")
    mod = gb.field.modulus
    out = [dict() for _ in gb.inputs]
    for q, row in zip(quotients, gb.transform):
        qt = q.terms if isinstance(q, Polynomial) else q
        if not qt:
            continue
        for l, t in enumerate(row):
            if t:
                _poly_add_to(out[l], _poly_mul(qt, t, mod), mod)
    return [Polynomial._raw(p, gb.field, gb.variables) for p in out]


def s_pairs_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Direct Buchberger-criterion check over every same-position pair."""
    mod = gb.field.modulus
    for i, j in itertools.combinations(range(len(gb.elements)), 2):
        (pi, mi), (pj, mj) = gb.leads[i], gb.leads[j]
        if pi != pj:
            continue
        lcm = mono_lcm(mi, mj)
        s = {}
        ci = gb.field.inv(gb.elements[i][gb.leads[i]])
        cj = gb.field.inv(gb.elements[j][gb.leads[j]])
        _sub_multiple(s, gb.elements[i], mono_div(lcm, mi), gb.field.neg(ci), mod)
        _sub_multiple(s, gb.elements[j], mono_div(lcm, mj), cj, mod)
        rem, _ = _divide(s, gb)
        if rem:
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    for k, vec in enumerate(gb.elements):
        if vec[gb.leads[k]] != gb.field.one:
            return False
        others = gb.leads[:k] + gb.leads[k + 1:]
        for term in vec:
            if _find_divisor(term, others) >= 0:
                return False
    return True


# -- ideal membership --------------------------------------------------------

def ideal_membership(f: Polynomial, gens: Sequence[Polynomial], modulus: Polynomial | None = None,
                     *, gb: GroebnerBasis | None = None, max_pairs: int = DEFAULT_MAX_PAIRS):
    """Decide ``f in (gens)``, working modulo ``modulus`` when given.

    Returns ``(member, witnesses)``; when member, ``f = sum w_i * gens_i``
    (modulo ``modulus``).  A precomputed tracked basis of ``gens`` (+ modulus)
    may be passed as ``gb``.
    """
    gens = list(gens)
    if gb is None:
        inputs = gens + ([modulus] if modulus is not None else [])
        gb = buchberger(inputs, max_pairs=max_pairs)
    rem, qs = normal_form(f, gb)
    if rem:
        return False, []
    w = pull_back(qs, gb)
    return True, w[:len(gens)]


# -- syzygies ----------------------------------------------------------------

@dataclass
class SyzygyMatrix:
    """Columns are relations ``sum_i s_i f_i = 0`` (modulo ``modulus`` if set).

    ``row_twists`` are the generator degrees d_i and ``col_twists`` the
    column degrees b_j: entry (i, j) is homogeneous of degree ``b_j - d_i``.
    """

    columns: list
    generators: list
    row_twists: tuple
    col_twists: tuple
    modulus: Polynomial | None = None
    free: bool = False
    _gb: GroebnerBasis | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.generators)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.columns[j].entries[i]

    def rows(self) -> list:
        return [[c.entries[i] for c in self.columns] for i in range(self.n)]

    def annihilates(self) -> bool:
        for col in self.columns:
            v = col.dot(self.generators)
            if self.modulus is not None:
                v = _reduce_mod(v, self.modulus)
            if v:
                return False
        return True


def _reduce_mod(p: Polynomial, modulus: Polynomial) -> Polynomial:
    gb = _single_gb(modulus)
    rem, _ = normal_form(p, gb)
    return rem


_SINGLE_GB_CACHE: dict = {}


def _single_gb(modulus: Polynomial) -> GroebnerBasis:
    gb = _SINGLE_GB_CACHE.get(modulus)
    if gb is None:
        gb = buchberger([modulus], track=False)
        if len(_SINGLE_GB_CACHE) > 64:
            _SINGLE_GB_CACHE.clear()
        _SINGLE_GB_CACHE[modulus] = gb
    return gb


def _schreyer_syzygies(gb: GroebnerBasis) -> list:
    """Syzygies among basis elements from S-pair reductions, as index->poly dicts."""
    mod = gb.field.modulus
    one = gb.field.one
    out = []
    nvars = len(gb.variables)
    for i, j in itertools.combinations(range(len(gb.elements)), 2):
        (pi, mi), (pj, mj) = gb.leads[i], gb.leads[j]
        if pi != pj:
            continue
        lcm = mono_lcm(mi, mj)
        ti, tj = mono_div(lcm, mi), mono_div(lcm, mj)
        s = {}
        _sub_multiple(s, gb.elements[i], ti, gb.field.neg(one), mod)
        _sub_multiple(s, gb.elements[j], tj, one, mod)
        rem, qs = _divide(s, gb)
        assert not rem, "input is not a Groebner basis"
        syz = {k: {m: (-c % mod if mod else -c) for m, c in q.items()} for k, q in enumerate(qs) if q}
        for k, t, c in ((i, ti, one), (j, tj, gb.field.neg(one))):
            row = syz.setdefault(k, {})
            nv = row.get(t, 0) + c
            if mod is not None:
                nv %= mod
            if nv:
                row[t] = nv
            else:
                row.pop(t, None)
        out.append(syz)
    del nvars
    return out


def _column_degree(col: list, twists) -> int | None:
    for p, d in zip(col, twists):
        if p:
            return sum(next(iter(p))) + d
    return None


def _normalize_column(col: list, field_):
    """Scale so that the first nonzero entry's grevlex-leading coefficient is one."""
    mod = field_.modulus
    for p in col:
        if p:
            lead = max(p, key=grevlex_key)
            inv = field_.inv(p[lead])
            return [_scale(q, inv, mod) for q in col]
    return col


def syzygies(gens: Sequence[Polynomial], twists: Sequence[int] | None = None, *,
             modulus: Polynomial | None = None, minimal: bool = True,
             hilbert_burch: bool = False, max_pairs: int = DEFAULT_MAX_PAIRS) -> SyzygyMatrix:
    """Generators of the relation module of ``gens`` (over S, or S/(modulus)).

    Schreyer's syzygies of a tracked Groebner basis are pulled back to the
    inputs and joined with the columns ``e_i - Q_i T`` coming from dividing
    each input by the basis.  With ``minimal`` the set is pruned to a minimal
    homogeneous generating set, processing columns by increasing degree.

    ``hilbert_burch`` asks for the two-variable case: generators must avoid
    every variable after the first two and be primary to the maximal ideal of
    that subring; the result then has exactly n-1 columns and is marked free.
    """
    gens = list(gens)
    if not gens or any(g.is_zero() for g in gens):
        raise ValueError("syzygies need nonzero generators")
    field_ = gens[0].field
    variables = gens[0].variables
    mod = field_.modulus
    degs = tuple(g.homogeneous_degree() for g in gens)
    twists = tuple(twists) if twists is not None else degs
    n = len(gens)

    if hilbert_burch:
        if modulus is not None:
            raise ValueError("the two-variable case works without a modulus")
        _check_two_variable_primary(gens, max_pairs)

    inputs = gens + ([modulus] if modulus is not None else [])
    gb = buchberger(inputs, max_pairs=max_pairs)
    T = gb.transform
    ninputs = len(inputs)

    cols = []
    for syz in _schreyer_syzygies(gb):
        col = [dict() for _ in range(ninputs)]
        for k, q in syz.items():
            for l in range(ninputs):
                if T[k][l]:
                    _poly_add_to(col[l], _poly_mul(q, T[k][l], mod), mod)
        cols.append(col)
    for i, g in enumerate(inputs):
        rem, qs = _divide(_to_vec(g), gb)
        assert not rem
        col = [dict() for _ in range(ninputs)]
        col[i] = {(0,) * len(variables): field_.one}
        for k, q in enumerate(qs):
            if q:
                for l in range(ninputs):
                    if T[k][l]:
                        _poly_add_to(col[l], _scale(_poly_mul(q, T[k][l], mod), -1, mod), mod)
        cols.append(col)

    cleaned = []
    seen = set()
    for col in cols:
        col = col[:n]
        if modulus is not None:
            col = [_reduce_mod(Polynomial._raw(p, field_, variables), modulus).terms for p in col]
        if not any(col):
            continue
        col = _normalize_column(col, field_)
        sig = tuple(frozenset(p.items()) for p in col)
        if sig in seen:
            continue
        seen.add(sig)
        cleaned.append(col)

    def as_vector(col):
        return ModuleVector([Polynomial._raw(dict(p), field_, variables) for p in col], twists, check=False)

    cleaned.sort(key=lambda c: (_column_degree(c, twists), len(c) and sum(len(p) for p in c)))
    if minimal:
        kept: list = []
        extra = []
        if modulus is not None:
            for i in range(n):
                entries = [Polynomial.zero(field_, variables)] * n
                entries[i] = modulus
                extra.append(ModuleVector(entries, twists, check=False))
        for col in cleaned:
            v = as_vector(col)
            if kept or extra:
                sub = buchberger(kept + extra, term_over_position(twists), track=False, max_pairs=max_pairs)
                rem, _ = normal_form(v, sub)
                if rem.is_zero():
                    continue
            kept.append(v)
        vectors = kept
    else:
        vectors = [as_vector(c) for c in cleaned]

    order = term_over_position(twists)
    vectors.sort(key=lambda v: (v.degree, order.key(_lead(_to_vec(v), order.key))), reverse=False)
    col_twists = tuple(v.degree for v in vectors)
    free = False
    if hilbert_burch:
        if len(vectors) != n - 1:
            raise NotPrimaryError(
                f"expected {n - 1} free relation columns, found {len(vectors)}")
        free = True
    return SyzygyMatrix(columns=vectors, generators=gens, row_twists=twists,
                        col_twists=col_twists, modulus=modulus, free=free)


def _check_two_variable_primary(gens, max_pairs):
    nv = gens[0].nvars
    if nv < 2:
        raise NotPrimaryError("need at least two variables")
    for g in gens:
        if any(any(m[2:]) for m in g.terms):
            raise NotPrimaryError(f"generator {g} leaves the two-variable subring")
    gb = buchberger(gens, track=False, max_pairs=max_pairs)
    for i in (0, 1):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) for _, m in gb.leads):
            raise NotPrimaryError(f"no power of {gens[0].variables[i]} in the ideal")


def module_coordinates(r, basis: SyzygyMatrix) -> list:
    """Coefficients u_j with ``r = sum_j u_j * column_j`` for a free basis.

    Raises :class:`NotARelationError` if r does not annihilate the generators
    and :class:`BasisNotFreeError` if the basis is not certified free or does
    not span r.
    """
    if not isinstance(r, ModuleVector):
        r = ModuleVector(list(r), basis.row_twists, check=False)
    if r.rank != basis.n:
        raise ValueError("shape mismatch")
    v = r.dot(basis.generators)
    if basis.modulus is not None:
        v = _reduce_mod(v, basis.modulus)
    if v:
        raise NotARelationError("vector does not annihilate the generators")
    if not basis.free:
        raise BasisNotFreeError("basis is not certified free")
    if basis._gb is None:
        basis._gb = buchberger(basis.columns, term_over_position(basis.row_twists))
    rem, qs = normal_form(ModuleVector(r.entries, basis.row_twists, check=False), basis._gb)
    if not rem.is_zero():
        raise BasisNotFreeError("relation lies outside the span of the basis")
    return pull_back(qs, basis._gb)
