"""Independent oracles and random generators for the test suite.

Nothing here calls into the Groebner engine: membership and syzygy counts
are decided by plain linear algebra in a fixed degree.
"""

import random

from tightclosure.poly import Polynomial, monomials_of_degree


def rank(rows, field):
    """Rank of a list of dict-rows {column: value} by Gaussian elimination."""
    rows = [dict((k, field.convert(v)) for k, v in r.items() if v != 0) for r in rows]
    rows = [r for r in rows if r]
    pivots = {}
    for r in rows:
        r = dict(r)
        while r:
            col = min(r)
            if col not in pivots:
                inv = field.inv(r[col])
                pivots[col] = {k: field.mul(v, inv) for k, v in r.items()}
                break
            p = pivots[col]
            c = r[col]
            for k, v in p.items():
                nv = field.sub(r.get(k, field.zero), field.mul(c, v))
                if nv == 0:
                    r.pop(k, None)
                else:
                    r[k] = nv
    return len(pivots)


def span_contains(vectors, target, field):
    return rank(vectors, field) == rank(list(vectors) + [target], field)


def _shifted_rows(gens, m, nvars):
    rows = []
    for g in gens:
        dg = g.total_degree()
        if dg is None or dg > m:
            continue
        for mono in monomials_of_degree(nvars, m - dg):
            rows.append({tuple(a + b for a, b in zip(mono, k)): v for k, v in g.terms.items()})
    return rows


def linear_membership(f, gens, modulus=None):
    """f in (gens, modulus) decided in the single degree of f."""
    m = f.total_degree()
    if m is None:
        return True
    allg = list(gens) + ([modulus] if modulus is not None else [])
    rows = _shifted_rows(allg, m, f.nvars)
    return span_contains(rows, dict(f.terms), f.field)


def lattice_h1(delta, k):
    """Brute-force count of x^a y^b z^c with a, b <= -1, 0 <= c < delta, a+b+c = k."""
    count = 0
    for c in range(delta):
        for a in range(-60, 0):
            b = k - c - a
            if b <= -1:
                count += 1
    return count


def syzygy_dim(gens, degs, t, field):
    """dim of {(g_i) : sum g_i f_i = 0, g_i in K[x,y]_{t-d_i}} by linear algebra."""
    unknowns = []
    for i, d in enumerate(degs):
        for mono in monomials_of_degree(2, t - d):
            unknowns.append((i, mono + (0,)))
    # equations: coefficient of each target monomial; build matrix columns = unknowns
    cols = []
    for i, mono in unknowns:
        col = {}
        for k, v in gens[i].terms.items():
            key = tuple(a + b for a, b in zip(mono, k))
            col[key] = field.add(col.get(key, field.zero), v)
        cols.append(col)
    # rank of the matrix = rank of its columns
    keys = sorted({k for c in cols for k in c})
    index = {k: j for j, k in enumerate(keys)}
    r = rank([{index[k]: v for k, v in c.items()} for c in cols], field)
    return len(unknowns) - r


def random_homogeneous(rng, field, degree, nvars=3, density=0.6, zmax=None, variables=("x", "y", "z")):
    terms = {}
    for mono in monomials_of_degree(nvars, degree):
        if zmax is not None and mono[2] > zmax:
            continue
        if rng.random() < density:
            c = rng.randint(-5, 5)
            if c:
                terms[mono] = c
    return Polynomial(terms, field, variables)


def random_primary_monomial_ideal(rng, field, variables=("x", "y", "z")):
    """Monomial ideal in K[x,y] containing pure powers of x and y."""
    a, b = rng.randint(1, 6), rng.randint(1, 6)
    gens = {(a, 0, 0), (0, b, 0)}
    for _ in range(rng.randint(0, 3)):
        i, j = rng.randint(1, max(1, a - 1)), rng.randint(1, max(1, b - 1))
        if i < a and j < b:
            gens.add((i, j, 0))
    # drop non-minimal generators
    mins = [g for g in gens if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in gens)]
    return [Polynomial({g: 1}, field, variables) for g in sorted(mins)]


def make_rng(seed):
    return random.Random(seed)
