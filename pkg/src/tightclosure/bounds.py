"""Slope estimates and degree bounds for tight closure on plane-curve cones.

Everything is exact: thresholds stay :class:`~fractions.Fraction` until a
:class:`Bound` is integerized, and each bound records whether its defining
inequality is strict.  Semantics of a bound with value ``v``:

* inclusion: every homogeneous element of degree ``m >= v`` lies in I*;
* exclusion: for ``m < v``, an element lies in I* only if it lies in I;
* vanishing: both at once, I* = I + R_{>= v}.

Citation tags are stable machine-readable names of the result a bound rests on.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import ceil, floor

CHAR_CAVEAT = "valid in characteristic 0; in characteristic p valid for p >> 0"
PLANE_OFFSET_NOTE = ("exclusion offset computed from the exact genus; for plane curves it "
                     "equals (delta-3)/2, the shortcut constant (delta+3)/2 is not used")

# citation tags
TAG_SLOPE = "slope:average"
TAG_MAX_PAIR = "slope:max-upper-pair-sum"
TAG_MAX_LOWER = "slope:max-lower-top-degree"
TAG_MIN_LOWER = "slope:min-lower-bottom-degree"
TAG_SPLIT_EXACT = "slope:split-exact"
TAG_SEMISTABLE = "slope:semistable"
TAG_GENUS_SLOPE = "slope:genus-rank-two"
TAG_CHARP_SLOPE = "slope:charp-integer-slack"
TAG_INCL_GENERIC = "inclusion:pair-sum"
TAG_EXCL_GENERIC = "exclusion:min-degree"
TAG_INCL_SPLIT = "inclusion:split-max-twist"
TAG_EXCL_SPLIT = "exclusion:split-min-twist"
TAG_VANISHING = "vanishing:semistable-ceiling"
TAG_VANISHING_ADVISORY = "vanishing:advisory-not-semistable"
TAG_INCL_GENUS = "inclusion:genus-n3"
TAG_EXCL_GENUS = "exclusion:genus-n3"
TAG_INCL_CHARP = "inclusion:charp-slope-floor"
TAG_EXCL_CHARP = "exclusion:charp-slope-ceiling"

P_LARGE = "p>>0"


def plane_genus(delta: int) -> int:
    return (delta - 1) * (delta - 2) // 2


@dataclass(frozen=True)
class DegreeData:
    """Numerical data of n homogeneous primary generators on a curve of degree delta.

    ``characteristic`` is 0, a prime p, or ``"p>>0"``.  ``twists`` are the
    a_j of a splitting F(0) = sum O(a_j) of the dual relation bundle.  A
    missing genus is filled in from the plane-curve formula.
    """

    degrees: tuple
    delta: int
    genus: int | None = None
    characteristic: object = 0
    twists: tuple | None = None
    semistable: bool = False
    strongly_semistable: bool = False
    indecomposable: bool = False

    def __post_init__(self):
        degs = tuple(sorted(int(d) for d in self.degrees))
        if len(degs) < 2:
            raise ValueError("need at least two generators")
        if degs[0] < 1:
            raise ValueError("generator degrees must be positive")
        if self.delta < 1:
            raise ValueError("curve degree must be positive")
        object.__setattr__(self, "degrees", degs)
        if self.genus is None:
            object.__setattr__(self, "genus", plane_genus(self.delta))
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.twists is not None:
            tw = tuple(sorted(int(a) for a in self.twists))
            if len(tw) != len(degs) - 1:
                raise ValueError(f"expected {len(degs) - 1} twists, got {len(tw)}")
            if sum(tw) != sum(degs):
                raise ValueError("twists must sum to the sum of the degrees")
            object.__setattr__(self, "twists", tw)
        if self.strongly_semistable:
            object.__setattr__(self, "semistable", True)
        c = self.characteristic
        if c not in (0, P_LARGE) and not (isinstance(c, int) and c > 1):
            raise ValueError(f"bad characteristic {c!r}")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class Bound:
    kind: str
    value: int
    tag: str
    threshold: Fraction
    strict: bool = False
    caveat: str | None = None
    note: str | None = None

    def holds_at(self, m: int) -> bool:
        if self.kind == "inclusion":
            return m >= self.value
        return m < self.value


@dataclass(frozen=True)
class SlopeEstimates:
    """Bounds on the slopes of the dual relation bundle F(0).

    ``mu_min_lower <= mu_min`` and ``mu_max <= mu_max_upper``; when
    ``strict`` is set these come from the p >> 0 transfer and both
    inequalities are strict.
    """

    delta: int
    mu: Fraction
    mu_min_lower: Fraction
    mu_min_upper: Fraction
    mu_max_lower: Fraction
    mu_max_upper: Fraction
    provenance: dict = field(default_factory=dict)
    strict: bool = False


@dataclass
class BoundReport:
    inclusion: Bound | None = None
    exclusion: Bound | None = None
    vanishing: Bound | None = None
    entries: list = field(default_factory=list)
    caveats: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def inclusion_degree(self) -> int | None:
        return self.inclusion.value if self.inclusion else None

    @property
    def exclusion_degree(self) -> int | None:
        return self.exclusion.value if self.exclusion else None

    @property
    def vanishing_k(self) -> int | None:
        return self.vanishing.value if self.vanishing else None


def slope_estimates(d: DegreeData) -> SlopeEstimates:
    delta = d.delta
    degs = d.degrees
    mu = Fraction(delta * d.total, d.n - 1)
    prov = {"mu": TAG_SLOPE}
    est = dict(
        mu_min_lower=Fraction(delta * degs[0]),
        mu_min_upper=mu,
        mu_max_lower=Fraction(delta * degs[-1]),
        mu_max_upper=Fraction(delta * (degs[-2] + degs[-1])),
    )
    prov.update(mu_min_lower=TAG_MIN_LOWER, mu_min_upper=TAG_SLOPE,
                mu_max_lower=TAG_MAX_LOWER, mu_max_upper=TAG_MAX_PAIR)
    if d.n == 3 and d.indecomposable and d.genus >= 1:
        half = Fraction(delta * d.total, 2)
        upper = half + d.genus - 1
        lower = half - d.genus + 1
        if upper < est["mu_max_upper"]:
            est["mu_max_upper"] = upper
            prov["mu_max_upper"] = TAG_GENUS_SLOPE
        if lower > est["mu_min_lower"]:
            est["mu_min_lower"] = lower
            prov["mu_min_lower"] = TAG_GENUS_SLOPE
    if d.twists is not None:
        hi = Fraction(delta * max(d.twists))
        lo = Fraction(delta * min(d.twists))
        est.update(mu_max_upper=hi, mu_max_lower=hi, mu_min_lower=lo, mu_min_upper=lo)
        for k in ("mu_max_upper", "mu_max_lower", "mu_min_lower", "mu_min_upper"):
            prov[k] = TAG_SPLIT_EXACT
    elif d.semistable or d.n == 2:
        est.update(mu_max_upper=mu, mu_max_lower=mu, mu_min_lower=mu, mu_min_upper=mu)
        for k in ("mu_max_upper", "mu_max_lower", "mu_min_lower", "mu_min_upper"):
            prov[k] = TAG_SEMISTABLE
    return SlopeEstimates(delta=delta, mu=mu, provenance=prov, **est)


def degree_bounds_from_slopes(est: SlopeEstimates, caveat: str | None = None):
    """(inclusion, exclusion) degree bounds implied by slope estimates."""
    delta = est.delta
    if est.strict:
        # mu_bar_max < U: delta*m >= U suffices; mu_bar_min > L: delta*m <= L suffices
        inc_val = ceil(Fraction(est.mu_max_upper, delta))
        exc_val = floor(Fraction(est.mu_min_lower, delta)) + 1
        return (Bound("inclusion", inc_val, TAG_INCL_CHARP, Fraction(est.mu_max_upper, delta),
                      strict=False, caveat=caveat),
                Bound("exclusion", exc_val, TAG_EXCL_CHARP, Fraction(est.mu_min_lower, delta),
                      strict=False, caveat=caveat))
    inc_thr = Fraction(est.mu_max_upper, delta)
    exc_thr = Fraction(est.mu_min_lower, delta)
    return (Bound("inclusion", ceil(inc_thr), est.provenance.get("mu_max_upper", ""), inc_thr,
                  strict=False, caveat=caveat),
            Bound("exclusion", ceil(exc_thr), est.provenance.get("mu_min_lower", ""), exc_thr,
                  strict=True, caveat=caveat))


def generic_bounds(d: DegreeData) -> BoundReport:
    """Bounds that need only the degrees: m >= d_{n-1} + d_n and m < d_1."""
    degs = d.degrees
    inc = Bound("inclusion", degs[-2] + degs[-1], TAG_INCL_GENERIC, Fraction(degs[-2] + degs[-1]))
    exc = Bound("exclusion", degs[0], TAG_EXCL_GENERIC, Fraction(degs[0]), strict=True,
                caveat=CHAR_CAVEAT)
    return BoundReport(inclusion=inc, exclusion=exc, entries=[inc, exc], caveats=[CHAR_CAVEAT])


def split_bounds(d: DegreeData) -> BoundReport:
    if d.twists is None:
        raise ValueError("split bounds need the splitting twists")
    hi, lo = max(d.twists), min(d.twists)
    inc = Bound("inclusion", hi, TAG_INCL_SPLIT, Fraction(hi), caveat=CHAR_CAVEAT)
    exc = Bound("exclusion", lo, TAG_EXCL_SPLIT, Fraction(lo), strict=True, caveat=CHAR_CAVEAT)
    rep = BoundReport(inclusion=inc, exclusion=exc, entries=[inc, exc], caveats=[CHAR_CAVEAT])
    if hi == lo:
        rep.vanishing = Bound("vanishing", hi, TAG_INCL_SPLIT, Fraction(hi), caveat=CHAR_CAVEAT)
    return rep


def vanishing_bound(d: DegreeData) -> int:
    """k = ceil((d_1 + ... + d_n) / (n - 1))."""
    return ceil(Fraction(d.total, d.n - 1))


def vanishing_report(d: DegreeData) -> BoundReport:
    k = vanishing_bound(d)
    thr = Fraction(d.total, d.n - 1)
    semistable = d.semistable or d.n == 2
    caveats = []
    if d.characteristic not in (0,):
        if d.n == 2 and isinstance(d.characteristic, int) and d.characteristic > 0:
            if Fraction(2 * (d.genus - 1), d.delta) < d.characteristic:
                caveats = []
            else:
                caveats = [f"characteristic {d.characteristic} does not exceed 2(g-1)/delta"]
        elif not (d.strongly_semistable or d.n == 2):
            caveats = ["in characteristic p needs strong semistability of the relation sheaf"]
    tag = TAG_VANISHING if semistable else TAG_VANISHING_ADVISORY
    van = Bound("vanishing", k, tag, thr, caveat=caveats[0] if caveats else None,
                note=None if semistable else "relation sheaf not known to be semistable")
    rep = BoundReport(vanishing=van, entries=[van], caveats=caveats)
    if semistable:
        rep.inclusion = Bound("inclusion", k, tag, thr, caveat=van.caveat)
        rep.exclusion = Bound("exclusion", k, tag, thr, strict=True, caveat=van.caveat)
    return rep


def genus_bounds_n3(d: DegreeData) -> BoundReport:
    """Rank-two indecomposable case: thresholds sum(d)/2 +- (g-1)/delta."""
    if d.n != 3:
        raise ValueError("genus bounds need exactly three generators")
    if not d.indecomposable:
        raise ValueError("genus bounds need an indecomposable relation sheaf")
    if d.characteristic != 0:
        raise ValueError("genus bounds are stated in characteristic 0; use charp_transfer")
    if d.genus == 0:
        raise ValueError("on a rational curve every vector bundle splits; pass the twists instead")
    half = Fraction(d.total, 2)
    off = Fraction(d.genus - 1, d.delta)
    inc_thr, exc_thr = half + off, half - off
    notes = [PLANE_OFFSET_NOTE] if d.genus == plane_genus(d.delta) else []
    inc = Bound("inclusion", ceil(inc_thr), TAG_INCL_GENUS, inc_thr)
    exc = Bound("exclusion", ceil(exc_thr), TAG_EXCL_GENUS, exc_thr, strict=True,
                note=notes[0] if notes else None)
    rep = BoundReport(inclusion=inc, exclusion=exc, entries=[inc, exc], notes=notes)
    if inc.value == exc.value:
        rep.vanishing = Bound("vanishing", inc.value, TAG_INCL_GENUS, inc_thr)
    return rep


def charp_transfer(generic: SlopeEstimates) -> SlopeEstimates:
    """Slope bounds for p >> 0 from generic-fiber estimates (one unit of integer slack).

    mu_bar_min > ceil(mu_min) - 1 and mu_bar_max < floor(mu_max) + 1; the
    returned estimates are strict.
    """
    lo = Fraction(ceil(generic.mu_min_lower) - 1)
    hi = Fraction(floor(generic.mu_max_upper) + 1)
    prov = dict(generic.provenance)
    prov.update(mu_min_lower=TAG_CHARP_SLOPE, mu_max_upper=TAG_CHARP_SLOPE)
    return replace(generic, mu_min_lower=lo, mu_max_upper=hi, provenance=prov, strict=True)


def mindeg_split(d: DegreeData, s: int) -> int:
    """Minimal degree of a rank-s quotient of sum O(d_i): delta * (d_1 + ... + d_s)."""
    if not 1 <= s <= d.n:
        raise ValueError(f"s must lie in [1, {d.n}]")
    return d.delta * sum(d.degrees[:s])


def ample_split(twists) -> bool:
    return all(t > 0 for t in twists)


def bound_report(d: DegreeData) -> BoundReport:
    """All bounds applicable to ``d``; headline inclusion is the least, exclusion the greatest."""
    char = d.characteristic
    rep = generic_bounds(d)
    entries = list(rep.entries)
    caveats = list(rep.caveats)
    notes: list = []
    vanishing = None

    if d.twists is not None:
        s = split_bounds(d)
        entries += s.entries
    if d.n == 2 or d.semistable:
        if char == 0 or d.n == 2 or d.strongly_semistable:
            v = vanishing_report(d)
            entries += [b for b in (v.inclusion, v.exclusion) if b]
            caveats += v.caveats
            vanishing = v.vanishing
    if d.n == 3 and d.indecomposable and char == 0 and d.genus >= 1:
        g = genus_bounds_n3(d)
        entries += g.entries
        notes += g.notes
    if char != 0 and (d.semistable or (d.n == 3 and d.indecomposable and d.genus >= 1)) \
            and not d.strongly_semistable:
        est = charp_transfer(slope_estimates(d))
        entries += list(degree_bounds_from_slopes(est, CHAR_CAVEAT))
    if isinstance(char, int) and char > 0:
        caveats.append(f"characteristic {char}: bounds other than {TAG_INCL_GENERIC} assume p >> 0")

    incs = [b for b in entries if b.kind == "inclusion"]
    excs = [b for b in entries if b.kind == "exclusion"]
    inc = min(incs, key=lambda b: (b.value, b.tag)) if incs else None
    exc = max(excs, key=lambda b: (b.value, b.tag)) if excs else None
    if vanishing is None and inc and exc and inc.value == exc.value:
        vanishing = Bound("vanishing", inc.value, inc.tag, inc.threshold, caveat=inc.caveat)
    seen = []
    for c in caveats:
        if c not in seen:
            seen.append(c)
    return BoundReport(inclusion=inc, exclusion=exc, vanishing=vanishing, entries=entries,
                       caveats=seen, notes=notes)
