"""Tight-closure verdicts for homogeneous elements.

Order of work: ideal membership; if the relation module splits (generators
in K[x,y]) the forcing-class criterion, which is complete; otherwise the
degree bounds, leaving ``Undecided`` where they do not reach.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bounds import (CHAR_CAVEAT, TAG_EXCL_GENERIC, TAG_INCL_GENERIC, BoundReport, DegreeData,
                     bound_report)
from .errors import NonHomogeneousError, SplittingNotEstablishedError
from .forcing import (DEFAULT_MAX_DENOMINATOR_EXP, ForcingClass, IdealData, SplittingData,
                      forcing_class, splitting_data)
from .poly import Polynomial

TAG_MEMBERSHIP = "membership:groebner-normal-form"
TAG_SPLIT_CRITERION = "criterion:split-components"
TAG_FORCING_ZERO = "forcing:class-vanishes-iff-member"


class Verdict(enum.Enum):
    IN_IDEAL = "InIdeal"
    IN_TIGHT_CLOSURE_NOT_IDEAL = "InTightClosureNotIdeal"
    NOT_IN_TIGHT_CLOSURE = "NotInTightClosure"
    UNDECIDED = "Undecided"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Step:
    tag: str
    text: str


@dataclass
class Decision:
    verdict: Verdict
    degree: int
    steps: list
    caveat: str | None = None
    witnesses: list | None = None
    forcing: ForcingClass | None = None
    report: BoundReport | None = None

    @property
    def in_tight_closure(self) -> bool | None:
        if self.verdict is Verdict.UNDECIDED:
            return None
        return self.verdict is not Verdict.NOT_IN_TIGHT_CLOSURE


@dataclass
class DecisionContext:
    """Per-ideal cached data reused across many decisions."""

    ideal: IdealData
    split: SplittingData | None
    split_error: str | None
    flags: dict = field(default_factory=dict)
    max_denominator_exp: int = DEFAULT_MAX_DENOMINATOR_EXP

    @classmethod
    def build(cls, ideal: IdealData, *, flags: dict | None = None,
              max_denominator_exp: int = DEFAULT_MAX_DENOMINATOR_EXP) -> "DecisionContext":
        ideal.ring.require_smooth()
        try:
            split, err = splitting_data(ideal), None
        except SplittingNotEstablishedError as exc:
            split, err = None, str(exc)
        return cls(ideal, split, err, dict(flags or {}), max_denominator_exp)

    def degree_data(self) -> DegreeData:
        ring = self.ideal.ring
        return DegreeData(
            degrees=self.ideal.degrees, delta=ring.delta,
            genus=self.flags.get("genus", ring.genus),
            characteristic=ring.field.characteristic,
            twists=self.split.twists if self.split else None,
            semistable=bool(self.flags.get("semistable")),
            strongly_semistable=bool(self.flags.get("strongly_semistable")),
            indecomposable=bool(self.flags.get("indecomposable")) and self.split is None,
        )


def _context(ideal_or_ctx, flags, max_denominator_exp) -> DecisionContext:
    if isinstance(ideal_or_ctx, DecisionContext):
        return ideal_or_ctx
    return DecisionContext.build(ideal_or_ctx, flags=flags, max_denominator_exp=max_denominator_exp)


def decide(ideal, f0: Polynomial, *, flags: dict | None = None,
           max_denominator_exp: int = DEFAULT_MAX_DENOMINATOR_EXP,
           ring_coordinates: bool = False) -> Decision:
    """Decide whether f0 lies in the tight closure of the ideal.

    ``ideal`` is an :class:`IdealData` or a prepared :class:`DecisionContext`.
    ``f0`` must be homogeneous and nonzero in R.
    """
    ctx = _context(ideal, flags, max_denominator_exp)
    ideal = ctx.ideal
    ring = ideal.ring
    m = f0.homogeneous_degree()
    f = f0 if ring_coordinates else ring.to_ring(f0)
    f = ring.z_reduce(f)
    if m is None or f.is_zero():
        raise NonHomogeneousError("candidate element must be nonzero in R")

    member, w = ideal.contains(f)
    if member:
        step = Step(TAG_MEMBERSHIP, f"normal form of the element modulo (f_1..f_n, F) is zero")
        return Decision(Verdict.IN_IDEAL, m, [step], witnesses=w)
    steps = [Step(TAG_MEMBERSHIP, "element is not in the ideal: nonzero normal form")]

    if ctx.split is not None:
        c = forcing_class(ideal, ctx.split, f, ring_coordinates=True,
                          max_denominator_exp=ctx.max_denominator_exp)
        blocking = [j for j, (b, comp) in enumerate(zip(ctx.split.twists, c.components))
                    if m < b and not comp.is_zero()]
        steps.append(Step(TAG_FORCING_ZERO,
                          f"relation sheaf splits with twists {list(ctx.split.twists)}; forcing class "
                          f"components computed with denominators x^{c.exponents[0]} y^{c.exponents[1]}"))
        if blocking:
            j = blocking[0]
            steps.append(Step(TAG_SPLIT_CRITERION,
                              f"component {j} lives in H^1(O_Y({m - ctx.split.twists[j]})) with "
                              f"m={m} < b={ctx.split.twists[j]} and is nonzero"))
            verdict = Verdict.NOT_IN_TIGHT_CLOSURE
        else:
            steps.append(Step(TAG_SPLIT_CRITERION,
                              "every component has m >= b_j or vanishes"))
            verdict = Verdict.IN_TIGHT_CLOSURE_NOT_IDEAL
        return Decision(verdict, m, steps, caveat=CHAR_CAVEAT, forcing=c)

    steps.append(Step("splitting:unavailable", ctx.split_error or "no splitting"))
    report = bound_report(ctx.degree_data())
    degs = sorted(ideal.degrees)
    if m >= degs[-2] + degs[-1]:
        steps.append(Step(TAG_INCL_GENERIC, f"m={m} >= d_(n-1)+d_n={degs[-2] + degs[-1]}"))
        return Decision(Verdict.IN_TIGHT_CLOSURE_NOT_IDEAL, m, steps, report=report)
    if m < degs[0]:
        steps.append(Step(TAG_EXCL_GENERIC, f"m={m} < min degree {degs[0]}"))
        return Decision(Verdict.NOT_IN_TIGHT_CLOSURE, m, steps, caveat=CHAR_CAVEAT, report=report)
    if report.inclusion is not None and report.inclusion.holds_at(m):
        b = report.inclusion
        steps.append(Step(b.tag, f"m={m} >= inclusion bound {b.value}"))
        return Decision(Verdict.IN_TIGHT_CLOSURE_NOT_IDEAL, m, steps, caveat=b.caveat, report=report)
    if report.exclusion is not None and report.exclusion.holds_at(m):
        b = report.exclusion
        steps.append(Step(b.tag, f"m={m} < exclusion bound {b.value}"))
        return Decision(Verdict.NOT_IN_TIGHT_CLOSURE, m, steps, caveat=b.caveat or CHAR_CAVEAT,
                        report=report)
    steps.append(Step("bounds:gap", f"degree {m} lies between the exclusion and inclusion bounds"))
    return Decision(Verdict.UNDECIDED, m, steps, report=report)


@dataclass
class SweepRow:
    degree: int
    basis_size: int
    counts: dict
    examples: dict


def degree_sweep(ideal, m_lo: int, m_hi: int, *, flags: dict | None = None,
                 max_denominator_exp: int = DEFAULT_MAX_DENOMINATOR_EXP) -> list:
    """Decide every monomial of a K-basis of R_m for m in [m_lo, m_hi]."""
    if m_lo > m_hi:
        raise ValueError(f"empty degree range {m_lo}..{m_hi}")
    ctx = _context(ideal, flags, max_denominator_exp)
    rows = []
    for m in range(m_lo, m_hi + 1):
        counts = {v.value: 0 for v in Verdict}
        examples: dict = {}
        basis = ctx.ideal.ring.monomial_basis(m)
        for mono in basis:
            d = decide(ctx, mono, ring_coordinates=True)
            counts[d.verdict.value] += 1
            examples.setdefault(d.verdict.value, str(mono))
        rows.append(SweepRow(m, len(basis), counts, examples))
    return rows
