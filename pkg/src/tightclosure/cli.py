"""Command line front end: ``tightclosure {bounds,syzygy,decide,sweep,cohomology}``.

Problem documents are JSON (see :mod:`tightclosure.schema`).  Exit codes:
0 report produced, 2 input error, 3 precondition failure, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import jsonschema

from . import bounds as B
from .decision import DecisionContext, decide, degree_sweep
from .errors import (FieldMismatchError, NoMonicCoordinateError, NotPrimaryError, ParseError,
                     ResourceExhaustedError, SingularCurveError, SplittingNotEstablishedError,
                     TightClosureError)
from .fields import field_from_descriptor
from .forcing import DEFAULT_MAX_DENOMINATOR_EXP, IdealData, splitting_data
from .groebner import DEFAULT_MAX_PAIRS, syzygies
from .hypersurface import cohomology_table, make_ring
from .poly import parse_polynomial
from .schema import INPUT_SCHEMA, SCHEMA_VERSION

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 2, 3, 4


class InputError(TightClosureError):
    pass


def _rat(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _bound(b):
    if b is None:
        return None
    return {"kind": b.kind, "value": b.value, "tag": b.tag, "threshold": _rat(b.threshold),
            "strict": b.strict, "caveat": b.caveat, "note": b.note}


def parse_range(text: str) -> tuple:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected lo..hi") from None


class Problem:
    """Validated document plus lazily built ring and ideal."""

    def __init__(self, doc: dict, args):
        try:
            jsonschema.validate(doc, INPUT_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise InputError(f"schema violation: {exc.message}") from None
        self.doc = doc
        self.args = args
        self.field = field_from_descriptor(doc.get("field", "rationals"))
        self._ring = None
        self._ideal = None

    def poly(self, text):
        return parse_polynomial(text, self.field)

    @property
    def generators(self):
        return [self.poly(t) for t in self.doc.get("generators", [])]

    @property
    def ring(self):
        if self._ring is None:
            if "hypersurface" not in self.doc:
                raise InputError("document has no hypersurface")
            self._ring = make_ring(self.poly(self.doc["hypersurface"]), max_pairs=self.args.max_pairs)
        return self._ring

    @property
    def ideal(self):
        if self._ideal is None:
            if not self.doc.get("generators"):
                raise InputError("document has no generators")
            self._ideal = IdealData.create(self.ring, self.generators, max_pairs=self.args.max_pairs)
        return self._ideal

    @property
    def flags(self):
        flags = dict(self.doc.get("flags", {}))
        g = self.doc.get("genus_override", self.doc.get("genus"))
        if g is not None:
            flags["genus"] = g
        return flags

    def characteristic(self):
        c = self.doc.get("characteristic")
        if c == "p>>0":
            return B.P_LARGE
        return self.field.characteristic


def _bounds_payload(p: Problem):
    doc = p.doc
    warning = None
    twists = doc.get("twists")
    if doc.get("degrees"):
        degrees = doc["degrees"]
    elif doc.get("generators"):
        degrees = [g.homogeneous_degree() for g in p.generators]
    else:
        raise InputError("need generators or an explicit degree list")
    if "delta" in doc:
        delta = doc["delta"]
    elif "hypersurface" in doc:
        delta = p.poly(doc["hypersurface"]).homogeneous_degree()
    else:
        raise InputError("need a hypersurface or delta")
    if twists is None and doc.get("generators") and "hypersurface" in doc:
        try:
            twists = list(splitting_data(p.ideal).twists)
        except SplittingNotEstablishedError as exc:
            warning = str(exc)
    flags = doc.get("flags", {})
    genus = doc.get("genus_override", doc.get("genus"))
    d = B.DegreeData(
        degrees=tuple(degrees), delta=delta, genus=genus, characteristic=p.characteristic(),
        twists=tuple(twists) if twists is not None else None,
        semistable=flags.get("semistable", False),
        strongly_semistable=flags.get("strongly_semistable", False),
        indecomposable=flags.get("indecomposable", False),
    )
    rep = B.bound_report(d)
    est = B.slope_estimates(d)
    if d.characteristic == B.P_LARGE:
        est = B.charp_transfer(est)
    slopes = {
        name: {"value": _rat(getattr(est, name)), "tag": est.provenance.get(name, B.TAG_SLOPE)}
        for name in ("mu", "mu_min_lower", "mu_min_upper", "mu_max_lower", "mu_max_upper")
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "bounds",
        "input": {"degrees": list(d.degrees), "delta": d.delta, "genus": d.genus,
                  "characteristic": str(d.characteristic),
                  "twists": list(d.twists) if d.twists else None,
                  "flags": {"semistable": d.semistable, "strongly_semistable": d.strongly_semistable,
                            "indecomposable": d.indecomposable}},
        "slopes": slopes,
        "slopes_strict": est.strict,
        "inclusion": _bound(rep.inclusion),
        "exclusion": _bound(rep.exclusion),
        "vanishing": _bound(rep.vanishing),
        "bounds": [_bound(b) for b in rep.entries],
        "caveats": rep.caveats,
        "notes": rep.notes,
        "splitting_warning": warning,
    }


def _text_bounds(out):
    lines = [f"degrees {out['input']['degrees']}  delta={out['input']['delta']}  "
             f"genus={out['input']['genus']}  char={out['input']['characteristic']}"]
    for name, s in out["slopes"].items():
        lines.append(f"  {name:<14} {s['value']:>10}   [{s['tag']}]")
    for kind in ("inclusion", "exclusion", "vanishing"):
        b = out[kind]
        if b is None:
            continue
        if kind == "inclusion":
            text = f"R_m in I* for m >= {b['value']}"
        elif kind == "exclusion":
            text = f"I* = I in degrees m < {b['value']} (through {b['value'] - 1})"
        else:
            text = f"I* = I + R_(>= {b['value']})"
        lines.append(f"{kind:<10} {text}   [{b['tag']}]")
    for c in out["caveats"]:
        lines.append(f"caveat: {c}")
    for n in out["notes"]:
        lines.append(f"note: {n}")
    if out["splitting_warning"]:
        lines.append(f"warning: {out['splitting_warning']}")
    return "\n".join(lines)


def cmd_bounds(p: Problem):
    out = _bounds_payload(p)
    return out, _text_bounds(out)


def cmd_syzygy(p: Problem):
    gens = p.generators
    if not gens:
        raise InputError("document has no generators")
    warning = None
    certified = False
    if "hypersurface" in p.doc:
        ideal = p.ideal
        try:
            split = splitting_data(ideal)
            mat, certified = split.basis, True
        except SplittingNotEstablishedError as exc:
            warning = str(exc)
            mat = syzygies(ideal.generators, ideal.degrees, modulus=ideal.ring.F,
                           max_pairs=p.args.max_pairs)
        gens = ideal.generators
    else:
        try:
            mat, certified = syzygies(gens, hilbert_burch=True, max_pairs=p.args.max_pairs), True
        except NotPrimaryError as exc:
            warning = str(exc)
            mat = syzygies(gens, max_pairs=p.args.max_pairs)
    b = list(mat.col_twists)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "syzygy",
        "generators": [str(g) for g in gens],
        "degrees": list(mat.row_twists),
        "columns": [[str(e) for e in col.entries] for col in mat.columns],
        "twists": b,
        "dual_twists": b if certified else None,
        "certified": certified,
        "warning": warning,
    }
    lines = [f"generators: {', '.join(out['generators'])}  degrees {out['degrees']}"]
    for col, t in zip(out["columns"], b):
        lines.append(f"  b={t:<4} ({', '.join(col)})")
    if certified:
        summ = " + ".join(f"O(-{t})" for t in b)
        lines.append(f"relation sheaf R(0) = {summ}; dual twists {b}; splitting certified")
    else:
        lines.append(f"warning: {warning}")
    return out, "\n".join(lines)


def _decision_payload(d):
    return {
        "verdict": d.verdict.value,
        "degree": d.degree,
        "steps": [{"tag": s.tag, "text": s.text} for s in d.steps],
        "caveat": d.caveat,
        "witnesses": [str(w) for w in d.witnesses] if d.witnesses else None,
        "forcing_class": ({"twists": list(d.forcing.twists),
                           "components": [str(c) for c in d.forcing.components]}
                          if d.forcing else None),
        "bounds": ({"inclusion": _bound(d.report.inclusion), "exclusion": _bound(d.report.exclusion)}
                   if d.report else None),
    }


def cmd_decide(p: Problem):
    text = p.args.element or p.doc.get("element")
    if not text:
        raise InputError("no candidate element (use --element or the 'element' key)")
    ctx = DecisionContext.build(p.ideal, flags=p.flags, max_denominator_exp=p.args.max_denominator_exp)
    d = decide(ctx, p.poly(text))
    out = {"schema_version": SCHEMA_VERSION, "command": "decide", "element": text,
           **_decision_payload(d)}
    lines = [f"{text} (degree {d.degree}): {d.verdict.value}"]
    for s in d.steps:
        lines.append(f"  [{s.tag}] {s.text}")
    if d.caveat:
        lines.append(f"caveat: {d.caveat}")
    return out, "\n".join(lines)


def cmd_sweep(p: Problem):
    if p.args.range:
        lo, hi = parse_range(p.args.range)
    elif "sweep" in p.doc:
        lo, hi = p.doc["sweep"]["lo"], p.doc["sweep"]["hi"]
    else:
        raise InputError("no sweep range (use --range or the 'sweep' key)")
    if lo > hi:
        raise InputError(f"empty range {lo}..{hi}")
    ctx = DecisionContext.build(p.ideal, flags=p.flags, max_denominator_exp=p.args.max_denominator_exp)
    rows = degree_sweep(ctx, lo, hi)
    out = {"schema_version": SCHEMA_VERSION, "command": "sweep",
           "twists": list(ctx.split.twists) if ctx.split else None,
           "rows": [{"degree": r.degree, "basis_size": r.basis_size, "counts": r.counts,
                     "examples": r.examples} for r in rows]}
    lines = []
    for r in rows:
        occurring = [k for k, v in r.counts.items() if v]
        counts = ", ".join(f"{k}={v}" for k, v in r.counts.items() if v)
        if r.counts["NotInTightClosure"] == 0 and r.counts["Undecided"] == 0:
            summary = "R_m in I*"
        elif r.counts["InTightClosureNotIdeal"] == 0 and r.counts["Undecided"] == 0:
            summary = "I* = I in this degree"
        elif len(occurring) >= 3:
            summary = "all possibilities occur"
        else:
            summary = "mixed"
        lines.append(f"m={r.degree}: {summary}  ({counts})")
    return out, "\n".join(lines)


def cmd_cohomology(p: Problem):
    doc = p.doc
    if "delta" in doc:
        delta = doc["delta"]
    elif "hypersurface" in doc:
        delta = p.poly(doc["hypersurface"]).homogeneous_degree()
    else:
        raise InputError("need a hypersurface or delta")
    lo, hi = parse_range(p.args.range) if p.args.range else (-5, 10)
    rows = cohomology_table(delta, lo, hi)
    out = {"schema_version": SCHEMA_VERSION, "command": "cohomology", "delta": delta,
           "genus": B.plane_genus(delta),
           "rows": [{"k": k, "h0": a, "h1": b} for k, a, b in rows]}
    lines = [f"delta={delta} genus={B.plane_genus(delta)}", "   k   h0   h1"]
    lines += [f"{k:>4} {a:>4} {b:>4}" for k, a, b in rows]
    return out, "\n".join(lines)


COMMANDS = {
    "bounds": cmd_bounds,
    "syzygy": cmd_syzygy,
    "decide": cmd_decide,
    "sweep": cmd_sweep,
    "cohomology": cmd_cohomology,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tightclosure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--input", "-i", default="-", help="problem document (JSON), '-' for stdin")
        sp.add_argument("--element", help="candidate element, overrides the document")
        sp.add_argument("--range", help="degree range lo..hi")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
        sp.add_argument("--max-denominator-exp", type=int, default=DEFAULT_MAX_DENOMINATOR_EXP)
    return parser


def _load(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read problem document: {exc}") from None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _load(args.input)
        if not isinstance(doc, dict):
            raise InputError("problem document must be a JSON object")
        problem = Problem(doc, args)
        out, text = COMMANDS[args.command](problem)
    except (InputError, ParseError, FieldMismatchError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularCurveError as exc:
        print(f"precondition failed: {exc}; the bounds subcommand still works with a genus override",
              file=sys.stderr)
        return EXIT_PRECONDITION
    except (NotPrimaryError, NoMonicCoordinateError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceExhaustedError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
