"""Command-line front end.

Every subcommand reads one JSON job (``--in FILE`` or standard input) and
writes one JSON document (``--out FILE`` or standard output), except
``sample`` which writes CSV.  A job looks like::

    {"schema": 1,
     "field": {"minpoly": ["2", "2", "0", "1"]},
     "unit": {"a": ["0", "1"], "b": ["0", "-1"], "c": ["0", "1"], "d": ["0", "1"]}}

Rationals are strings "p/q"; field elements are arrays of rationals on the
power basis.  ``--field FILE`` supplies (or overrides) the field.

Exit codes: 0 success, 2 malformed job, 3 mathematical precondition
violated, 4 inconclusive certification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import geometry, hypercircle, weil
from .errors import (
    HypercircleError,
    InconclusiveError,
    ReducibleFieldError,
    SchemaError,
    StageError,
)
from .exactnum import Irreducibility
from .serialize import (
    SCHEMA,
    parse_field,
    parse_parametrization,
    parse_point,
    parse_rational,
    parse_ratfunc,
    parse_unit,
    render_parametrization,
    render_ratfunc,
)

EXIT_SCHEMA = 2
EXIT_PRECONDITION = 3
EXIT_INCONCLUSIVE = 4


class Job:
    def __init__(self, data, field_override=None):
        if not isinstance(data, dict):
            raise SchemaError("job must be a JSON object")
        if data.get("schema", SCHEMA) != SCHEMA:
            raise SchemaError(f"unsupported schema {data.get('schema')!r}")
        self.data = data
        fdata = field_override if field_override is not None else data.get("field")
        if fdata is None:
            raise SchemaError("no field given (job 'field' or --field)")
        self.field = parse_field(fdata)

    def need(self, key):
        if key not in self.data:
            raise SchemaError(f"job is missing '{key}'")
        return self.data[key]

    def unit(self, key="unit"):
        return parse_unit(self.need(key), self.field)

    def parametrization(self):
        """The job's parametrization, or the one generated by its unit."""
        if "parametrization" in self.data:
            return parse_parametrization(self.data["parametrization"], self.field)
        if "unit" in self.data:
            return hypercircle.parametrize_unit(self.unit(), self.field)
        raise SchemaError("job needs 'parametrization' or 'unit'")

    def ratfuncs(self, key):
        val = self.need(key)
        if not isinstance(val, list) or not val:
            raise SchemaError(f"'{key}' must be a non-empty array of rational functions")
        return [parse_ratfunc(f, self.field) for f in val]


def _head(cmd, job):
    return {"schema": SCHEMA, "command": cmd, "field": job.field.to_json()}


def _parse_grid(text):
    if text is None:
        return None
    try:
        vals = [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad --grid value: {text!r}") from exc
    if not vals:
        raise SchemaError("--grid is empty")
    return tuple(vals)


# subcommands; each returns (document, exit code)

def cmd_param(job, opts):
    phi = hypercircle.parametrize_unit(job.unit(), job.field)
    return dict(_head("param", job), parametrization=render_parametrization(phi)), 0


def cmd_reduce(job, opts):
    rf = hypercircle.reduced_form(job.unit(), job.field)
    L = job.field
    return dict(_head("reduce", job), unit=rf.unit.to_json(),
                lambda1=L(rf.lambda1).to_json(), lambda2=L(rf.lambda2).to_json()), 0


def cmd_isline(job, opts):
    return dict(_head("isline", job), is_line=hypercircle.is_line(job.unit())), 0


def cmd_degree(job, opts):
    u = job.unit()
    return dict(_head("degree", job), degree=hypercircle.hc_degree(u, job.field),
                primitive=hypercircle.is_primitive(u, job.field)), 0


def cmd_infinity(job, opts):
    P = hypercircle.points_at_infinity_principal(job.field)
    return dict(_head("infinity", job), point=P.to_json(job.field)), 0


def cmd_invmap(job, opts):
    u = job.unit()
    X = parse_point(job.need("point"))
    if len(X) != job.field.degree:
        raise SchemaError("point has the wrong number of coordinates")
    t = hypercircle.inverse_point_map(u, X, job.field)
    return dict(_head("invmap", job), parameter=job.field(t).to_json()), 0


def cmd_threepoints(job, opts):
    pts = job.need("points")
    if not isinstance(pts, list) or len(pts) != 3:
        raise SchemaError("'points' must hold exactly three points")
    X = [parse_point(p) for p in pts]
    if any(len(p) != job.field.degree for p in X):
        raise SchemaError("points have the wrong number of coordinates")
    u = hypercircle.unit_through_three_points(*X, job.field)
    return dict(_head("threepoints", job), unit=u.to_json()), 0


def cmd_normalform(job, opts):
    rf = hypercircle.reduced_form(job.unit(), job.field)
    aff = geometry.normal_curve_affine_map(rf.unit, job.field)
    proj = geometry.normal_curve_projective_map(rf.unit, job.field)
    return dict(_head("normalform", job), reduced_unit=rf.unit.to_json(),
                affine=aff.to_json(), projective=proj.to_json()), 0


def cmd_implicitize(job, opts):
    phi = job.parametrization()
    system = geometry.implicitize_normal(phi)
    doc = dict(_head("implicitize", job), parametrization=render_parametrization(phi))
    doc.update(system.to_json())
    doc["field"] = job.field.to_json()
    doc["vanish"] = geometry.generators_vanish(system, phi)
    return doc, 0


def cmd_invunit_eqs(job, opts):
    rs, s = geometry.inverse_unit_equations(job.unit(), job.field)
    return dict(_head("invunit-eqs", job), r=[p.to_json() for p in rs], s=s.to_json(),
                display={"r": [str(p) for p in rs], "s": str(s)}), 0


def cmd_equiv(job, opts):
    res = geometry.affine_equivalence_witness(job.unit("unit1"), job.unit("unit2"), job.field)
    doc = dict(_head("equiv", job), tau=res.tau.to_json() if res.tau else None,
               definitive=res.definitive, exact_root=res.exact_root)
    return doc, 0 if res.definitive else EXIT_INCONCLUSIVE


def cmd_embed(job, opts):
    rf = hypercircle.reduced_form(job.unit(), job.field)
    emb = geometry.embed_nonprimitive(rf.unit, job.field)
    return dict(_head("embed", job), reduced_unit=rf.unit.to_json(), witness=emb.witness.to_json(),
                subfield=emb.subfield.to_json(), subunit=emb.unit.to_json(),
                parametrization=render_parametrization(emb.parametrization)), 0


def cmd_verify(job, opts):
    phi = job.parametrization()
    h = opts.height if opts.height is not None else 8
    u = geometry.verify_hypercircle(phi, height=h)
    doc = dict(_head("verify", job), hypercircle=u is not None, unit=u.to_json() if u else None)
    return doc, 0 if u is not None else EXIT_INCONCLUSIVE


def cmd_descente(job, opts):
    W = weil.descente(job.ratfuncs("eta"), job.field)
    return dict(_head("descente", job), system=W.to_json()), 0


def cmd_repar(job, opts):
    out = weil.reparametrize(job.ratfuncs("eta"), job.unit(), job.field)
    return dict(_head("repar", job), eta=[render_ratfunc(f) for f in out]), 0


def cmd_pipeline(job, opts):
    eta = job.ratfuncs("eta")
    cand = job.need("candidate")
    if isinstance(cand, dict):
        psi = parse_parametrization(cand, job.field)
    else:
        psi = job.ratfuncs("candidate")
    h = opts.height if opts.height is not None else 4
    try:
        res = weil.pipeline(eta, psi, job.field, height=h, grid=_parse_grid(opts.grid))
    except StageError as exc:
        if exc.stage == "certify":
            raise InconclusiveError(str(exc)) from exc
        raise
    opts.timings = res.timings
    return dict(_head("pipeline", job), unit=res.unit.to_json(),
                eta=[render_ratfunc(f) for f in res.eta_q], report=res.report), 0


def _decimal(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        out = d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    s = format(out, "f")
    return "0" + s[2:] if s.startswith("-0") and set(s[2:]) <= {".", "0"} else s


def cmd_sample(job, opts):
    phi = job.parametrization()
    lo, hi = (parse_rational(x) for x in job.data.get("range", ["-5", "5"]))
    steps = job.data.get("steps", 200)
    if not isinstance(steps, int) or isinstance(steps, bool) or steps < 1 or hi <= lo:
        raise SchemaError("'steps' must be a positive integer and the range increasing")
    digits = opts.digits
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t"] + [f"X{i}" for i in range(phi.n)])
    for k in range(steps + 1):
        t = lo + (hi - lo) * Fraction(k, steps)
        try:
            pt = phi.evaluate(t)
        except ZeroDivisionError:
            continue
        w.writerow([_decimal(Fraction(t), digits)] + [_decimal(Fraction(x), digits) for x in pt])
    return buf.getvalue(), 0


COMMANDS = {
    "param": cmd_param,
    "reduce": cmd_reduce,
    "isline": cmd_isline,
    "degree": cmd_degree,
    "infinity": cmd_infinity,
    "invmap": cmd_invmap,
    "threepoints": cmd_threepoints,
    "normalform": cmd_normalform,
    "implicitize": cmd_implicitize,
    "invunit-eqs": cmd_invunit_eqs,
    "equiv": cmd_equiv,
    "embed": cmd_embed,
    "verify": cmd_verify,
    "descente": cmd_descente,
    "repar": cmd_repar,
    "pipeline": cmd_pipeline,
    "sample": cmd_sample,
}


def build_parser():
    p = argparse.ArgumentParser(prog="hypercircles", description="Exact hypercircle computations.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--field", metavar="FILE", help="JSON field descriptor {\"minpoly\": [...]}")
    p.add_argument("--in", dest="infile", metavar="FILE", help="job file (default: stdin)")
    p.add_argument("--out", metavar="FILE", help="output file (default: stdout)")
    p.add_argument("--height", type=int, metavar="N", help="height bound for rational point search")
    p.add_argument("--digits", type=int, default=12, metavar="N", help="decimal digits for sample")
    p.add_argument("--grid", metavar="LIST", help="comma-separated rationals for the parameter grid")
    p.add_argument("--report", metavar="FILE", help="write a timings JSON here (per stage for pipeline)")
    return p


def _load_json(path, stream):
    try:
        if path is None:
            return json.load(stream)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    opts = build_parser().parse_args(argv)
    opts.timings = None
    try:
        if opts.digits < 0:
            raise SchemaError("--digits must be non-negative")
        if opts.height is not None and opts.height < 1:
            raise SchemaError("--height must be positive")
        fdata = _load_json(opts.field, None) if opts.field else None
        job = Job(_load_json(opts.infile, stdin), fdata)
        t0 = time.perf_counter()
        doc, code = COMMANDS[opts.command](job, opts)
        elapsed = time.perf_counter() - t0
    except SchemaError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except ReducibleFieldError as exc:
        print(f"error: {exc}", file=stderr)
        unknown = exc.certificate.status is Irreducibility.UNKNOWN
        return EXIT_INCONCLUSIVE if unknown else EXIT_PRECONDITION
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=stderr)
        return EXIT_INCONCLUSIVE
    except (HypercircleError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    text = doc if isinstance(doc, str) else dumps(doc)
    if opts.out:
        with open(opts.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if opts.report:
        rep = {"command": opts.command, "seconds": round(elapsed, 6)}
        if opts.timings:
            rep["stages"] = {k: round(v, 6) for k, v in opts.timings.items()}
        with open(opts.report, "w", encoding="utf-8") as fh:
            fh.write(dumps(rep))
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
