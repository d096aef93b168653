"""Weil descent of parametrizations over Q(alpha) and reparametrization over Q."""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import HypercircleError, NotRationalizedError, PreconditionError, StageError
from .exactnum import NumberField, render_rational
from .geometry import stern_brocot, verify_hypercircle
from .hypercircle import Parametrization, parametrize_unit, unit_through_three_points
from .polyalg import MoebiusUnit, MultiPoly, RatFunc, UniPoly, alpha_components, norm_and_cofactor, poly_gcd

__all__ = [
    "WeilSystem",
    "PipelineResult",
    "DEFAULT_GRID",
    "descente",
    "verify_vanishing",
    "find_rational_points",
    "reparametrize",
    "pipeline",
    "common_denominator",
]

DEFAULT_GRID = (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))


class WeilSystem:
    """components[i][j] = q_ij and the rational denominator N with
    eta_i(sum t_j alpha^j) = sum_j q_ij alpha^j / N."""

    __slots__ = ("field", "components", "denominator")

    def __init__(self, field, components, denominator):
        self.field = field
        self.components = [list(row) for row in components]
        self.denominator = denominator

    @property
    def delta_set(self):
        return [q for row in self.components for q in row[1:]]

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "vars": list(self.denominator.vars),
            "components": [[q.to_json() for q in row] for row in self.components],
            "denominator": self.denominator.to_json(),
            "delta_set": [str(q) for q in self.delta_set],
        }


def common_denominator(funcs: Sequence[RatFunc]):
    """(numerators, E) with funcs[i] = numerators[i] / E and E the monic lcm."""
    den = UniPoly((1,), funcs[0].var)
    for f in funcs:
        den = den * f.den.exact_div(poly_gcd(den, f.den))
    return [f.num * den.exact_div(f.den) for f in funcs], den


def _subst(p: UniPoly, S: MultiPoly) -> MultiPoly:
    acc = MultiPoly({}, S.vars)
    for c in reversed(p.coeffs):
        acc = acc * S + c
    return acc


def descente(eta: Sequence[RatFunc], field: NumberField, prefix="t") -> WeilSystem:
    """Substitute t = sum t_j alpha^j, rationalize the denominator by its
    norm and split every coordinate into alpha-components."""
    n = field.degree
    vars_ = tuple(f"{prefix}{j}" for j in range(n))
    T = MultiPoly.gens(vars_)
    S = MultiPoly({}, vars_)
    for j in range(n):
        S = S + T[j] * (field.gen ** j)
    nums, E = common_denominator(list(eta))
    D = _subst(E, S)
    N, C = norm_and_cofactor(D, field)
    comps = []
    for p in nums:
        top = _subst(p, S) * C
        comps.append(top.alpha_split(field))
    return WeilSystem(field, comps, N.to_rational())


def verify_vanishing(polys: Sequence[MultiPoly], param: Sequence) -> bool:
    """True when every polynomial vanishes on the given rational functions
    (or constants), after clearing denominators."""
    funcs = [f if isinstance(f, RatFunc) else RatFunc(UniPoly((f,)), 1) for f in param]
    for p in polys:
        if len(p.vars) != len(funcs):
            raise PreconditionError("arity mismatch between polynomials and parametrization")
    nums, E = common_denominator(funcs)
    for p in polys:
        if p.is_zero():
            continue
        if not p.homogeneous_substitute(nums, E, p.total_degree).is_zero():
            return False
    return True


def find_rational_points(phi, height: int = 4, grid: Optional[Sequence] = None, field=None, limit=None):
    """Distinct points with rational coordinates on a parametrized curve.

    For a :class:`Parametrization` over Q the parameter runs over rationals
    of height <= ``height``.  For a list of rational functions over a
    number field it runs over sum c_j alpha^j with every c_j in ``grid``;
    only points whose coordinates are all rational are kept.
    """
    pts = []

    def add(p):
        if p not in pts:
            pts.append(p)
        return limit is not None and len(pts) >= limit

    if isinstance(phi, Parametrization):
        for q in stern_brocot(height):
            try:
                p = phi.evaluate(q)
            except ZeroDivisionError:
                continue
            if add(tuple(p)):
                break
        return pts
    funcs = list(phi)
    L = field or next((f.field() for f in funcs if f.field() is not None), None)
    if L is None:
        raise PreconditionError("a number field is required for this parametrization")
    g = tuple(DEFAULT_GRID if grid is None else grid)
    basis = [L.gen ** j for j in range(L.degree)]
    for cs in itertools.product(g, repeat=L.degree):
        t = sum((basis[j] * c for j, c in enumerate(cs)), L.zero)
        try:
            vals = [f.evaluate(t) for f in funcs]
        except ZeroDivisionError:
            continue
        vals = [L(v) for v in vals]
        if all(v.is_rational() for v in vals):
            if add(tuple(v.rational() for v in vals)):
                break
    return pts


def reparametrize(eta: Sequence[RatFunc], u: MoebiusUnit, field: Optional[NumberField] = None):
    """eta(u(t)) as rational functions over Q."""
    L = field or u.field or next((f.field() for f in eta if f.field() is not None), None)
    if L is None:
        g = u.as_ratfunc()
        return [f.compose(g) for f in eta]
    g = u.over(L).as_ratfunc()
    out = []
    for f in eta:
        h = f.over(L).compose(g)
        comps = alpha_components(h, L)
        if any(not c.is_zero() for c in comps[1:]):
            raise NotRationalizedError("unit does not rationalize this curve")
        out.append(comps[0])
    return out


class PipelineResult(NamedTuple):
    unit: MoebiusUnit
    eta_q: list
    report: dict
    timings: dict


def pipeline(eta: Sequence[RatFunc], psi_candidate, field: NumberField, *, height: int = 4,
             grid: Optional[Sequence] = None) -> PipelineResult:
    """Reparametrize eta over Q using a candidate parametrization of its
    Weil curve.

    Stages: descente (the candidate must satisfy the delta equations),
    points (three rational points on the candidate), unit (interpolation
    through them), certify (the unit's curve lies on the Weil curve and is
    a hypercircle), reparametrize.  A failing stage raises
    :class:`StageError` carrying its name.
    """
    report = {"stages": []}
    timings = {}
    n = field.degree

    def run(name, fn):
        t0 = time.perf_counter()
        try:
            out, info = fn()
        except (HypercircleError, ZeroDivisionError) as exc:
            report["stages"].append({"stage": name, "status": "failed", "detail": str(exc)})
            raise StageError(name, str(exc)) from exc
        finally:
            timings[name] = time.perf_counter() - t0
        report["stages"].append(dict({"stage": name, "status": "ok"}, **info))
        return out

    cand = psi_candidate.components() if isinstance(psi_candidate, Parametrization) else list(psi_candidate)

    def st_descente():
        W = descente(eta, field)
        if not verify_vanishing(W.delta_set, cand):
            raise PreconditionError("candidate does not satisfy the descent equations")
        return W, {"equations": len(W.delta_set)}

    W = run("descente", st_descente)

    def st_points():
        pts = find_rational_points(psi_candidate, height=height, grid=grid, field=field, limit=3)
        if len(pts) < 3:
            raise PreconditionError(f"found only {len(pts)} rational points")
        return pts, {"points": [[render_rational(x) for x in p] for p in pts]}

    pts = run("points", st_points)

    def st_unit():
        u = unit_through_three_points(*pts, field)
        if u.is_rational():
            # every unit over Q generates the rational axis, as t does
            u = MoebiusUnit.identity(field)
        return u, {"unit": u.to_json()}

    u = run("unit", st_unit)

    def st_certify():
        phi = parametrize_unit(u)
        if not verify_vanishing(W.delta_set, phi.components()):
            raise PreconditionError("the unit's curve is not contained in the Weil variety")
        if phi.degree == n and verify_hypercircle(phi, height=max(height, 8)) is None:
            raise PreconditionError("not certified as a hypercircle")
        return phi, {"degree": phi.degree}

    run("certify", st_certify)

    def st_repar():
        out = reparametrize(eta, u, field)
        return out, {"eta": [str(f) for f in out]}

    eta_q = run("reparametrize", st_repar)
    return PipelineResult(u, eta_q, report, timings)
