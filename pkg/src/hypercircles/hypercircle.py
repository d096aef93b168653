"""Hypercircles: the curves traced in Q^n by Moebius units over Q(alpha)."""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .errors import FieldMismatchError, PreconditionError, UnreachablePointError
from .exactnum import NFElement, NumberField, min_poly_over_Q, qdiv, rat, render_rational
from .polyalg import MoebiusUnit, RatFunc, UniPoly, moebius_invert, poly_gcd

__all__ = [
    "Parametrization",
    "ProjectivePoint",
    "ReducedForm",
    "parametrize_unit",
    "reduced_form",
    "is_line",
    "hc_degree",
    "is_primitive",
    "points_at_infinity_principal",
    "m_alpha",
    "inverse_point_map",
    "inverse_point_map_symbolic",
    "unit_through_three_points",
    "unit_of",
    "same_hypercircle",
    "tangent_infinity_check",
    "multiplication_matrix",
    "coords_of",
]


def coords_of(x, field: NumberField):
    """Coordinates of a scalar on the power basis."""
    return list(field(x).coords)


def multiplication_matrix(lam, field: NumberField):
    """Matrix of w -> lam*w on the power basis (columns are lam*alpha^i)."""
    cols = [coords_of(field(lam) * field.gen ** i, field) for i in range(field.degree)]
    return [list(r) for r in zip(*cols)]


class Parametrization:
    """(p_0/M, ..., p_{n-1}/M) over Q with M monic and no common factor.

    ``unit`` records the Moebius unit the curve came from, when known.
    """

    __slots__ = ("field", "numerators", "denominator", "unit")

    def __init__(self, field: NumberField, numerators: Sequence, denominator, unit=None, var="t"):
        nums = [p if isinstance(p, UniPoly) else UniPoly(p, var) for p in numerators]
        den = denominator if isinstance(denominator, UniPoly) else UniPoly(denominator, var)
        if len(nums) != field.degree:
            raise FieldMismatchError("need one numerator per basis element")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        nums = [p.to_rational() for p in nums]
        den = den.to_rational()
        g = den
        for p in nums:
            g = poly_gcd(g, p)
        if g.degree > 0:
            nums = [p.exact_div(g) for p in nums]
            den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            nums = [UniPoly([qdiv(c, lc) for c in p.coeffs], p.var) for p in nums]
            den = den.monic()
        self.field = field
        self.numerators = tuple(nums)
        self.denominator = den
        self.unit = unit

    @classmethod
    def from_ratfuncs(cls, field, funcs, unit=None):
        """Bring Q-rational functions to a common monic denominator."""
        den = UniPoly((1,), funcs[0].var)
        for f in funcs:
            den = den * f.den.exact_div(poly_gcd(den, f.den))
        nums = [f.num * den.exact_div(f.den) for f in funcs]
        return cls(field, nums, den, unit)

    @property
    def n(self):
        return self.field.degree

    @property
    def var(self):
        return self.denominator.var

    @property
    def degree(self):
        """max(deg p_i, deg M)."""
        return max([self.denominator.degree] + [p.degree for p in self.numerators])

    def components(self):
        return [RatFunc(p, self.denominator) for p in self.numerators]

    def recombine(self) -> RatFunc:
        """sum p_i alpha^i / M in Q(alpha)(t)."""
        a = self.field.gen
        num = UniPoly((), self.var)
        for i, p in enumerate(self.numerators):
            num = num + p * (a ** i)
        return RatFunc(num, self.denominator.over(self.field))

    def evaluate(self, t):
        d = self.denominator(t)
        if d == 0:
            raise ZeroDivisionError("parameter is a root of the denominator")
        return tuple(_div(p(t), d) for p in self.numerators)

    def compose(self, tau: MoebiusUnit) -> "Parametrization":
        """phi(tau(t)) for a unit tau over Q."""
        g = tau.as_ratfunc(self.var)
        return Parametrization.from_ratfuncs(self.field, [f.compose(g) for f in self.components()])

    def __eq__(self, other):
        return (isinstance(other, Parametrization) and self.field == other.field
                and self.numerators == other.numerators and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.field, self.numerators, self.denominator))

    def __repr__(self):
        return "Parametrization(" + ", ".join(str(f) for f in self.components()) + ")"

    def to_json(self):
        out = {
            "field": self.field.to_json(),
            "numerators": [[render_rational(c) for c in p.coeffs] for p in self.numerators],
            "denominator": [render_rational(c) for c in self.denominator.coeffs],
            "display": [str(f) for f in self.components()],
        }
        if self.unit is not None:
            out["unit"] = self.unit.to_json()
        return out

    @classmethod
    def from_json(cls, data, field=None):
        field = field or NumberField.from_json(data["field"])
        nums = [UniPoly([rat(c) for c in p]) for p in data["numerators"]]
        den = UniPoly([rat(c) for c in data["denominator"]])
        unit = MoebiusUnit.from_json(data["unit"], field) if data.get("unit") else None
        return cls(field, nums, den, unit)


def _div(a, b):
    if isinstance(a, NFElement) or isinstance(b, NFElement):
        return a / b if isinstance(a, NFElement) else b.field(a) / b
    return qdiv(a, b)


class ProjectivePoint:
    """Homogeneous coordinates scaled so that the first nonzero one is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = list(coords)
        k = next((i for i, c in enumerate(cs) if c != 0), None)
        if k is None:
            raise ValueError("all homogeneous coordinates are zero")
        s = cs[k]
        self.coords = tuple(_div(c, s) if c != 0 else 0 for c in cs)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"

    def to_json(self, field):
        return [field(c).to_json() for c in self.coords]


def _field_of(u: MoebiusUnit, field):
    f = field or u.field
    if f is None:
        raise PreconditionError("a number field is required")
    if u.field is not None and u.field != f:
        raise FieldMismatchError("unit is defined over another field")
    return f


def parametrize_unit(u: MoebiusUnit, field: Optional[NumberField] = None) -> Parametrization:
    """The parametrization of the hypercircle generated by u.

    With c != 0, M is the minimal polynomial of -d/c and m = M/(ct+d); the
    numerators are the alpha-components of (at+b)m.  With c = 0 the curve is
    the line traced by (a/d)t + b/d.
    """
    L = _field_of(u, field)
    a, b, c, d = (L(x) for x in u.coeffs)
    t = UniPoly.x()
    if c == 0:
        s, k = a / d, b / d
        nums = [UniPoly((k.coords[i], s.coords[i])) for i in range(L.degree)]
        return Parametrization(L, nums, UniPoly((1,)), MoebiusUnit(a, b, c, d))
    M = UniPoly(min_poly_over_Q(-d / c))
    m = M.exact_div(c * t + d)
    top = (a * t + b) * m
    nums = [UniPoly([L(x).coords[i] for x in top.coeffs]) for i in range(L.degree)]
    return Parametrization(L, nums, M, MoebiusUnit(a, b, c, d))


class ReducedForm(NamedTuple):
    unit: MoebiusUnit
    lambda1: object
    lambda2: object


def reduced_form(u: MoebiusUnit, field=None) -> ReducedForm:
    """u = lambda1 * u_star + lambda2 with u_star = 1/(t + d/c), or t when c = 0."""
    L = _field_of(u, field)
    a, b, c, d = (L(x) for x in u.coeffs)
    if c == 0:
        return ReducedForm(MoebiusUnit(1, 0, 0, 1, L), a / d, b / d)
    return ReducedForm(MoebiusUnit(0, 1, 1, d / c, L), (b * c - a * d) / (c * c), a / c)


def is_line(u: MoebiusUnit) -> bool:
    if u.c == 0:
        return True
    r = qdiv(-u.d, u.c)
    return not isinstance(r, NFElement) or r.is_rational()


def hc_degree(u: MoebiusUnit, field=None) -> int:
    if u.c == 0:
        return 1
    L = _field_of(u, field)
    return len(min_poly_over_Q(-L(u.d) / L(u.c))) - 1


def is_primitive(u: MoebiusUnit, field=None) -> bool:
    L = _field_of(u, field)
    return hc_degree(u, L) == L.degree


def m_alpha(field: NumberField) -> UniPoly:
    """M_alpha(t)/(t - alpha) in L[t]."""
    return UniPoly(field.minpoly).exact_div(UniPoly((-field.gen, 1)))


def points_at_infinity_principal(field: NumberField) -> ProjectivePoint:
    """[l_0 : ... : l_{n-1} : 0] read off M_alpha(t)/(t - alpha)."""
    if field.degree < 2:
        raise PreconditionError("points at infinity need a field of degree >= 2")
    m = m_alpha(field)
    return ProjectivePoint([field(m[i]) for i in range(field.degree)] + [field.zero])


def inverse_point_map(u: MoebiusUnit, X, field=None):
    """Parameter of the point X: v(sum X_i alpha^i) with v the inverse unit."""
    L = _field_of(u, field)
    if len(X) != L.degree:
        raise FieldMismatchError("point has the wrong number of coordinates")
    S = sum((L(x) * L.gen ** i for i, x in enumerate(X)), L.zero)
    a, b, c, d = (L(x) for x in u.coeffs)
    den = c * S - a
    if den == 0:
        raise UnreachablePointError("the point u(oo) has no finite parameter")
    val = (-d * S + b) / den
    return val.rational() if val.is_rational() else val


def inverse_point_map_symbolic(u: MoebiusUnit, phi: Parametrization) -> RatFunc:
    """v(sum phi_i alpha^i) as a rational function; equals t for the curve of u."""
    L = _field_of(u, phi.field)
    v = moebius_invert(u.over(L)).as_ratfunc(phi.var)
    return v.compose(phi.recombine())


def unit_through_three_points(X1, X2, X3, field: NumberField) -> MoebiusUnit:
    """The unit u with u(0) = Y1, u(1) = Y2, u(oo) = Y3, Y_i = sum X_ij alpha^j."""
    Y1, Y2, Y3 = (sum((field(x) * field.gen ** j for j, x in enumerate(X)), field.zero)
                  for X in (X1, X2, X3))
    if Y1 == Y2 or Y1 == Y3 or Y2 == Y3:
        raise PreconditionError("the three points must be pairwise distinct")
    return MoebiusUnit(Y1 * Y3 - Y3 * Y2, Y1 * Y2 - Y1 * Y3, Y1 - Y2, Y2 - Y3, field)


def unit_of(phi: Parametrization) -> Optional[MoebiusUnit]:
    """The generating unit of phi: its provenance, or its recombination when
    that recombination is a Moebius unit."""
    if phi.unit is not None:
        return phi.unit
    r = phi.recombine()
    return _as_unit(r, phi.field)


def _as_unit(r: RatFunc, field) -> Optional[MoebiusUnit]:
    if r.num.degree > 1 or r.den.degree > 1:
        return None
    try:
        return MoebiusUnit(r.num[1], r.num[0], r.den[1], r.den[0], field)
    except PreconditionError:
        return None


def same_hypercircle(phi: Parametrization, psi: Parametrization) -> Optional[MoebiusUnit]:
    """A unit tau over Q with phi(tau(t)) = psi(t), or None.

    The inverse of tau is P_psi(phi(t)), the inverse point map of psi
    applied to phi.  Only psi needs a known generating unit.
    """
    if phi.field != psi.field:
        return None
    v = unit_of(psi)
    if v is None:
        return None
    tau = inverse_point_map_symbolic(v, phi)
    if not tau.is_rational():
        return None
    tau = tau.to_rational()
    w = _as_unit(tau, None)
    if w is None:
        return None
    if psi.compose(w) != Parametrization(phi.field, phi.numerators, phi.denominator):
        return None
    return moebius_invert(w).normalized()


def tangent_infinity_check(phi: Parametrization) -> bool:
    """gcd(M' p_{n-1} - M p'_{n-1}, M) = 1."""
    M = phi.denominator
    p = phi.numerators[-1]
    w = M.derivative() * p - M * p.derivative()
    return poly_gcd(w, M).degree == 0

