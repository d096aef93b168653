"""Moebius units (at+b)/(ct+d) and splitting into alpha-components."""

from __future__ import annotations

from ..errors import DegenerateUnitError, FieldMismatchError
from ..exactnum import NFElement, qdiv, qnorm, rat, render_rational
from .multipoly import MultiPoly
from .ratfunc import RatFunc
from .resultant import norm_and_cofactor
from .unipoly import UniPoly, coeff_field

__all__ = ["MoebiusUnit", "moebius_compose", "moebius_invert", "alpha_components", "recombine"]


def _scalar(x):
    if isinstance(x, NFElement):
        return x.rational() if x.is_rational() else x
    return qnorm(rat(x)) if not isinstance(x, int) else x


class MoebiusUnit:
    """u(t) = (a t + b)/(c t + d) with ad - bc != 0.

    Coefficients are rationals or elements of one number field.  Equality is
    projective: two units are equal when their coefficient vectors are
    proportional.
    """

    __slots__ = ("a", "b", "c", "d", "field")

    def __init__(self, a, b, c, d, field=None):
        vals = [_scalar(x) for x in (a, b, c, d)]
        f = field or coeff_field(vals)
        if f is not None:
            for v in vals:
                if isinstance(v, NFElement) and v.field != f:
                    raise FieldMismatchError("unit coefficients from different fields")
            vals = [f(v) for v in vals]
        self.a, self.b, self.c, self.d = vals
        self.field = f
        if self.det == 0:
            raise DegenerateUnitError("ad - bc = 0: not a unit")

    @classmethod
    def identity(cls, field=None):
        return cls(1, 0, 0, 1, field)

    @classmethod
    def from_json(cls, data, field=None):
        def parse(v):
            if isinstance(v, list):
                if field is None:
                    if len(v) != 1:
                        raise FieldMismatchError("unit coordinates need a field")
                    return rat(v[0])
                return NFElement(field, [rat(x) for x in v])
            return rat(v)

        return cls(*(parse(data[k]) for k in "abcd"), field=field)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def is_polynomial(self):
        return self.c == 0

    def is_rational(self):
        return all(not isinstance(x, NFElement) or x.is_rational() for x in self.coeffs)

    def over(self, field):
        return MoebiusUnit(*self.coeffs, field=field)

    def __call__(self, t):
        den = self.c * t + self.d
        if den == 0:
            raise ZeroDivisionError("pole of the unit")
        num = self.a * t + self.b
        if isinstance(den, NFElement) or isinstance(num, NFElement):
            return (num if isinstance(num, NFElement) else den.field(num)) / den
        return qdiv(num, den)

    def at_infinity(self):
        """u(oo) = a/c, or None for a polynomial unit (the point at infinity)."""
        if self.c == 0:
            return None
        return qdiv(self.a, self.c)

    def as_ratfunc(self, var="t"):
        return RatFunc(UniPoly((self.b, self.a), var), UniPoly((self.d, self.c), var))

    def normalized(self):
        """Representative with c = 1, or d = 1 when c = 0."""
        s = self.c if self.c != 0 else self.d
        return MoebiusUnit(*(qdiv(x, s) for x in self.coeffs), field=self.field)

    def __eq__(self, other):
        if not isinstance(other, MoebiusUnit):
            return NotImplemented
        a1, b1, c1, d1 = self.coeffs
        a2, b2, c2, d2 = other.coeffs
        # proportional iff all 2x2 minors vanish
        return (a1 * b2 == a2 * b1 and a1 * c2 == a2 * c1 and a1 * d2 == a2 * d1
                and b1 * c2 == b2 * c1 and b1 * d2 == b2 * d1 and c1 * d2 == c2 * d1)

    def __hash__(self):
        return hash(self.normalized().coeffs)

    def __repr__(self):
        return f"MoebiusUnit({self})"

    def __str__(self):
        return f"({UniPoly((self.b, self.a))})/({UniPoly((self.d, self.c))})"

    def to_json(self):
        out = {}
        for k, v in zip("abcd", self.coeffs):
            if self.field is not None:
                out[k] = self.field(v).to_json()
            else:
                out[k] = [render_rational(v)]
        return out


def moebius_compose(u: MoebiusUnit, w: MoebiusUnit) -> MoebiusUnit:
    """u(w(t)): the product of the coefficient matrices."""
    f = u.field or w.field
    if u.field is not None and w.field is not None and u.field != w.field:
        raise FieldMismatchError("units over different fields")
    a1, b1, c1, d1 = u.coeffs
    a2, b2, c2, d2 = w.coeffs
    return MoebiusUnit(a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                       c1 * a2 + d1 * c2, c1 * b2 + d1 * d2, field=f)


def moebius_invert(u: MoebiusUnit) -> MoebiusUnit:
    """(-d t + b)/(c t - a)."""
    return MoebiusUnit(-u.d, u.b, u.c, -u.a, field=u.field)


def alpha_components(f: RatFunc, field):
    """Rational functions f_0, ..., f_{n-1} over Q with f = sum f_i alpha^i.

    The denominator is first made rational by multiplying numerator and
    denominator with the cofactor of its norm.
    """
    num, den = f.num, f.den
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    for c in num.coeffs + den.coeffs:
        if isinstance(c, NFElement) and c.field != field:
            raise FieldMismatchError("function is defined over another field")
    var = num.var
    D = MultiPoly.from_unipoly(den, (var,))
    N, C = norm_and_cofactor(D, field)
    top = MultiPoly.from_unipoly(num, (var,)) * C
    parts = top.alpha_split(field)
    Nu = _to_uni(N, var)
    return [RatFunc(_to_uni(p, var), Nu) for p in parts]


def _to_uni(p: MultiPoly, var):
    d = p.total_degree
    out = [0] * (d + 1) if d >= 0 else []
    for e, c in p.terms.items():
        out[e[0]] = c.rational() if isinstance(c, NFElement) else c
    return UniPoly(out, var)


def recombine(components, field) -> RatFunc:
    """sum f_i alpha^i as a rational function over the field."""
    acc = RatFunc(UniPoly((field.zero,), components[0].var), 1)
    for i, fi in enumerate(components):
        acc = acc + fi * (field.gen ** i)
    return acc
