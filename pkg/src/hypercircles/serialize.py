"""JSON encodings of fields, units, polynomials and rational functions.

Rationals are strings "p/q".  A number-field element is an array of such
strings (its coordinates on 1, a, a^2, ...); a bare string is a rational.
Univariate polynomials are coefficient arrays, low degree first.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError
from .exactnum import NFElement, NumberField, rat, render_rational
from .hypercircle import Parametrization
from .polyalg import MoebiusUnit, RatFunc, UniPoly

SCHEMA = 1


def parse_rational(x):
    try:
        if isinstance(x, bool):
            raise TypeError
        return rat(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not a rational: {x!r}") from exc


def parse_field(data):
    if not isinstance(data, dict) or "minpoly" not in data:
        raise SchemaError("field must be an object with a 'minpoly' array")
    mp = data["minpoly"]
    if not isinstance(mp, list) or len(mp) < 2:
        raise SchemaError("'minpoly' must list at least two coefficients")
    return NumberField([parse_rational(c) for c in mp])


def parse_scalar(x, field):
    if isinstance(x, list):
        if field is None:
            if len(x) == 1:
                return parse_rational(x[0])
            raise SchemaError("field elements need a field")
        if len(x) > field.degree:
            raise SchemaError("too many coordinates for the field")
        return NFElement(field, [parse_rational(c) for c in x])
    return parse_rational(x)


def render_scalar(x, field=None):
    if isinstance(x, NFElement):
        return x.to_json()
    if field is not None:
        return field(x).to_json()
    return render_rational(x)


def parse_unit(data, field):
    if not isinstance(data, dict) or any(k not in data for k in "abcd"):
        raise SchemaError("unit must be an object with keys a, b, c, d")
    return MoebiusUnit(*(parse_scalar(data[k], field) for k in "abcd"), field=field)


def parse_poly(data, field=None, var="t"):
    if not isinstance(data, list):
        raise SchemaError("polynomial must be a coefficient array")
    return UniPoly([parse_scalar(c, field) for c in data], var)


def render_poly(p: UniPoly, field=None):
    return [render_scalar(c, field) if isinstance(c, NFElement) else render_rational(c) for c in p.coeffs]


def parse_ratfunc(data, field=None):
    if not isinstance(data, dict) or "num" not in data:
        raise SchemaError("rational function must be an object with 'num' (and 'den')")
    num = parse_poly(data["num"], field)
    den = parse_poly(data.get("den", ["1/1"]), field)
    if den.is_zero():
        raise SchemaError("zero denominator")
    return RatFunc(num, den)


def render_ratfunc(f: RatFunc):
    return {"num": render_poly(f.num), "den": render_poly(f.den), "display": str(f)}


def parse_parametrization(data, field):
    if not isinstance(data, dict) or "numerators" not in data or "denominator" not in data:
        raise SchemaError("parametrization needs 'numerators' and 'denominator'")
    nums = [parse_poly(p) for p in data["numerators"]]
    den = parse_poly(data["denominator"])
    if len(nums) != field.degree:
        raise SchemaError("parametrization needs one numerator per field coordinate")
    if den.is_zero():
        raise SchemaError("zero denominator")
    for p in nums + [den]:
        if not p.is_rational():
            raise SchemaError("parametrization coefficients must be rational")
    unit = parse_unit(data["unit"], field) if data.get("unit") else None
    return Parametrization(field, nums, den, unit)


def render_parametrization(phi: Parametrization):
    out = {
        "numerators": [render_poly(p) for p in phi.numerators],
        "denominator": render_poly(phi.denominator),
        "display": [str(f) for f in phi.components()],
    }
    if phi.unit is not None:
        out["unit"] = phi.unit.to_json()
    return out


def parse_point(data):
    if not isinstance(data, list):
        raise SchemaError("point must be an array of rationals")
    return tuple(parse_rational(x) for x in data)


def render_point(p):
    return [render_rational(Fraction(x)) for x in p]
