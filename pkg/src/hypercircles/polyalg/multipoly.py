"""Sparse multivariate polynomials keyed by exponent tuples.

Term order is graded lex with the first variable largest; it is used for
leading terms, exact division and rendering.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import FieldMismatchError, InexactDivisionError
from ..exactnum import NFElement, qdiv, qnorm, rat, render_rational
from .unipoly import coeff_field, is_rational_scalar, render_terms

__all__ = ["MultiPoly", "grlex_key", "normalize_jointly"]


def grlex_key(e):
    return (sum(e), e)


def _norm(c):
    if type(c) is Fraction:
        return qnorm(c)
    return c


class MultiPoly:
    __slots__ = ("terms", "vars")

    def __init__(self, terms=None, vars=("t",)):
        self.vars = tuple(vars)
        out = {}
        if terms:
            nv = len(self.vars)
            for e, c in terms.items():
                if c == 0:
                    continue
                if len(e) != nv:
                    raise ValueError("exponent vector length differs from variable count")
                out[tuple(e)] = _norm(c)
        self.terms = out

    # -- constructors
    @classmethod
    def const(cls, c, vars):
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, i, vars, coeff=1):
        e = [0] * len(vars)
        e[i] = 1
        return cls({tuple(e): coeff}, vars)

    @classmethod
    def gens(cls, vars):
        return [cls.var(i, vars) for i in range(len(vars))]

    @classmethod
    def from_unipoly(cls, p, vars=None):
        vars = vars or (p.var,)
        return cls({(k,): c for k, c in enumerate(p.coeffs)}, vars)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(other, self.vars)

    # -- queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), 0)

    @property
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def leading(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: grlex_key(ec[0]), reverse=True)

    def field(self):
        return coeff_field(self.terms.values())

    def is_rational(self):
        return all(is_rational_scalar(c) for c in self.terms.values())

    def to_rational(self):
        return MultiPoly({e: (c.rational() if isinstance(c, NFElement) else c)
                          for e, c in self.terms.items()}, self.vars)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if self.is_constant():
            return self.constant_value() == other
        return False

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic
    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] - c if e in out else -c
        return MultiPoly(out, self.vars)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly({}, self.vars)
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.vars)
        o = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    out[e] = out[e] + v
                else:
                    out[e] = v
        return MultiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_div(self, c):
        return MultiPoly({e: qdiv(v, c) for e, v in self.terms.items()}, self.vars)

    def exact_div(self, other) -> "MultiPoly":
        """Quotient of an exact division; raises InexactDivisionError otherwise."""
        if not isinstance(other, MultiPoly):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale_div(other)
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if o.is_constant():
            return self.scale_div(o.constant_value())
        le, lc = o.leading()
        rem = dict(self.terms)
        quo = {}
        others = [(e, c) for e, c in o.terms.items() if e != le]
        while rem:
            re = max(rem, key=grlex_key)
            if any(a < b for a, b in zip(re, le)):
                raise InexactDivisionError("multivariate division leaves a remainder")
            qe = tuple(a - b for a, b in zip(re, le))
            qc = qdiv(rem.pop(re), lc)
            quo[qe] = qc
            for e, c in others:
                k = tuple(a + b for a, b in zip(qe, e))
                v = rem.get(k, 0) - qc * c
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = _norm(v)
        return MultiPoly(quo, self.vars)

    # -- evaluation and substitution
    def evaluate(self, values):
        """Substitute ``values`` (any ring elements) for the variables."""
        if len(values) != len(self.vars):
            raise ValueError("arity mismatch")
        cache = [dict() for _ in values]

        def pw(i, k):
            d = cache[i]
            if k not in d:
                d[k] = values[i] ** k if k else None
            return d[k]

        acc = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = pw(i, k) * term if not isinstance(term, (int, Fraction)) else term * pw(i, k)
            acc = term + acc if isinstance(acc, int) and acc == 0 else acc + term
        return acc

    def homogeneous_substitute(self, numerators, denominator, degree=None):
        """f(P_0/E, ..., P_k/E) * E^deg, for polynomials P_i, E in one ring."""
        deg = self.total_degree if degree is None else degree
        if self.is_zero():
            return denominator * 0
        npow = [[None] for _ in numerators]
        epow = [denominator ** 0]

        def p(i, k):
            lst = npow[i]
            while len(lst) <= k:
                lst.append(numerators[i] if len(lst) == 1 else lst[-1] * numerators[i])
            return lst[k]

        def ep(k):
            while len(epow) <= k:
                epow.append(epow[-1] * denominator)
            return epow[k]

        acc = denominator * 0
        for e, c in self.terms.items():
            term = ep(deg - sum(e))
            for i, k in enumerate(e):
                if k:
                    term = term * p(i, k)
            acc = acc + term * c
        return acc

    def rename(self, vars):
        return MultiPoly(self.terms, vars)

    def homogenize(self, var="h"):
        d = self.total_degree
        return MultiPoly({e + (d - sum(e),): c for e, c in self.terms.items()}, self.vars + (var,))

    def dehomogenize(self, index=-1):
        """Set the variable at ``index`` to 1."""
        nv = len(self.vars)
        idx = index % nv
        out = {}
        for e, c in self.terms.items():
            k = e[:idx] + e[idx + 1:]
            out[k] = out[k] + c if k in out else c
        return MultiPoly(out, self.vars[:idx] + self.vars[idx + 1:])

    def homogeneous_component(self, d):
        return MultiPoly({e: c for e, c in self.terms.items() if sum(e) == d}, self.vars)

    # -- number-field helpers
    def alpha_split(self, field):
        """Components f_j over Q with f = sum f_j alpha^j."""
        n = field.degree
        comps = [dict() for _ in range(n)]
        for e, c in self.terms.items():
            if isinstance(c, NFElement):
                if c.field != field:
                    raise FieldMismatchError("coefficient from another field")
                for j, x in enumerate(c.coords):
                    if x:
                        comps[j][e] = x
            else:
                comps[0][e] = c
        return [MultiPoly(d, self.vars) for d in comps]

    @classmethod
    def from_alpha(cls, components, field):
        vars = components[0].vars
        out = {}
        for j, comp in enumerate(components):
            for e, c in comp.terms.items():
                coords = out.setdefault(e, [0] * field.degree)
                coords[j] = coords[j] + c
        return cls({e: NFElement(field, v) for e, v in out.items()}, vars)

    def over(self, field):
        return MultiPoly({e: field(c) for e, c in self.terms.items()}, self.vars)

    # -- normalization
    def content(self):
        vals = [Fraction(c) for c in self.terms.values()]
        num = 0
        den = 1
        for v in vals:
            num = math.gcd(num, v.numerator)
            den = math.lcm(den, v.denominator)
        return Fraction(num, den) if num else Fraction(0)

    def normalized(self):
        """Content 1 and positive leading coefficient (rational coefficients)."""
        if self.is_zero():
            return self
        c = self.content()
        if Fraction(self.leading()[1]) < 0:
            c = -c
        return self.scale_div(c)

    # -- rendering
    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        def mono(e):
            parts = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    parts.append(v)
                elif k > 1:
                    parts.append(f"{v}^{k}")
            return "*".join(parts)

        return render_terms(((grlex_key(e), c) for e, c in self.terms.items()),
                            lambda key: mono(key[1]))

    def to_json(self):
        terms = []
        for e, c in self.sorted_terms():
            if isinstance(c, NFElement):
                terms.append([list(e), c.to_json()])
            else:
                terms.append([list(e), render_rational(c)])
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json(cls, data, field=None):
        terms = {}
        for e, c in data["terms"]:
            terms[tuple(e)] = field.element([rat(x) for x in c]) if isinstance(c, list) else rat(c)
        return cls(terms, tuple(data["vars"]))


def normalize_jointly(polys):
    """Scale a list of rational polynomials by one common scalar.

    The scalar makes the combined content 1 and the leading coefficient of
    the first nonzero polynomial positive.  Returns (scaled polys, scalar).
    """
    num = 0
    den = 1
    first = None
    for p in polys:
        for c in p.terms.values():
            f = Fraction(c)
            num = math.gcd(num, f.numerator)
            den = math.lcm(den, f.denominator)
        if first is None and p:
            first = p
    if first is None:
        return list(polys), Fraction(1)
    scalar = Fraction(num, den)
    if Fraction(first.leading()[1]) < 0:
        scalar = -scalar
    return [p.scale_div(scalar) for p in polys], scalar
