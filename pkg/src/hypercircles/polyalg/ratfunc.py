"""Univariate rational functions with gcd-normalized, monic denominators."""

from __future__ import annotations

from ..exactnum import NFElement, qdiv
from .unipoly import UniPoly, poly_gcd

__all__ = ["RatFunc"]


def _as_poly(x, var):
    if isinstance(x, UniPoly):
        return x
    return UniPoly((x,), var)


class RatFunc:
    """num/den in one variable; gcd(num, den) = 1 and den is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var="t", *, reduce=True):
        num = _as_poly(num, var)
        den = _as_poly(den, num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = UniPoly((1,), num.var)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num = UniPoly([qdiv(c, lc) for c in num.coeffs], num.var)
                den = den.monic()
        self.num = num
        self.den = den

    @property
    def var(self):
        return self.num.var

    @classmethod
    def x(cls, var="t"):
        return cls(UniPoly.x(var), 1)

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        return RatFunc(_as_poly(other, self.var), 1)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if self.den.degree == 0:
            return self.num == other
        return False

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def evaluate(self, x):
        """Value at x; raises ZeroDivisionError at a pole."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        n = self.num(x)
        if isinstance(n, NFElement) or isinstance(d, NFElement):
            return n / d if isinstance(n, NFElement) else d.field(n) / d
        return qdiv(n, d)

    __call__ = evaluate

    def compose(self, g: "RatFunc") -> "RatFunc":
        """self(g) computed through homogeneous evaluation."""
        g = self._lift(g)
        deg = max(self.num.degree, self.den.degree)
        n = self.num.homogeneous_eval(g.num, g.den, deg)
        d = self.den.homogeneous_eval(g.num, g.den, deg)
        return RatFunc(n, d)

    def field(self):
        return self.num.field() or self.den.field()

    def is_rational(self):
        return self.num.is_rational() and self.den.is_rational()

    def to_rational(self):
        return RatFunc(self.num.to_rational(), self.den.to_rational())

    def over(self, field):
        return RatFunc(self.num.over(field), self.den.over(field))

    def degree(self):
        return max(self.num.degree, self.den.degree)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def ratfunc_const(c, var="t"):
    return RatFunc(UniPoly((c,), var), 1)

