"""Dense univariate polynomials over Q, a number field, or a polynomial ring."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import InexactDivisionError
from ..exactnum import NFElement, qdiv, qnorm

__all__ = ["UniPoly", "poly_gcd", "exact_div", "poly_compose", "coeff_field", "is_rational_scalar"]


def is_rational_scalar(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return True
    if isinstance(c, NFElement):
        return c.is_rational()
    return False


def coeff_field(coeffs):
    """The number field of the first NFElement among ``coeffs`` (or None)."""
    for c in coeffs:
        if isinstance(c, NFElement):
            return c.field
    return None


def _norm(c):
    if type(c) is Fraction:
        return qnorm(c)
    return c


class UniPoly:
    """Polynomial with coefficients listed from low to high degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "t"):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def x(cls, var="t"):
        return cls((0, 1), var)

    @classmethod
    def const(cls, c, var="t"):
        return cls((c,), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly((other,), self.var)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if self.degree <= 0:
            return self[0] == other
        return False

    def __hash__(self):
        if self.degree <= 0:
            return hash(self[0])
        return hash(self.coeffs)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] + o[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] - o[i] for i in range(n)], self.var)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if other == 0:
                return UniPoly((), self.var)
            return UniPoly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        field = coeff_field(a) or coeff_field(b)
        if field is not None and _plain(a) and _plain(b):
            return UniPoly(_nf_convolve(a, b, field), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lc = o.lc
        quo = [0] * max(len(rem) - dq, 0)
        while len(rem) > dq:
            k = len(rem) - 1 - dq
            c = qdiv(rem[-1], lc)
            quo[k] = c
            for j in range(dq + 1):
                rem[k + j] = _norm(rem[k + j] - c * o.coeffs[j])
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quo, self.var), UniPoly(rem, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lc
        return UniPoly([qdiv(c, lc) for c in self.coeffs], self.var)

    def scale(self, c) -> "UniPoly":
        return UniPoly([x * c for x in self.coeffs], self.var)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, q: "UniPoly") -> "UniPoly":
        acc = UniPoly((), q.var)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def homogeneous_eval(self, p, q, degree=None):
        """Sum of c_k p^k q^(deg-k): the homogenization evaluated at (p, q)."""
        deg = self.degree if degree is None else degree
        if self.is_zero():
            return p * 0
        qpow = [None] * (deg + 1)
        qpow[0] = q ** 0
        for i in range(1, deg + 1):
            qpow[i] = qpow[i - 1] * q
        acc = p * 0
        ppow = p ** 0
        for k in range(deg + 1):
            c = self[k]
            if c != 0:
                acc = acc + ppow * qpow[deg - k] * c
            ppow = ppow * p
        return acc

    def map(self, f, var=None) -> "UniPoly":
        return UniPoly([f(c) for c in self.coeffs], var or self.var)

    def field(self):
        return coeff_field(self.coeffs)

    def is_rational(self) -> bool:
        return all(is_rational_scalar(c) for c in self.coeffs)

    def to_rational(self) -> "UniPoly":
        return UniPoly([c.rational() if isinstance(c, NFElement) else c for c in self.coeffs], self.var)

    def over(self, field) -> "UniPoly":
        """Coefficients coerced into ``field``."""
        return UniPoly([field(c) for c in self.coeffs], self.var)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return render_terms(((k, c) for k, c in enumerate(self.coeffs)), lambda k: _mono(self.var, k))


def _plain(cs):
    return all(isinstance(c, (int, Fraction, NFElement)) for c in cs)


def _int_coords(cs, n):
    """Integer coordinate rows and their common denominator."""
    rows = []
    den = 1
    for c in cs:
        row = c.coords if isinstance(c, NFElement) else (c,) + (0,) * (n - 1)
        rows.append(row)
        for x in row:
            if type(x) is Fraction:
                den = math.lcm(den, x.denominator)
    if den == 1:
        return rows, 1
    return [tuple(int(x * den) for x in row) for row in rows], den


def _nf_convolve(a, b, field):
    """Product of coefficient lists over a number field, done in integers."""
    n = field.degree
    A, da = _int_coords(a, n)
    B, db = _int_coords(b, n)
    out = [[0] * (2 * n - 1) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(A):
        xs = [(p, xp) for p, xp in enumerate(x) if xp]
        if not xs:
            continue
        for j, y in enumerate(B):
            row = out[i + j]
            for q, yq in enumerate(y):
                if yq:
                    for p, xp in xs:
                        row[p + q] += xp * yq
    den = da * db
    res = []
    for row in out:
        red = field._reduce(row)
        if den != 1:
            red = [Fraction(v, den) if v else 0 for v in red]
        res.append(NFElement(field, red))
    return res


def _mono(var, k):
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def render_coeff(c):
    """String for a coefficient and whether it needs parentheses."""
    if isinstance(c, NFElement):
        if c.is_rational():
            return str(Fraction(c.coords[0]))
        return f"({c})"
    return str(c)


def render_terms(items, mono):
    """Render (key, coeff) pairs highest first as a signed sum."""
    parts = []
    for k, c in sorted(items, key=lambda kc: kc[0], reverse=True):
        if c == 0:
            continue
        m = mono(k)
        if isinstance(c, NFElement) and not c.is_rational():
            body = f"({c})" + (f"*{m}" if m else "")
            parts.append(("+", body))
            continue
        if isinstance(c, NFElement):
            c = c.coords[0]
        c = Fraction(c)
        mag = abs(c)
        if m and mag == 1:
            body = m
        elif m:
            body = f"{mag}*{m}"
        else:
            body = str(mag)
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field (zero if both are zero)."""
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def exact_div(p: UniPoly, q: UniPoly) -> UniPoly:
    return p.exact_div(q)


def poly_compose(p: UniPoly, q: UniPoly) -> UniPoly:
    return p.compose(q)
