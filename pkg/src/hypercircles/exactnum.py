"""Exact rationals and the number field L = Q[x]/(M).

Rationals are :class:`fractions.Fraction`; hot loops keep integral values as
plain ``int`` (see :func:`qnorm`) because ``int`` arithmetic is much cheaper.
"""

from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import FieldMismatchError, HypercircleError, ReducibleFieldError

__all__ = [
    "Fraction",
    "rat",
    "qnorm",
    "qdiv",
    "render_rational",
    "NumberField",
    "NFElement",
    "min_poly_over_Q",
    "Irreducibility",
    "IrreducibilityResult",
    "certify_irreducible",
    "rational_roots",
]


def rat(x) -> Fraction:
    """Parse ``x`` (int, Fraction, or a ``"p/q"`` string) into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational string")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def qnorm(x):
    """Return ``x`` as an int when it is integral, else as a Fraction."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def qdiv(a, b):
    """Exact division of scalars (rationals or number-field elements)."""
    if type(a) is int and type(b) is int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return qnorm(Fraction(a) / b)
    return a / b


def render_rational(x) -> str:
    """Canonical ``"p/q"`` rendering: reduced, positive denominator."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


# -- dense helpers over Q, coefficient lists low to high ----------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _psub(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)
                  for i in range(n)])


def _pdivmod(p, q):
    p = _trim(p)
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [0] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    lc = q[-1]
    while len(rem) >= len(q):
        k = len(rem) - len(q)
        c = qdiv(rem[-1], lc)
        quo[k] = c
        for j, b in enumerate(q):
            rem[k + j] -= c * b
        rem = _trim(rem)
        rem = [qnorm(x) for x in rem]
    return _trim(quo), rem


def _pmonic(p):
    p = _trim(p)
    lc = p[-1]
    return [qdiv(c, lc) for c in p]


def _pgcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _pmonic(p) if p else []


def _pgcdex(p, q):
    """Return (g, s) with g = gcd(p, q) monic and s*p = g mod q."""
    r0, r1 = _trim(p), _trim(q)
    s0, s1 = [1], []
    while r1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(s0, _pmul(quo, s1))
    lc = r0[-1]
    return [qdiv(c, lc) for c in r0], [qdiv(c, lc) for c in s0]


def _pderiv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- number fields -------------------------------------------------------------


class NumberField:
    """The field Q(alpha) with alpha a root of a monic irreducible polynomial.

    ``minpoly`` lists coefficients low to high.  Construction refuses
    polynomials that are not monic, not squarefree, or not certified
    irreducible.  Pass ``check=False`` only for polynomials known to be
    minimal (e.g. the output of :func:`min_poly_over_Q`).
    """

    __slots__ = ("minpoly", "degree", "_key", "_powers")

    def __init__(self, minpoly: Sequence, *, check: bool = True, budget: int = 200_000):
        coeffs = tuple(qnorm(rat(c)) for c in minpoly)
        coeffs = tuple(_trim(coeffs))
        if len(coeffs) < 2:
            raise HypercircleError("a number field needs a minimal polynomial of degree >= 1")
        if coeffs[-1] != 1:
            raise HypercircleError("minimal polynomial must be monic")
        if check:
            cert = certify_irreducible(coeffs, budget=budget)
            if cert.status is not Irreducibility.IRREDUCIBLE:
                raise ReducibleFieldError(coeffs, cert)
        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self._key = coeffs
        self._powers = None

    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return hash(("NumberField", self._key))

    def __repr__(self):
        return f"NumberField({[render_rational(c) for c in self.minpoly]})"

    def __str__(self):
        return f"Q[a]/({_render_dense(self.minpoly, 'a')})"

    # element constructors
    def element(self, coords) -> "NFElement":
        return NFElement(self, coords)

    def __call__(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field != self:
                raise FieldMismatchError("element belongs to another field")
            return x
        if isinstance(x, (int, Fraction, str)):
            return NFElement(self, [rat(x)])
        return NFElement(self, x)

    @property
    def gen(self) -> "NFElement":
        """The primitive element alpha."""
        if self.degree == 1:
            return NFElement(self, [-self.minpoly[0]])
        return NFElement(self, [0, 1])

    @property
    def one(self) -> "NFElement":
        return NFElement(self, [1])

    @property
    def zero(self) -> "NFElement":
        return NFElement(self, [])

    def basis(self):
        return [NFElement(self, [0] * i + [1]) for i in range(self.degree)]

    def _reduce(self, coeffs):
        """Reduce a dense coefficient list modulo the minimal polynomial."""
        n = self.degree
        m = self.minpoly
        c = list(coeffs)
        for k in range(len(c) - 1, n - 1, -1):
            top = c[k]
            if top == 0:
                continue
            base = k - n
            for i in range(n):
                if m[i]:
                    c[base + i] -= top * m[i]
        c = c[:n]
        return tuple(qnorm(x) for x in c) + (0,) * (n - len(c))

    def to_json(self):
        return {"minpoly": [render_rational(c) for c in self.minpoly]}

    @classmethod
    def from_json(cls, data, **kw):
        return cls([rat(c) for c in data["minpoly"]], **kw)


class NFElement:
    """An element of a :class:`NumberField` in the power basis of alpha."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        n = field.degree
        cs = [qnorm(rat(c)) if not isinstance(c, int) else c for c in coords]
        if len(cs) > n:
            cs = list(field._reduce(cs))
        self.field = field
        self.coords = tuple(cs) + (0,) * (n - len(cs))

    # -- coercion
    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise FieldMismatchError("operands belong to different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [other])
        return None

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.coords[0])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field, self.coords))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [a * other for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        n = len(a)
        prod = [0] * (2 * n - 1)
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n):
                if b[j]:
                    prod[i + j] += ai * b[j]
        return NFElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.is_rational():
            return NFElement(self.field, [qdiv(1, self.coords[0])])
        g, s = _pgcdex(_trim(self.coords), list(self.field.minpoly))
        if g != [1]:
            raise HypercircleError("minimal polynomial is not irreducible")
        return NFElement(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NFElement(self.field, [qdiv(a, other) for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"NFElement({str(self)})"

    def __str__(self):
        return _render_dense(self.coords, "a")

    def to_json(self):
        return [render_rational(c) for c in self.coords]


def _render_dense(coeffs, var):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- minimal polynomials -------------------------------------------------------


def min_poly_over_Q(beta: NFElement) -> tuple:
    """Monic minimal polynomial of ``beta`` over Q, coefficients low to high.

    Finds the least r with 1, beta, ..., beta^r linearly dependent by
    incremental Gaussian elimination on coordinate vectors.
    """
    n = beta.field.degree
    # each row: (reduced vector, combination of powers that produced it)
    rows = []  # list of (pivot, vec, comb)
    power = beta.field.one
    for r in range(n + 1):
        vec = list(power.coords)
        comb = [0] * r + [1]
        for pivot, pvec, pcomb in rows:
            f = vec[pivot]
            if f:
                vec = [qnorm(x - f * y) for x, y in zip(vec, pvec)]
                comb = [qnorm((comb[i] if i < len(comb) else 0) - f * (pcomb[i] if i < len(pcomb) else 0))
                        for i in range(max(len(comb), len(pcomb)))]
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is None:
            # comb . (1, beta, ..., beta^r) = 0 with comb[r] = 1
            comb = comb + [0] * (r + 1 - len(comb))
            return tuple(comb[: r + 1])
        lead = vec[piv]
        rows.append((piv, [qdiv(x, lead) for x in vec], [qdiv(x, lead) for x in comb]))
        power = power * beta
    raise AssertionError("powers of an element of a degree-n field must be dependent by r = n")


# -- irreducibility ------------------------------------------------------------


class Irreducibility(enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


class IrreducibilityResult(NamedTuple):
    status: Irreducibility
    factor: tuple | None = None  # monic proper factor over Q, low to high

    def __str__(self):
        if self.status is Irreducibility.REDUCIBLE:
            return f"reducible (factor {_render_dense(self.factor, 't')})"
        return self.status.value


def _integral_monic(p):
    """Scale monic p(t) in Q[t] to monic q(s) in Z[s] with s = D t."""
    D = 1
    for c in p:
        D = math.lcm(D, Fraction(c).denominator)
    n = len(p) - 1
    q = [int(Fraction(c) * D ** (n - i)) for i, c in enumerate(p)]
    return q, D


class _OverBudget(Exception):
    pass


def _divisors(m, limit=None):
    m = abs(m)
    r = math.isqrt(m)
    if limit is not None and r > limit:
        raise _OverBudget
    small = [d for d in range(1, r + 1) if m % d == 0]
    ds = sorted(set(small + [m // d for d in small]))
    return ds + [-d for d in ds]


def _interpolate_monic(xs, vals, k):
    """Integer coefficients b_0..b_{k-1} of the monic g with g(x_i) = vals_i, or None."""
    # solve the Vandermonde system for h = g - s^k of degree < k (Lagrange form)
    coeffs = [Fraction(0)] * k
    for i, xi in enumerate(xs):
        yi = vals[i] - xi ** k
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for m in range(len(basis) - 1):
                basis[m] -= xj * basis[m + 1]
            denom *= xi - xj
        for m in range(k):
            coeffs[m] += basis[m] * yi / denom
    if any(c.denominator != 1 for c in coeffs):
        return None
    return [int(c) for c in coeffs]


def certify_irreducible(p: Sequence, budget: int = 200_000) -> IrreducibilityResult:
    """Decide irreducibility over Q of a monic polynomial (low to high).

    Strategy: squarefree test, rational-root test, then a bounded search for
    monic integer factors of degree <= deg/2 (Kronecker interpolation on
    divisor values, filtered by the Mignotte coefficient bound).  Returns
    UNKNOWN once more than ``budget`` candidates would be examined.
    """
    p = _trim(rat(c) for c in p)
    if len(p) < 2:
        raise ValueError("irreducibility of a constant is undefined")
    if p[-1] != 1:
        raise ValueError("certify_irreducible expects a monic polynomial")
    p = [qnorm(c) for c in p]
    n = len(p) - 1
    if n == 1:
        return IrreducibilityResult(Irreducibility.IRREDUCIBLE)
    g = _pgcd(p, _pderiv(p))
    if len(g) > 1:
        return IrreducibilityResult(Irreducibility.REDUCIBLE, tuple(g))
    q, D = _integral_monic(p)

    def back(gs):
        # g(s) with s = D t, made monic in t
        k = len(gs) - 1
        return tuple(qnorm(Fraction(c) * Fraction(D) ** i / Fraction(D) ** k) for i, c in enumerate(gs))

    if q[0] == 0:
        return IrreducibilityResult(Irreducibility.REDUCIBLE, back([0, 1]))
    try:
        return _kronecker(q, n, budget, back)
    except _OverBudget:
        return IrreducibilityResult(Irreducibility.UNKNOWN)


def _kronecker(q, n, budget, back):
    for r in _divisors(q[0], budget):
        if _peval(q, r) == 0:
            return IrreducibilityResult(Irreducibility.REDUCIBLE, back([-r, 1]))
    if n <= 3:
        return IrreducibilityResult(Irreducibility.IRREDUCIBLE)

    norm2 = math.isqrt(sum(c * c for c in q)) + 1
    points = sorted(itertools.islice((x for x in _small_ints() if _peval(q, x) != 0), n + 4),
                    key=lambda x: (abs(_peval(q, x)), abs(x)))
    work = 0
    for k in range(2, n // 2 + 1):
        xs = points[:k]
        choices = [_divisors(_peval(q, x), budget) for x in xs]
        total = math.prod(len(c) for c in choices)
        if work + total > budget:
            return IrreducibilityResult(Irreducibility.UNKNOWN)
        work += total
        bound = [math.comb(k, j) * norm2 for j in range(k)]
        for vals in itertools.product(*choices):
            b = _interpolate_monic(xs, vals, k)
            if b is None or any(abs(bj) > bound[j] for j, bj in enumerate(b)):
                continue
            cand = b + [1]
            if cand[0] == 0 or q[0] % cand[0]:
                continue
            if not _pdivmod(q, cand)[1]:
                return IrreducibilityResult(Irreducibility.REDUCIBLE, back(cand))
    return IrreducibilityResult(Irreducibility.IRREDUCIBLE)


def rational_roots(p: Sequence) -> list:
    """Distinct rational roots of a nonzero polynomial (low to high), sorted."""
    p = _trim(rat(c) for c in p)
    if not p:
        raise ValueError("every rational is a root of the zero polynomial")
    den = math.lcm(*(Fraction(c).denominator for c in p))
    q = [int(c * den) for c in p]
    roots = set()
    while q and q[0] == 0:
        roots.add(0)
        q = q[1:]
    if len(q) > 1:
        for a in _divisors(q[0]):
            for b in _divisors(q[-1]):
                if b <= 0:
                    continue
                for x in (Fraction(a, b), Fraction(-a, b)):
                    if _peval(q, x) == 0:
                        roots.add(qnorm(x))
    return sorted(roots)


def _small_ints():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1
