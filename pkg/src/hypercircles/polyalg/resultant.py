"""Sylvester resultants and norms of polynomials over a number field."""

from __future__ import annotations

from ..errors import HypercircleError
from ..exactnum import qdiv
from .multipoly import MultiPoly
from .unipoly import UniPoly

__all__ = ["sylvester_matrix", "det_bareiss", "resultant_y", "norm_and_cofactor", "norm_of"]


def _exact(a, b):
    if isinstance(a, (MultiPoly, UniPoly)):
        return a.exact_div(b)
    return qdiv(a, b)


def sylvester_matrix(p: UniPoly, q: UniPoly, zero=0):
    """Sylvester matrix of p and q, rows of p first, coefficients high to low."""
    m, k = p.degree, q.degree
    if m < 0 or k < 0:
        raise ValueError("Sylvester matrix of a zero polynomial")
    size = m + k
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(k):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - k - 1 - i))
    return rows


def det_bareiss(mat, one=1):
    """Fraction-free determinant; every intermediate division is exact."""
    n = len(mat)
    if n == 0:
        return one
    a = [list(r) for r in mat]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return one * 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                v = row_i[j] * piv - aik * row_k[j]
                row_i[j] = v if prev == 1 else _exact(v, prev)
            row_i[k] = one * 0
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def resultant_y(p: UniPoly, q: UniPoly):
    """Res_y(p, q) for polynomials in y with coefficients in a common ring.

    Coefficients may be rationals or :class:`MultiPoly` values; scalars are
    lifted to constant polynomials when any coefficient is a MultiPoly.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant with a zero polynomial")
    vars_ = None
    for c in p.coeffs + q.coeffs:
        if isinstance(c, MultiPoly):
            vars_ = c.vars
            break
    if vars_ is None:
        one, zero = 1, 0
        lift = lambda c: c
    else:
        one = MultiPoly.const(1, vars_)
        zero = MultiPoly({}, vars_)
        lift = lambda c: c if isinstance(c, MultiPoly) else MultiPoly.const(c, vars_)
    P = UniPoly([lift(c) for c in p.coeffs], "y")
    Q = UniPoly([lift(c) for c in q.coeffs], "y")
    if P.degree == 0 and Q.degree == 0:
        return one
    return det_bareiss(sylvester_matrix(P, Q, zero), one)


def _as_y_poly(D: MultiPoly, field):
    """Replace alpha by a fresh variable y: a UniPoly in y over Q[vars]."""
    comps = D.alpha_split(field)
    return UniPoly(comps, "y")


def norm_of(D: MultiPoly, field) -> MultiPoly:
    """The product of the conjugates of D, computed as Res_y(M_alpha(y), D(y))."""
    if D.is_zero():
        raise ZeroDivisionError("norm of the zero polynomial")
    Dy = _as_y_poly(D, field)
    if Dy.degree == 0:
        return Dy[0] ** field.degree
    My = UniPoly(field.minpoly, "y")
    return resultant_y(My, Dy)


def norm_and_cofactor(D: MultiPoly, field):
    """(N, C) with N over Q, C over the field, and D * C = N.

    When D already has rational coefficients the pair (D, 1) is returned.
    """
    if D.is_zero():
        raise ZeroDivisionError("zero denominator")
    if D.is_rational():
        Dq = D.to_rational()
        return Dq, MultiPoly.const(field.one, D.vars)
    N = norm_of(D, field)
    if N.is_zero():
        raise HypercircleError("denominator is a zero divisor modulo the minimal polynomial")
    Dl = MultiPoly({e: field(c) for e, c in D.terms.items()}, D.vars)
    C = N.over(field).exact_div(Dl)
    return N, C

