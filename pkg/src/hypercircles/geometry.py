"""Normal-curve transforms, implicit equations, equivalence and embeddings."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from . import linalg
from .errors import HypercircleError, PreconditionError
from .exactnum import NFElement, NumberField, min_poly_over_Q, rational_roots, render_rational
from .hypercircle import (
    Parametrization,
    hc_degree,
    parametrize_unit,
    points_at_infinity_principal,
    same_hypercircle,
    unit_through_three_points,
)
from .polyalg import MoebiusUnit, MultiPoly, UniPoly, moebius_invert, norm_and_cofactor, normalize_jointly, poly_gcd

__all__ = [
    "TransformWitness",
    "QuadricSystem",
    "AffineEquivalence",
    "Embedding",
    "normal_curve_affine_map",
    "normal_curve_projective_map",
    "implicitize_normal",
    "inverse_unit_equations",
    "affine_equivalence_witness",
    "embed_nonprimitive",
    "verify_hypercircle",
    "generators_vanish",
    "rational_points_of",
    "stern_brocot",
]


class TransformWitness:
    """A rational matrix certifying a transform.

    ``kind`` is "affine" (n x n), "projective" ((n+1) x (n+1)) or
    "embedding" (n x r).  ``selected`` lists the coordinates chosen as the
    independent ones, in order.
    """

    __slots__ = ("matrix", "kind", "selected", "rank")

    def __init__(self, matrix, kind, selected=(), rank=None):
        self.matrix = [list(r) for r in matrix]
        self.kind = kind
        self.selected = tuple(selected)
        self.rank = rank if rank is not None else linalg.rank(self.matrix)
        if kind in ("affine", "projective"):
            if len(self.matrix) != len(self.matrix[0]) or self.rank != len(self.matrix):
                raise HypercircleError("transform matrix is not invertible")

    def apply(self, vec):
        return linalg.matvec(self.matrix, vec)

    def to_json(self):
        return {
            "kind": self.kind,
            "matrix": [[render_rational(x) for x in row] for row in self.matrix],
            "selected": list(self.selected),
        }


def _require_reduced(u: MoebiusUnit):
    if u.c == 0 or u.a != 0 or u.b != u.c:
        raise PreconditionError("unit must be in reduced form 1/(t + d)")


def _coeff_rows(polys, width):
    return [[p[k] for k in range(width)] for p in polys]


def normal_curve_affine_map(u: MoebiusUnit, field: Optional[NumberField] = None) -> TransformWitness:
    """Rational n x n matrix carrying the curve of 1/(t+d) onto
    (1/M, t/M, ..., t^(r-1)/M, 0, ..., 0)."""
    _require_reduced(u)
    phi = parametrize_unit(u, field)
    n = phi.n
    r = phi.denominator.degree
    if r < 2:
        raise PreconditionError("the hypercircle is a line")
    rows = _coeff_rows(phi.numerators, r)
    sel = linalg.independent_columns([list(c) for c in zip(*rows)])
    rest = [i for i in range(n) if i not in sel]
    B = [rows[i] for i in sel]
    Binv = linalg.inverse(B)
    # rows[rest] = A * rows[sel]
    A = [linalg.solve([list(c) for c in zip(*B)], rows[i]) for i in rest]
    Q = [[0] * n for _ in range(n)]
    for k in range(r):
        for j in range(r):
            Q[k][sel[j]] = Binv[k][j]
    for k, i in enumerate(rest):
        Q[r + k][i] = 1
        for j in range(r):
            Q[r + k][sel[j]] = -A[k][j]
    return TransformWitness(Q, "affine", sel)


def normal_curve_projective_map(u: MoebiusUnit, field: Optional[NumberField] = None) -> TransformWitness:
    """Rational (n+1) x (n+1) matrix carrying [p_0 : ... : p_{n-1} : M]
    onto [1 : t : ... : t^r : 0 : ... : 0]."""
    _require_reduced(u)
    phi = parametrize_unit(u, field)
    n = phi.n
    r = phi.denominator.degree
    if r < 2:
        raise PreconditionError("the hypercircle is a line")
    rows = _coeff_rows(list(phi.numerators) + [phi.denominator], r + 1)
    sel = linalg.independent_columns([list(c) for c in zip(*rows[:n])])
    sel_full = list(sel) + [n]
    rest = [i for i in range(n) if i not in sel]
    B = [rows[i] for i in sel_full]
    Binv = linalg.inverse(B)
    A = [linalg.solve([list(c) for c in zip(*B)], rows[i]) for i in rest]
    Q = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(r + 1):
        for j in range(r + 1):
            Q[k][sel_full[j]] = Binv[k][j]
    for k, i in enumerate(rest):
        Q[r + 1 + k][i] = 1
        for j in range(r + 1):
            Q[r + 1 + k][sel_full[j]] = -A[k][j]
    return TransformWitness(Q, "projective", sel_full)


class QuadricSystem:
    """Quadrics cutting out a hypercircle.

    ``homogeneous`` lives in X_0..X_n, ``affine`` is its X_n = 1 form.
    ``matrix`` is the map Q carrying the parametrization onto the normal
    curve.
    """

    __slots__ = ("field", "homogeneous", "affine", "matrix")

    def __init__(self, field, homogeneous, matrix=None):
        self.field = field
        self.homogeneous = list(homogeneous)
        self.affine = [g.dehomogenize(-1) for g in self.homogeneous]
        self.matrix = matrix

    def __len__(self):
        return len(self.homogeneous)

    def degree2_span(self):
        """Rows spanning the Q-linear span of the affine generators, as
        coefficient vectors on a fixed monomial list."""
        return _span_rows(self.affine)

    def to_json(self):
        return {
            "field": self.field.to_json() if self.field else None,
            "homogeneous": [g.to_json() for g in self.homogeneous],
            "affine": [g.to_json() for g in self.affine],
            "display": [str(g) for g in self.affine],
        }


def _span_rows(polys):
    monos = sorted({e for p in polys for e in p.terms}, key=lambda e: (sum(e), e), reverse=True)
    rows = [[Fraction(p.terms.get(e, 0)) for e in monos] for p in polys]
    return monos, rows


def implicitize_normal(phi, field: Optional[NumberField] = None, coeff_field: Optional[NumberField] = None):
    """Quadric generators of a primitive hypercircle through the normal curve.

    ``phi`` is a :class:`Parametrization` or a pair (numerators, denominator)
    of polynomials whose coefficients may lie in ``coeff_field``; in that
    case each generator is split into its rational components.
    """
    if isinstance(phi, Parametrization):
        nums, den, field = list(phi.numerators), phi.denominator, phi.field
    else:
        nums, den = phi
        nums = list(nums)
    n = len(nums)
    if n < 2:
        raise PreconditionError("implicitization needs at least two coordinates")
    C = _coeff_rows(nums + [den], n + 1)
    if linalg.rank(C) != n + 1:
        raise PreconditionError("numerators and denominator are dependent: not a primitive hypercircle")
    Q = linalg.inverse(C)
    # T = (1, t, ..., t^n) satisfies C T = X, hence T = Q X
    xs = ["X%d" % i for i in range(n + 1)]
    X = MultiPoly.gens(xs)
    Y = []
    for k in range(n + 1):
        acc = MultiPoly({}, xs)
        for j in range(n + 1):
            if Q[k][j] != 0:
                acc = acc + X[j] * Q[k][j]
        Y.append(acc)
    gens = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = Y[i] * Y[j - 1] - Y[i - 1] * Y[j]
            if f.is_zero():
                continue
            if coeff_field is not None:
                parts = f.over(coeff_field).alpha_split(coeff_field)
            else:
                parts = [f.to_rational() if _has_nf(f) else f]
            gens.extend(p.normalized() for p in parts if not p.is_zero())
    return QuadricSystem(field, gens, Q)


def _has_nf(p):
    return any(isinstance(c, NFElement) for c in p.terms.values())


def generators_vanish(system: QuadricSystem, phi: Parametrization) -> bool:
    """Every homogeneous generator vanishes on [p_0 : ... : p_{n-1} : M]."""
    vals = list(phi.numerators) + [phi.denominator]
    for g in system.homogeneous:
        if not g.homogeneous_substitute(vals, UniPoly((1,)), g.total_degree).is_zero():
            return False
    return True


def inverse_unit_equations(u: MoebiusUnit, field: Optional[NumberField] = None):
    """(r_1, ..., r_{n-1}, s) with v(sum alpha^i X_i) = sum r_i alpha^i / s.

    v is the inverse of u; the denominator is made rational through its
    norm.  All returned polynomials share one normalizing scalar.  Their
    common zero set contains the hypercircle, possibly with extra
    components.
    """
    L = field or u.field
    if L is None:
        raise PreconditionError("a number field is required")
    v = moebius_invert(u.over(L))
    n = L.degree
    xs = ["X%d" % i for i in range(n)]
    X = MultiPoly.gens(xs)
    S = MultiPoly({}, xs)
    for i in range(n):
        S = S + X[i] * (L.gen ** i)
    num = S * v.a + v.b
    den = S * v.c + v.d
    N, C = norm_and_cofactor(den, L)
    top = (num * C) if not C.is_constant() else num * C.constant_value()
    parts = top.alpha_split(L)
    scaled, _ = normalize_jointly(parts[1:] + [N.to_rational()])
    return scaled[:-1], scaled[-1]


class AffineEquivalence(NamedTuple):
    """Outcome of the affine-unit search.

    ``tau`` is an affine unit over Q or None.  ``definitive`` is False when
    no affine unit exists but a non-affine one has not been ruled out.
    """

    tau: Optional[MoebiusUnit]
    definitive: bool
    exact_root: bool = False


def _pole(u: MoebiusUnit, L):
    return -L(u.d) / L(u.c)


def affine_equivalence_witness(u1: MoebiusUnit, u2: MoebiusUnit, field=None) -> AffineEquivalence:
    """Search tau = tau0 + tau1 t over Q with M_2(tau(t)) = tau1^r M_1(t)."""
    L = field or u1.field or u2.field
    if u1.c == 0 or u2.c == 0:
        raise PreconditionError("units must not be polynomial")
    g1, g2 = _pole(u1, L), _pole(u2, L)
    M1 = min_poly_over_Q(g1)
    M2 = min_poly_over_Q(g2)
    r = len(M1) - 1
    if len(M2) - 1 != r:
        return AffineEquivalence(None, True)
    cands = []
    if L.degree == 2 and r == 2:
        # d_i = lambda_i + mu_i alpha
        d1, d2 = -g1, -g2
        l1, m1 = d1.coords
        l2, m2 = d2.coords
        cands.append((Fraction(m2 * l1 - m1 * l2) / m1, Fraction(m2) / m1))
    else:
        s = UniPoly.x("s")
        tau0 = (s * M1[r - 1] - M2[r - 1]) * Fraction(1, r)
        tau = UniPoly((tau0, s), "t")
        lhs = UniPoly(M2, "t").compose(tau)
        rhs = UniPoly([c * s ** r for c in M1], "t")
        cond = lhs - rhs
        g = None
        for c in cond.coeffs:
            cp = c if isinstance(c, UniPoly) else UniPoly((c,), "s")
            g = cp if g is None else _gcd_q(g, cp)
        roots = [x for x in rational_roots(g.coeffs)] if g is not None and not g.is_zero() else [1]
        for x in roots:
            if x != 0:
                cands.append((Fraction(tau0(x)), Fraction(x)))
    found = None
    for t0, t1 in cands:
        if t1 == 0:
            continue
        lhs = UniPoly(M2).compose(UniPoly((t0, t1)))
        if lhs != UniPoly(M1) * (t1 ** r):
            continue
        w = MoebiusUnit(t1, t0, 0, 1)
        exact = (g1 * t1 + t0) == g2
        if exact:
            return AffineEquivalence(w, True, True)
        if found is None:
            found = w
    if found is not None:
        return AffineEquivalence(found, True, False)
    return AffineEquivalence(None, r <= 2)


def _gcd_q(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return poly_gcd(a, b)


class Embedding(NamedTuple):
    witness: TransformWitness
    subfield: NumberField
    unit: MoebiusUnit
    parametrization: Parametrization


def embed_nonprimitive(u: MoebiusUnit, field=None) -> Embedding:
    """Embedding of the hypercircle of 1/(t+d) in Q(d) into Q(alpha)."""
    _require_reduced(u)
    L = field or u.field
    d = L(u.d) / L(u.c)
    r = hc_degree(u, L)
    if r == 1:
        raise PreconditionError("the hypercircle is a line")
    if r == L.degree:
        raise PreconditionError("the hypercircle is primitive; nothing to embed")
    sub = NumberField(min_poly_over_Q(d), check=False)
    cols = [list((d ** i).coords) for i in range(r)]
    D = [list(row) for row in zip(*cols)]
    w = TransformWitness(D, "embedding", range(r), r)
    v = MoebiusUnit(0, 1, 1, sub.gen, sub)
    psi = parametrize_unit(v)
    phi = parametrize_unit(u, L)
    lhs = phi.components()
    psi_c = psi.components()
    for j in range(L.degree):
        acc = psi_c[0] * D[j][0]
        for i in range(1, r):
            acc = acc + psi_c[i] * D[j][i]
        if acc != lhs[j]:
            raise HypercircleError("embedding identity failed")
    return Embedding(w, sub, v, psi)


def stern_brocot(limit: int):
    """0, 1, -1, 1/2, -1/2, 2, -2, ... : rationals by increasing height."""
    yield 0
    seen = {Fraction(0)}
    for h in range(1, limit + 1):
        batch = []
        for q in range(1, h + 1):
            for p in range(0, h + 1):
                if max(p, q) != h:
                    continue
                x = Fraction(p, q)
                if x in seen or x == 0:
                    continue
                batch.append(x)
        batch.sort(key=lambda x: (x.denominator + x.numerator, x))
        for x in batch:
            seen.add(x)
            yield x
            yield -x


def rational_points_of(phi: Parametrization, count: int, height: int = 8):
    """The first ``count`` distinct points phi(q), q of height <= ``height``."""
    pts = []
    for q in stern_brocot(height):
        try:
            p = phi.evaluate(q)
        except ZeroDivisionError:
            continue
        if p not in pts:
            pts.append(p)
            if len(pts) == count:
                break
    return pts


def verify_hypercircle(phi: Parametrization, height: int = 8) -> Optional[MoebiusUnit]:
    """A generating unit when phi passes the desk-scale hypercircle checks."""
    L = phi.field
    if phi.degree != L.degree:
        return None
    pts = rational_points_of(phi, 3, height)
    if len(pts) < 3:
        return None
    u = unit_through_three_points(*pts, L)
    cand = parametrize_unit(u)
    if same_hypercircle(phi, cand) is None:
        return None
    try:
        system = implicitize_normal(phi)
    except PreconditionError:
        return None
    P = points_at_infinity_principal(L)
    vals = [L(c) for c in P.coords]
    for g in system.homogeneous:
        if g.evaluate(vals) != 0:
            return None
    return u

