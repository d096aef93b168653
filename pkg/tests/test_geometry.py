from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercircles import linalg
from hypercircles.errors import PreconditionError
from hypercircles.exactnum import NumberField, min_poly_over_Q
from hypercircles.geometry import (
    affine_equivalence_witness,
    embed_nonprimitive,
    generators_vanish,
    implicitize_normal,
    inverse_unit_equations,
    normal_curve_affine_map,
    normal_curve_projective_map,
    stern_brocot,
    verify_hypercircle,
)
from hypercircles.hypercircle import (
    Parametrization,
    ProjectivePoint,
    hc_degree,
    parametrize_unit,
    points_at_infinity_principal,
    reduced_form,
    same_hypercircle,
)
from hypercircles.polyalg import MoebiusUnit, MultiPoly, RatFunc, UniPoly, moebius_invert

import oracle
from strategies import units

KC = NumberField([2, 2, 0, 1])
K4 = NumberField([1, 0, 0, 0, 1])
KR = NumberField([2, 0, 0, 1])
KE = NumberField([-3, 0, 1, 1])
KI = NumberField([1, 0, 1])

X = sp.symbols("X0:4")
REFERENCE_QUADRICS = [X[1] * X[2] - X[3] * X[0] - X[3], X[1] ** 2 + X[3] ** 2 - 2 * X[2],
            X[1] * X[0] + X[2] * X[3] - X[1], X[0] ** 2 + X[3] * X[1] - 1]


def P(*cs):
    return UniPoly(cs)


def image(witness, phi):
    """witness.matrix applied to the vector of component functions."""
    comps = phi.components()
    return [sum((f * c for f, c in zip(comps, row) if c != 0), RatFunc(0)) for row in witness.matrix]


def proj_image(witness, phi):
    vec = list(phi.numerators) + [phi.denominator]
    return [sum((p * c for p, c in zip(vec, row) if c != 0), UniPoly(())) for row in witness.matrix]


# normal curve maps

def test_affine_map_cubic():
    u = MoebiusUnit(0, 1, 1, KC.gen)
    phi = parametrize_unit(u)
    W = normal_curve_affine_map(u)
    assert W.matrix == [[0, 0, 1], [0, -1, 0], [1, 0, -2]]
    M = P(-2, 2, 0, 1)
    assert phi.denominator == M
    assert image(W, phi) == [RatFunc(P(1), M), RatFunc(P(0, 1), M), RatFunc(P(0, 0, 1), M)]
    # r = n: the matrix inverts the coefficient matrix of the numerators
    C = [[p[k] for k in range(3)] for p in phi.numerators]
    assert linalg.matmul(W.matrix, C) == linalg.identity(3)


def test_affine_map_non_primitive():
    u = MoebiusUnit(0, 1, 1, K4.gen ** 2)
    phi = parametrize_unit(u)
    W = normal_curve_affine_map(u)
    M = P(1, 0, 1)
    assert image(W, phi) == [RatFunc(P(1), M), RatFunc(P(0, 1), M), RatFunc(0), RatFunc(0)]
    assert W.selected == (0, 2)


def test_projective_map_cubic():
    u = MoebiusUnit(0, 1, 1, KC.gen)
    phi = parametrize_unit(u)
    W = normal_curve_projective_map(u)
    assert len(W.matrix) == 4
    assert proj_image(W, phi) == [P(1), P(0, 1), P(0, 0, 1), P(0, 0, 0, 1)]
    C = [[p[k] for k in range(4)] for p in list(phi.numerators) + [phi.denominator]]
    assert W.matrix == linalg.inverse(C)


def test_projective_map_sends_infinity_to_normal_curve_point():
    u = MoebiusUnit(0, 1, 1, KC.gen)
    W = normal_curve_projective_map(u)
    Pinf = points_at_infinity_principal(KC)
    img = [sum((KC(c) * x for c, x in zip(row, Pinf.coords)), KC.zero) for row in W.matrix]
    s = -KC.gen   # the pole of 1/(t + a)
    assert ProjectivePoint(img) == ProjectivePoint([KC.one, s, s ** 2, s ** 3])


def test_normal_map_needs_reduced_unit():
    with pytest.raises(PreconditionError):
        normal_curve_affine_map(MoebiusUnit(1, -KC.gen, 1, KC.gen))


# implicitization

def quartic_phi():
    a = K4.gen
    return parametrize_unit(MoebiusUnit(1, -a, 1, a))


def test_implicitize_quartic_contains_reference_quadrics():
    sys_ = implicitize_normal(quartic_phi())
    mine = [oracle.multi(g, X) for g in sys_.affine]
    assert [str(g) for g in sys_.affine] == [
        "X0*X2 + X3^2 - X2", "X0*X1 + X2*X3 - X1", "X0^2 + X1*X3 - 1",
        "X1*X3 - X2^2", "X0*X3 - X1*X2 + X3", "X0*X2 - X1^2 + X2"]
    r_mine = oracle.quadric_span_rank(mine, X)
    assert r_mine == 6
    # every reference quadric lies in the span of ours
    assert oracle.quadric_span_rank(mine + REFERENCE_QUADRICS, X) == r_mine
    # ours lie in the ideal the reference quadrics generate
    G = sp.groebner(REFERENCE_QUADRICS, *X, order="grevlex")
    assert all(G.reduce(f)[1] == 0 for f in mine)
    # and the space of vanishing quadrics has dimension 6, so four cannot span it
    phi = [oracle.ratfunc(f) for f in quartic_phi().components()]
    assert oracle.vanishing_quadrics_dim(phi, X) == 6


def test_implicitize_rejects_beta_point():
    sys_ = implicitize_normal(quartic_phi())
    pt = (1, -2, 2, -1)
    vals = [g.evaluate(pt) for g in sys_.affine]
    assert any(v != 0 for v in vals)
    assert REFERENCE_QUADRICS[3].subs(dict(zip(X, pt))) == 2


@pytest.mark.parametrize("mp, nums, den", [
    ((-3, 0, 1, 0, 1), [(-195, 101, 22, 15, 1), (-114, 65, -73, -11), (-59, -25, 57, 2), (-56, 17, 4, -6, -1)],
     (233, -366, -17, 10, 1)),
    ((1, 3, 0, 0, 1), [(72, 95, 47, 11, 1), (9, 17, 15, 7, 1), (0, -23, -31, -10, -1), (36, 42, 13, 1)],
     (81, 126, 62, 13, 1)),
])
def test_implicitize_quartic_pair(mp, nums, den):
    K = NumberField(mp)
    phi = Parametrization(K, [UniPoly(p) for p in nums], UniPoly(den))
    sys_ = implicitize_normal(phi)
    assert generators_vanish(sys_, phi)
    comps = [oracle.ratfunc(f) for f in phi.components()]
    for g in sys_.affine:
        val = oracle.multi(g, X).subs(dict(zip(X, comps)), simultaneous=True)
        assert sp.cancel(sp.together(val)) == 0


def test_implicitize_split_over_coefficient_field():
    # an L-coefficient parametrization of the cubic curve, split into Q-generators
    a = KC.gen
    phi = parametrize_unit(MoebiusUnit(1, -a, 1, a))
    nums = [p * (a + 1) for p in phi.numerators]
    den = phi.denominator * (a + 1)
    sys_ = implicitize_normal((nums, den), KC, coeff_field=KC)
    assert all(g.is_rational() for g in sys_.homogeneous)
    assert generators_vanish(sys_, phi)


# inverse unit equations

def parse_display(text, syms):
    return sp.expand(sp.sympify(text, locals=dict(zip(["x0", "x1", "x2"], syms))))


def test_inverse_unit_equations_cubic_field():
    a = KE.gen
    u = MoebiusUnit(2 + a, a, 1, 1 - a)
    rs, s = inverse_unit_equations(u)
    syms = sp.symbols("X0:3")
    r1 = parse_display("2-8*x2+4*x2*x0+6*x2**2*x0+17*x2*x1+x2*x0**2+3*x1-3*x1**2*x2+x0**3-x0**2*x1+4*x0*x1"
                     "-12*x2**2-8*x1**2+9*x2**3+3*x1**3-3*x0**2-9*x0*x1*x2", syms)
    r2 = parse_display("-2-7*x2+4*x2*x0-x2*x1+8*x1-2*x0-2*x0*x1+6*x2**2-2*x1**2+x0**2", syms)
    sp_ = parse_display("9*x2**3+6*x2**2*x0-12*x2**2+5*x2*x0-17*x2-3*x1**2*x2-9*x0*x1*x2+x2*x0**2+24*x2*x1"
                      "+3*x1**3+8*x0+4*x0*x1-5*x0**2-x0**2*x1+5*x1-9*x1**2-7+x0**3", syms)
    mine = [oracle.multi(p, syms) for p in rs + [s]]
    ref = [r1, r2, sp_]
    lam = sp.Poly(ref[0], *syms).LC() / sp.Poly(mine[0], *syms).LC()
    assert lam != 0
    assert all(sp.expand(lam * m - r) == 0 for m, r in zip(mine, ref))
    # both r_i vanish on the displayed parametrization
    T = oracle.T
    den = T ** 3 + 4 * T ** 2 + 5 * T - 1
    phi = [(2 * T ** 3 + 6 * T ** 2 + 7 * T + 3) / den, (T ** 3 + 6 * T ** 2 + 9 * T + 2) / den,
           (T ** 2 + 4 * T + 1) / den]
    for r in (r1, r2):
        assert sp.cancel(sp.together(r.subs(dict(zip(syms, phi)), simultaneous=True))) == 0
    assert [oracle.ratfunc(f) for f in parametrize_unit(u).components()] == phi


def test_inverse_unit_equations_identity():
    rs, s = inverse_unit_equations(MoebiusUnit.identity(KC))
    Xs = MultiPoly.gens(("X0", "X1", "X2"))
    assert rs == [Xs[1], Xs[2]] and s == 1


# affine equivalence

def test_affine_equivalence_degree_two():
    i = KI.gen
    u1, u2 = MoebiusUnit(0, 1, 1, i), MoebiusUnit(0, 1, 1, 1 + 2 * i)
    res = affine_equivalence_witness(u1, u2)
    assert res.tau == MoebiusUnit(2, -1, 0, 1) and res.definitive and res.exact_root
    assert res.tau(-i) == -1 - 2 * i


def test_affine_equivalence_trivial_cases():
    u = MoebiusUnit(0, 1, 1, KC.gen)
    assert affine_equivalence_witness(u, u).tau == MoebiusUnit.identity()
    res = affine_equivalence_witness(MoebiusUnit(0, 1, 1, KC.gen), MoebiusUnit(0, 1, 1, 2, KC))
    assert res.tau is None and res.definitive


def test_affine_equivalence_cubic_translation():
    a = KC.gen
    res = affine_equivalence_witness(MoebiusUnit(0, 1, 1, a), MoebiusUnit(0, 1, 1, a + 3))
    assert res.tau == MoebiusUnit(1, -3, 0, 1) and res.exact_root


# embedding

def test_embed_non_primitive():
    u = MoebiusUnit(0, 1, 1, K4.gen ** 2)
    emb = embed_nonprimitive(u)
    assert emb.witness.matrix == [[1, 0], [0, 0], [0, 1], [0, 0]]
    assert linalg.rank(emb.witness.matrix) == 2
    assert emb.subfield.minpoly == (1, 0, 1)
    assert emb.parametrization.components() == [RatFunc(P(0, 1), P(1, 0, 1)), RatFunc(P(-1), P(1, 0, 1))]
    # sum psi_i d^i = u(t)
    d = K4.gen ** 2
    comps = emb.parametrization.components()
    total = comps[0] + comps[1] * d
    assert total == u.as_ratfunc()


def test_embed_refuses_primitive():
    with pytest.raises(PreconditionError):
        embed_nonprimitive(MoebiusUnit(0, 1, 1, K4.gen))


# verification

def test_verify_descent_candidate():
    D = P(1, 0, 0, 2)
    phi = Parametrization(KR, [P(0, 0, 2), P(-1), P(0, -1)], D)
    u = verify_hypercircle(phi)
    assert u is not None
    assert same_hypercircle(parametrize_unit(u), parametrize_unit(MoebiusUnit(0, 2, 2, KR.gen ** 2))) is not None


def test_verify_rejects_line_and_twisted_cubic():
    assert verify_hypercircle(Parametrization(KC, [P(0, 1), P(), P()], P(1))) is None
    # a cubic through no conjugate infinity points
    cubic = Parametrization(KC, [P(0, 1), P(0, 0, 1), P(0, 0, 0, 1)], P(1, 1, 0, 1))
    assert cubic.degree == 3
    assert verify_hypercircle(cubic) is None


def test_stern_brocot_order():
    assert list(stern_brocot(2)) == [0, 1, -1, Fraction(1, 2), Fraction(-1, 2), 2, -2]


# properties

@settings(max_examples=20, deadline=None)
@given(units(reduced=True, primitive=True))
def test_normal_maps_canonical_image(ku):
    K, u = ku
    phi = parametrize_unit(u)
    M = phi.denominator
    r = M.degree
    W = normal_curve_affine_map(u)
    expect = [RatFunc(UniPoly.x() ** k, M) for k in range(r)] + [RatFunc(0)] * (K.degree - r)
    assert image(W, phi) == expect
    Wp = normal_curve_projective_map(u)
    assert proj_image(Wp, phi)[:r + 1] == [UniPoly.x() ** k for k in range(r + 1)]


@settings(max_examples=20, deadline=None)
@given(units(primitive=True))
def test_implicitization_inverts_and_vanishes(ku):
    K, u = ku
    phi = parametrize_unit(u)
    sys_ = implicitize_normal(phi)
    n = K.degree
    C = [[p[k] for k in range(n + 1)] for p in list(phi.numerators) + [phi.denominator]]
    assert linalg.matmul(sys_.matrix, C) == linalg.identity(n + 1)
    assert generators_vanish(sys_, phi)


@settings(max_examples=15, deadline=None)
@given(units(primitive=True, max_degree=4))
def test_quadric_span_independent_of_parametrization(ku):
    K, u = ku
    phi = parametrize_unit(u)
    psi = phi.compose(MoebiusUnit(2, 1, 1, 3))
    assert same_hypercircle(phi, psi) is not None
    a = implicitize_normal(phi).affine
    b = implicitize_normal(psi).affine
    monos = sorted({e for g in a + b for e in g.terms})

    def rows(gs):
        return [[g.terms.get(e, 0) for e in monos] for g in gs]
    assert linalg.rank(rows(a)) == linalg.rank(rows(b)) == linalg.rank(rows(a + b))


@settings(max_examples=15, deadline=None)
@given(units(max_degree=4), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_inverse_unit_equations_recombine(ku, xs):
    K, u = ku
    rs, s = inverse_unit_equations(u)
    n = K.degree
    pt = xs[:n]
    S = sum((K.gen ** i * x for i, x in enumerate(pt)), K.zero)
    v = moebius_invert(u)
    den = v.c * S + v.d
    sv = s.evaluate(pt)
    if den == 0:
        assert sv == 0
        return
    val = (v.a * S + v.b) / den * sv
    assert list(val.coords[1:]) == [r.evaluate(pt) for r in rs]
    phi = parametrize_unit(u)
    for r in rs:
        assert r.homogeneous_substitute(list(phi.numerators), phi.denominator).is_zero()


@settings(max_examples=20, deadline=None)
@given(units(reduced=True, primitive=True, max_degree=4))
def test_affine_equivalence_soundness(ku):
    K, u = ku
    shift = MoebiusUnit(0, 1, 1, K(u.d) * 2 + 1, K)
    for w in (u, shift):
        res = affine_equivalence_witness(u, w)
        if res.tau is None:
            continue
        tau = res.tau
        g1, g2 = -K(u.d), -K(w.d)
        M1, M2 = UniPoly(min_poly_over_Q(g1)), UniPoly(min_poly_over_Q(g2))
        r = M1.degree
        assert M2.compose(UniPoly((tau.b, tau.a))) == M1 * tau.a ** r
        assert tau(g1) == g2
    assert affine_equivalence_witness(u, shift).tau is not None
    assert hc_degree(u) == K.degree
    assert reduced_form(u).unit == u
