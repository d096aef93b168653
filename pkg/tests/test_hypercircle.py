from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from hypercircles.errors import PreconditionError, UnreachablePointError
from hypercircles.exactnum import NumberField, min_poly_over_Q
from hypercircles.hypercircle import (
    Parametrization,
    ProjectivePoint,
    hc_degree,
    inverse_point_map,
    inverse_point_map_symbolic,
    is_line,
    is_primitive,
    m_alpha,
    multiplication_matrix,
    parametrize_unit,
    points_at_infinity_principal,
    reduced_form,
    same_hypercircle,
    tangent_infinity_check,
    unit_through_three_points,
)
from hypercircles.polyalg import MoebiusUnit, RatFunc, UniPoly, moebius_compose, poly_gcd

import oracle
from strategies import elements, units

KC = NumberField([2, 2, 0, 1])
K4 = NumberField([1, 0, 0, 0, 1])
KR = NumberField([2, 0, 0, 1])
KI = NumberField([1, 0, 1])


def P(*cs):
    return UniPoly(cs)


def cubic_unit():
    a = KC.gen
    return MoebiusUnit(1, -a, 1, a)


def quartic_alpha():
    a = K4.gen
    return MoebiusUnit(1, -a, 1, a)


def quartic_beta():
    """The same unit written over Q(beta), beta = alpha^3 + 1."""
    Lb = NumberField(min_poly_over_Q(K4.gen ** 3 + 1), check=False)
    b = Lb.gen
    alpha = -1 / (b - 1)  # alpha^3 = -1/alpha since alpha^4 = -1
    return Lb, MoebiusUnit(1, -alpha, 1, alpha, Lb)


# parametrization

def test_parametrize_cubic():
    phi = parametrize_unit(cubic_unit())
    assert phi.denominator == P(-2, 2, 0, 1)
    assert phi.numerators == (P(2, 2, 0, 1), P(0, 0, -2), P(0, 2))
    assert [str(f) for f in phi.components()] == [
        "(t^3 + 2*t + 2)/(t^3 + 2*t - 2)", "(-2*t^2)/(t^3 + 2*t - 2)", "(2*t)/(t^3 + 2*t - 2)"]


def test_parametrize_quartic_both_bases():
    phi = parametrize_unit(quartic_alpha())
    assert phi.denominator == P(1, 0, 0, 0, 1)
    assert phi.numerators == (P(-1, 0, 0, 0, 1), P(0, 0, 0, -2), P(0, 0, 2), P(0, -2))
    Lb, ub = quartic_beta()
    assert Lb.minpoly == (2, -4, 6, -4, 1)
    psi = parametrize_unit(ub)
    assert psi.denominator == P(1, 0, 0, 0, 1)
    assert psi.numerators == (P(-1, 2, -2, 2, 1), P(0, -2, 4, -6), P(0, 0, -2, 6), P(0, 0, 0, -2))
    assert psi.evaluate(1) == (1, -2, 2, -1)
    X0, X1, X2, X3 = psi.evaluate(1)
    assert X0 ** 2 + X3 * X1 - 1 == 2


def test_parametrize_matches_sympy_inversion():
    a = KC.gen
    u = MoebiusUnit(a + 2, 1 - a, a * a, 3)
    phi = parametrize_unit(u)
    ref = oracle.unit_components(u.a, u.b, u.c, u.d, KC.minpoly)
    for f, r in zip(phi.components(), ref):
        assert oracle.same_ratfunc(oracle.ratfunc(f), r)


def test_identity_unit_gives_axis():
    phi = parametrize_unit(MoebiusUnit.identity(KC))
    assert phi.components() == [RatFunc(UniPoly.x()), RatFunc(0), RatFunc(0)]


def test_parametrization_json_roundtrip():
    phi = parametrize_unit(cubic_unit())
    back = Parametrization.from_json(phi.to_json())
    assert back == phi and back.unit == phi.unit


# reduced form, lines, degree

def test_reduced_form_examples():
    a = KC.gen
    rf = reduced_form(cubic_unit())
    assert rf.unit == MoebiusUnit(0, 1, 1, a)
    assert (rf.lambda1, rf.lambda2) == (-2 * a, 1)
    rf = reduced_form(MoebiusUnit(0, 1, 1, a))
    assert (rf.lambda1, rf.lambda2) == (1, 0)
    rf = reduced_form(MoebiusUnit(a, 1, 0, 1))
    assert rf.unit == MoebiusUnit.identity(KC)
    assert (rf.lambda1, rf.lambda2) == (a, 1)


def test_reduced_form_identity_symbolically():
    # (t - a)/(t + a) = 1 - 2a/(t + a)
    A, T = oracle.A, oracle.T
    assert sp.simplify((T - A) / (T + A) - (1 - 2 * A / (T + A))) == 0


def test_is_line_examples():
    a = KC.gen
    assert is_line(MoebiusUnit(a, 1, 0, 1))
    assert is_line(MoebiusUnit(0, 1, 1, 2, KC))
    assert not is_line(MoebiusUnit(0, 1, 1, a))


def test_degree_examples():
    assert hc_degree(cubic_unit()) == 3 and is_primitive(cubic_unit())
    u = MoebiusUnit(0, 1, 1, K4.gen ** 2)
    assert hc_degree(u) == 2 and not is_primitive(u)
    assert hc_degree(MoebiusUnit(0, 1, 1, 5, K4)) == 1


# infinity

def test_points_at_infinity():
    a = KR.gen
    assert points_at_infinity_principal(KR) == ProjectivePoint([a * a, a, 1, 0])
    b = K4.gen
    assert points_at_infinity_principal(K4) == ProjectivePoint([b ** 3, b * b, b, 1, 0])
    i = KI.gen
    assert points_at_infinity_principal(KI) == ProjectivePoint([i, 1, 0])


def test_m_alpha_at_alpha_is_derivative():
    for K in (KC, K4, KR, KI):
        M = UniPoly(K.minpoly)
        val = m_alpha(K)(K.gen)
        assert val == M.derivative()(K.gen) and val != 0


# inverse point map

def test_inverse_point_map_example():
    u = cubic_unit()
    phi = parametrize_unit(u)
    ref = [r.subs(oracle.T, 1) for r in oracle.unit_components(u.a, u.b, u.c, u.d, KC.minpoly)]
    assert ref == [5, -2, 2]
    assert phi.evaluate(1) == (5, -2, 2)
    assert inverse_point_map(u, (5, -2, 2)) == 1
    assert inverse_point_map_symbolic(u, phi) == RatFunc(UniPoly.x())


def test_inverse_point_map_exceptional_point():
    # u(oo) = a/c = 1 has coordinates (1, 0, 0)
    with pytest.raises(UnreachablePointError):
        inverse_point_map(cubic_unit(), (1, 0, 0))


# three points

def test_three_points_on_axis():
    u = unit_through_three_points((0, 0, 0), (1, 0, 0), (2, 0, 0), KC)
    assert u == MoebiusUnit(2, 0, 1, 1, KC)
    assert u(0) == 0 and u(1) == 1 and u.at_infinity() == 2


def test_three_points_of_descent():
    T = oracle.T
    curve = [2 * T ** 2 / (2 * T ** 3 + 1), -1 / (2 * T ** 3 + 1), -T / (2 * T ** 3 + 1)]
    pts = [tuple(Fraction(str(c.subs(T, s))) for c in curve) for s in (0, 1, -1)]
    assert pts == [(0, -1, 0), (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)), (-2, 1, -1)]
    u = unit_through_three_points(*pts, KR)
    target = parametrize_unit(MoebiusUnit(0, 2, 2, KR.gen ** 2))
    assert target.components() == [RatFunc(P(0, 0, 2), P(1, 0, 0, 2)), RatFunc(P(-1), P(1, 0, 0, 2)),
                                    RatFunc(P(0, -1), P(1, 0, 0, 2))]
    assert same_hypercircle(parametrize_unit(u), target) is not None


def test_three_points_must_be_distinct():
    with pytest.raises(PreconditionError):
        unit_through_three_points((1, 0, 0), (1, 0, 0), (2, 0, 0), KC)


# same curve

def test_same_hypercircle_translations():
    phi = parametrize_unit(cubic_unit())
    shifted = phi.compose(MoebiusUnit(1, 1, 0, 1))
    assert same_hypercircle(phi, shifted) == MoebiusUnit(1, 1, 0, 1)
    assert same_hypercircle(phi, phi) == MoebiusUnit.identity()


def test_same_hypercircle_rejects_other_basis():
    phi = parametrize_unit(quartic_alpha())
    _, ub = quartic_beta()
    psi_b = parametrize_unit(ub)
    # the beta-curve read as a curve in the alpha coordinates
    psi = Parametrization(K4, psi_b.numerators, psi_b.denominator)
    assert same_hypercircle(psi, phi) is None
    assert same_hypercircle(phi, psi) is None


def test_tangent_check_examples():
    assert tangent_infinity_check(parametrize_unit(cubic_unit()))
    assert tangent_infinity_check(parametrize_unit(quartic_alpha()))


# properties

@settings(max_examples=30, deadline=None)
@given(units())
def test_recombination_gcd_and_degree(ku):
    K, u = ku
    phi = parametrize_unit(u)
    assert phi.recombine() == u.as_ratfunc()
    g = phi.denominator
    for p in phi.numerators:
        g = poly_gcd(g, p)
    assert g.degree == 0
    assert phi.degree == hc_degree(u)
    assert inverse_point_map_symbolic(u, phi) == RatFunc(UniPoly.x())


@settings(max_examples=30, deadline=None)
@given(units())
def test_reduced_form_recovers_unit(ku):
    K, u = ku
    rf = reduced_form(u)
    assert rf.lambda1 != 0
    back = moebius_compose(MoebiusUnit(rf.lambda1, rf.lambda2, 0, 1, K), rf.unit)
    assert back == u


@settings(max_examples=30, deadline=None)
@given(units(primitive=True))
def test_tangent_check_on_primitive_units(ku):
    K, u = ku
    assert is_primitive(u)
    assert tangent_infinity_check(parametrize_unit(u))


@settings(max_examples=30, deadline=None)
@given(units(max_degree=4).flatmap(lambda ku: elements(ku[0], nonzero=True).map(lambda lam: (ku, lam))))
def test_translation_and_scaling(data):
    (K, u), lam = data
    phi = parametrize_unit(u)
    shifted = parametrize_unit(moebius_compose(MoebiusUnit(1, lam, 0, 1, K), u))
    for f, g, c in zip(phi.components(), shifted.components(), lam.coords):
        assert g == f + c
    scaled = parametrize_unit(moebius_compose(MoebiusUnit(lam, 0, 0, 1, K), u))
    A = multiplication_matrix(lam, K)
    image = [sum((f * A[i][j] for j, f in enumerate(phi.components())), RatFunc(0)) for i in range(K.degree)]
    assert scaled.components() == image


@settings(max_examples=30, deadline=None)
@given(units(max_degree=4))
def test_three_point_interpolation_law(ku):
    K, u = ku
    phi = parametrize_unit(u)
    pts = []
    for s in (0, 1, 2, -1, 3, Fraction(1, 2), -2):
        try:
            p = phi.evaluate(s)
        except ZeroDivisionError:
            continue
        if p not in pts:
            pts.append(p)
    if len(pts) < 3:
        return
    w = unit_through_three_points(*pts[:3], K)
    Y = [sum((K(x) * K.gen ** j for j, x in enumerate(X)), K.zero) for X in pts[:3]]
    assert w(0) == Y[0] and w(1) == Y[1] and w.at_infinity() == Y[2]
    assert same_hypercircle(parametrize_unit(w), phi) is not None
