"""Faber polynomials by three routes, Grunsky coefficients, power operations."""

import random
from fractions import Fraction as F

from freewitt.faber import (
    FaberPoly,
    adams_poly,
    check_adams_lemma,
    faber_det,
    faber_from_generating,
    faber_recursion,
    grunsky_coeffs,
    lam_var,
)
from freewitt.multipoly import MultiPoly
from freewitt.series import TruncSeries, z_dlog
from freewitt.witt import LambdaElement, lambda_to_ghost


def sym_b(n):
    return [MultiPoly.var("b%02d" % j, weight=j) for j in range(1, n + 1)]


def test_first_polynomials_symbolic():
    b = sym_b(3)
    rec = faber_recursion(b, 3)
    b1, b2, b3 = b
    assert list(rec[1].coeffs) == [-1 * b1, MultiPoly.const(1)]
    # F_2 = (w - b1)^2 - 2 b2
    assert list(rec[2].coeffs) == [b1 ** 2 - 2 * b2, -2 * b1, MultiPoly.const(1)]
    assert rec[3].at_zero() == -b1 ** 3 + 3 * b1 * b2 - 3 * b3


def test_generating_route_values():
    b = sym_b(3)
    vals = faber_from_generating(b, 3)
    assert vals[0] == 1
    assert vals[2] == b[0] ** 2 - 2 * b[1]


def test_geometric_coefficients_give_power_values():
    # h = 1/(1 - a z), i.e. b_n = a^n: every F_n(0) collapses to -a^n
    a = F(2, 5)
    b = [a ** n for n in range(1, 9)]
    vals = faber_from_generating(b, 8)
    assert vals[1:] == [-(a ** n) for n in range(1, 9)]


def test_ghost_components_are_minus_faber_values():
    # the ghost chart of a unital series carries the same data as the
    # Faber values at 0, with a sign
    rng = random.Random(41)
    b = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(8)]
    h = TruncSeries([F(1)] + b, 8)
    ghost = lambda_to_ghost(LambdaElement(h))
    vals = faber_from_generating(b, 8)
    assert list(ghost.comps) == [-v for v in vals[1:]]
    assert z_dlog(h).coeffs[1:] == ghost.comps


def test_three_routes_numeric():
    rng = random.Random(42)
    b = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(10)]
    rec = faber_recursion(b, 10)
    gen = faber_from_generating(b, 10)
    det = [faber_det(b, n) for n in range(11)]
    assert [p.at_zero() for p in rec] == gen
    assert [p.coeffs for p in rec] == [p.coeffs for p in det]
    w = F(3, 7)
    for n in range(11):
        assert faber_det(b, n, w_value=w) == rec[n](w)


def test_three_routes_symbolic():
    b = sym_b(6)
    rec = faber_recursion(b, 6)
    gen = faber_from_generating(b, 6)
    det = [faber_det(b, n) for n in range(7)]
    assert [p.at_zero() for p in rec] == gen
    for n in range(7):
        assert list(rec[n].coeffs) == list(det[n].coeffs)


def test_polys_are_monic_of_right_degree():
    rng = random.Random(43)
    b = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(7)]
    for n, p in enumerate(faber_recursion(b, 7)):
        assert p.degree == n
        assert p.coeffs[-1] == 1


def test_det_matrix_smallest_cases():
    b = [F(1, 2), F(-3)]
    assert list(faber_det(b, 1).coeffs) == [F(-1, 2), F(1)]
    # det of [[b1, 1], [2 b2, b1]] under w1 - A
    p2 = faber_det(b, 2)
    assert list(p2.coeffs) == [F(1, 4) + 6, -1, 1]


def test_grunsky_translation_only_vanishes():
    # g = z + b1: the difference quotient is 1, all coefficients vanish
    t = grunsky_coeffs([F(7), F(0), F(0), F(0)], 4)
    assert all(c == 0 for row in t.beta for c in row)


def test_grunsky_quadratic_example():
    b2 = F(5, 7)
    t = grunsky_coeffs([F(0), b2, F(0), F(0), F(0), F(0)], 4)
    assert t.beta[0][0] == b2
    assert t.beta[1][1] == b2 ** 2 / 2
    assert t.beta[0][1] == 0
    assert t.is_symmetric()


def test_grunsky_symmetry_random():
    rng = random.Random(44)
    b = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(8)]
    # construction also cross-checks the bivariate log expansion internally
    assert grunsky_coeffs(b, 8).is_symmetric()


def test_grunsky_symbolic_quadratic():
    b2 = MultiPoly.var("b02", weight=2)
    zero = MultiPoly.const(0)
    t = grunsky_coeffs([zero, b2, zero, zero], 4)
    assert t.beta[0][0] == b2
    assert t.beta[1][1] == b2 ** 2 / 2


def test_adams_first_three():
    l1, l2, l3 = lam_var(1), lam_var(2), lam_var(3)
    assert adams_poly(1) == l1
    assert adams_poly(2) == l1 ** 2 - 2 * l2
    assert adams_poly(3) == l1 ** 3 - 3 * l1 * l2 + 3 * l3


def test_adams_newton_identity_numeric():
    # power sums of explicit roots vs elementary symmetric specialization
    roots = [F(1, 2), F(-2), F(3)]
    e1 = sum(roots)
    e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
    e3 = roots[0] * roots[1] * roots[2]
    assign = {"lam01": e1, "lam02": e2, "lam03": e3}
    for n in range(1, 4):
        psi = adams_poly(n)
        power_sum = sum(r ** n for r in roots)
        assert psi.eval({v: assign[v] for v in psi.vars}) == power_sum


def test_adams_lemma_symbolically():
    assert check_adams_lemma(6)


def test_faberpoly_evaluation():
    p = FaberPoly((F(2), F(0), F(1)))
    assert p(F(3)) == 11
