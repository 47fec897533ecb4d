"""Formal group laws, their axioms, and the derivation Lie algebra."""

import random
from fractions import Fraction as F

import pytest

from freewitt.errors import NotPositiveDerivation, NotStrict, ZeroLinearTerm
from freewitt.formal_group import (
    Derivation,
    Fgl,
    derivation_bracket,
    exp_derivation,
    fgl_check_axioms,
    fgl_formal_inverse,
    fgl_from_log,
    fgl_is_hom,
    fgl_log,
)
from freewitt.multipoly import MultiPoly
from freewitt.series import TruncSeries, compose, exp_zero, log_unit


def rand_strict_log(rng, order):
    return TruncSeries(
        [F(0), F(1)] + [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(order - 1)],
        order,
    )


X = MultiPoly.var("x")
Y = MultiPoly.var("y")


def test_additive_law_from_identity_log():
    fa = fgl_from_log(TruncSeries.identity(6), 6)
    assert fa.F == X + Y
    assert fgl_check_axioms(fa)["passed"]


def test_multiplicative_law_from_log1p():
    # ln(1+x) linearizes the multiplicative law x + y + xy
    z = TruncSeries.identity(8)
    fm = fgl_from_log(log_unit(1 + z), 8)
    assert fm.F == X + Y + X * Y
    assert fgl_check_axioms(fm)["passed"]


def test_law_from_quadratic_log_passes_axioms():
    logf = TruncSeries([F(0), F(1), F(1, 2)] + [F(0)] * 4, 6)
    fgl = fgl_from_log(logf, 6)
    rep = fgl_check_axioms(fgl)
    assert rep["passed"], rep
    # the law starts x + y - xy + ...
    assert fgl.F.coeff({"x": 1, "y": 1}) == F(-1)


def test_axiom_counterexample_reports_monomial():
    bad = Fgl(X + Y + X ** 2, 4)
    rep = fgl_check_axioms(bad)
    assert not rep["passed"]
    first_failed = next(c for c in rep["checks"] if not c["passed"])
    assert first_failed["name"] == "neutral_right"
    assert first_failed["monomial"]["exps"] == {"x": 2}


def test_from_log_preconditions():
    with pytest.raises(ZeroLinearTerm):
        fgl_from_log(TruncSeries([1, 1], 4), 4)
    with pytest.raises(ZeroLinearTerm):
        fgl_from_log(TruncSeries([0, 0, 1], 4), 4)
    with pytest.raises(NotStrict):
        fgl_from_log(TruncSeries([0, 2], 4), 4)


def test_random_log_gives_law_and_is_hom_to_additive():
    rng = random.Random(21)
    fa = fgl_from_log(TruncSeries.identity(10), 10)
    for _ in range(5):
        logf = rand_strict_log(rng, 10)
        law = fgl_from_log(logf, 10)
        assert fgl_check_axioms(law)["passed"]
        # the logarithm is a strict isomorphism onto the additive law
        assert fgl_is_hom(logf, law, fa)


def test_formal_inverse_additive_and_multiplicative():
    fa = fgl_from_log(TruncSeries.identity(8), 8)
    assert fgl_formal_inverse(fa) == TruncSeries([0, -1], 8)
    z = TruncSeries.identity(8)
    fm = fgl_from_log(log_unit(1 + z), 8)
    # closed form -x/(1+x)
    assert fgl_formal_inverse(fm) == -z / (1 + z)


def test_formal_inverse_two_sided():
    rng = random.Random(22)
    logf = rand_strict_log(rng, 8)
    law = fgl_from_log(logf, 8)
    iota = fgl_formal_inverse(law)
    assert iota.coeffs[1] == F(-1)
    from freewitt.formal_group import series_in_var

    ipoly = series_in_var(iota, "x", 8)
    assert law(X, ipoly).is_zero()
    assert law(ipoly, X).is_zero()


def test_log_recovery_roundtrip():
    rng = random.Random(25)
    z = TruncSeries.identity(8)
    assert fgl_log(fgl_from_log(z, 8)) == z
    fm = fgl_from_log(log_unit(1 + z), 8)
    assert fgl_log(fm) == log_unit(1 + z)
    for _ in range(5):
        logf = rand_strict_log(rng, 8)
        assert fgl_log(fgl_from_log(logf, 8)) == logf


def test_hom_examples():
    fa = fgl_from_log(TruncSeries.identity(8), 8)
    z = TruncSeries.identity(8)
    fm = fgl_from_log(log_unit(1 + z), 8)
    assert fgl_is_hom(z, fa, fa)
    assert fgl_is_hom(exp_zero(z) - 1, fa, fm)
    assert not fgl_is_hom(TruncSeries.monomial(1, 2, 8), fa, fa)


def test_hom_composition_closes():
    fa = fgl_from_log(TruncSeries.identity(8), 8)
    z = TruncSeries.identity(8)
    fm = fgl_from_log(log_unit(1 + z), 8)
    f1 = log_unit(1 + z)          # fm -> fa
    f2 = 2 * TruncSeries.identity(8)  # fa -> fa
    assert fgl_is_hom(f1, fm, fa)
    assert fgl_is_hom(f2, fa, fa)
    assert fgl_is_hom(compose(f2, f1), fm, fa)


def test_bracket_closed_forms():
    l0, l1, l2, l3 = (Derivation.ell(n) for n in range(4))
    assert derivation_bracket(l1, l2) == -1 * l3
    assert derivation_bracket(l2, l2).coeff_series.is_zero()
    assert derivation_bracket(l0, l3) == -3 * l3
    assert derivation_bracket(l3, l0) == 3 * l3


def test_bracket_witt_relation_on_series():
    rng = random.Random(23)
    probe = TruncSeries([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(11)], 10)
    for m in range(6):
        for n in range(6):
            lhs = derivation_bracket(Derivation.ell(m), Derivation.ell(n)).apply(probe)
            rhs = ((m - n) * Derivation.ell(m + n)).apply(probe)
            assert lhs == rhs


def test_bracket_antisymmetry_and_jacobi():
    rng = random.Random(24)
    span = [Derivation.ell(n) for n in range(6)]

    def randd():
        d = Derivation.from_coeffs([0])
        for l in span:
            d = d + F(rng.randint(-3, 3)) * l
        return d

    probe = TruncSeries([F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(9)], 8)
    for _ in range(5):
        u, v, w = randd(), randd(), randd()
        assert derivation_bracket(u, v).apply(probe) == (-1 * derivation_bracket(v, u)).apply(probe)
        jac = (
            derivation_bracket(u, derivation_bracket(v, w)).apply(probe)
            + derivation_bracket(v, derivation_bracket(w, u)).apply(probe)
            + derivation_bracket(w, derivation_bracket(u, v)).apply(probe)
        )
        assert jac.is_zero()


def test_exp_derivation_of_zero():
    v = Derivation.from_coeffs([0])
    assert exp_derivation(v, 6) == TruncSeries.identity(6)


def _flow_oracle(order):
    """Solve dy/dt = -y^2, y(0) = z, by the coefficient recurrence; value at t=1."""
    z = TruncSeries.identity(order)
    c = [z]
    for k in range(order):
        s = TruncSeries.zero(order)
        for i in range(len(c)):
            s = s + c[i] * c[len(c) - 1 - i]
        c.append(-s * F(1, k + 1))
    total = TruncSeries.zero(order)
    for ck in c:
        total = total + ck
    return total


def test_exp_derivation_ell1_is_the_ode_flow():
    got = exp_derivation(Derivation.ell(1), 10)
    assert got == _flow_oracle(10)
    z = TruncSeries.identity(10)
    assert got == z / (1 + z)


def test_exp_derivation_ell2():
    got = exp_derivation(Derivation.ell(2), 8)
    assert list(got.coeffs[:6]) == [F(0), F(1), F(0), F(-1), F(0), F(3, 2)]


def test_exp_derivation_additivity_for_commuting():
    v = Derivation.ell(2)
    lhs = exp_derivation(v + v, 8)
    rhs = compose(exp_derivation(v, 8), exp_derivation(v, 8))
    assert lhs == rhs


def test_exp_derivation_rejects_low_valuation():
    with pytest.raises(NotPositiveDerivation):
        exp_derivation(Derivation.ell(0), 6)
