"""Creation/annihilation word algebra, vacuum moments, canonical elements."""

import random
from fractions import Fraction as F

import pytest

from freewitt.errors import (
    ConstantTermNotOne,
    DegreeCapTooSmall,
    GeneratorMismatch,
    ZeroConstantTerm,
)
from freewitt.fock import (
    EMPTY,
    OpElement,
    OpWord,
    canonical_T,
    freeness_witness,
    genus_operator,
    haagerup_op,
    vacuum_moments,
)
from freewitt.freeprob import (
    CumulantVector,
    Distribution,
    distribution_from_s,
    moments_from_cumulants,
    s_transform,
)
from freewitt.series import TruncSeries


def els(cap=6, gens=1):
    one = OpElement.one(gens, cap)
    l = OpElement.creator(1, gens, cap)
    ls = OpElement.annihilator(1, gens, cap)
    return one, l, ls


def test_cuntz_relation():
    one, l, ls = els()
    assert ls * l == one
    # the reversed order does not reduce
    assert (l * ls).terms == {OpWord((1,), (1,)): F(1)}


def test_orthogonal_generators_annihilate():
    l2 = OpElement.creator(2, 2, 6)
    l1s = OpElement.annihilator(1, 2, 6)
    assert (l1s * l2).terms == {}


def test_mul_is_associative_and_unital():
    rng = random.Random(71)
    cap = 8

    def rand_el():
        terms = {}
        for _ in range(5):
            c = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 2)))
            a = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 2)))
            terms[OpWord(c, a)] = F(rng.randint(-3, 3))
        return OpElement(terms, 2, cap)

    one = OpElement.one(2, cap)
    for _ in range(10):
        a, b, c = rand_el(), rand_el(), rand_el()
        assert (a * b) * c == a * (b * c)
        assert one * a == a and a * one == a


def test_adjoint_is_antihomomorphism():
    rng = random.Random(72)
    cap = 8

    def rand_el():
        terms = {}
        for _ in range(4):
            c = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 2)))
            a = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 2)))
            terms[OpWord(c, a)] = F(rng.randint(-3, 3))
        return OpElement(terms, 2, cap)

    for _ in range(10):
        a, b = rand_el(), rand_el()
        assert (a * b).adjoint() == b.adjoint() * a.adjoint()


def test_generator_mismatch():
    with pytest.raises(GeneratorMismatch):
        OpElement.one(1, 6) * OpElement.one(2, 6)


def test_vacuum_moments_of_pure_creator():
    _, l, _ = els()
    assert vacuum_moments(l, 6) == Distribution.dirac(0, 6)


def test_vacuum_moments_semicircle_pattern():
    _, l, ls = els()
    mu = vacuum_moments(l + ls, 6)
    assert mu.moments == (F(0), F(1), F(0), F(2), F(0), F(5))


def test_vacuum_moments_one_plus_creator():
    one, l, _ = els()
    assert vacuum_moments(one + l, 6) == Distribution.dirac(1, 6)


def test_vacuum_against_unpruned_powers():
    # oracle: raw powers with a generous cap, no pruning
    rng = random.Random(73)
    cap = 12
    k = CumulantVector([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)])
    a = canonical_T(k, 4, degree_cap=cap)
    power = OpElement.one(1, cap)
    raw = []
    for _ in range(4):
        power = power * a
        raw.append(power.terms.get(EMPTY, F(0)))
    assert tuple(raw) == vacuum_moments(a, 4).moments


def test_degree_cap_guard():
    _, l, ls = els(cap=3)
    with pytest.raises(DegreeCapTooSmall):
        vacuum_moments(l + ls, 5)


def test_canonical_element_zero_and_semicircle():
    assert vacuum_moments(canonical_T(CumulantVector([F(0)] * 5), 5), 5) == Distribution.dirac(0, 5)
    semi = canonical_T(CumulantVector([F(0), F(1), F(0), F(0), F(0)]), 5)
    assert vacuum_moments(semi, 5) == Distribution.semicircle(5)


def test_canonical_element_free_poisson():
    k = CumulantVector([F(1)] * 6)
    assert vacuum_moments(canonical_T(k, 6), 6) == moments_from_cumulants(k)


def test_canonical_element_random_cumulants():
    rng = random.Random(74)
    for _ in range(10):
        k = CumulantVector([F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(6)])
        assert vacuum_moments(canonical_T(k, 6), 6) == moments_from_cumulants(k)


def test_canonical_and_haagerup_invert_vacuum_at_every_order():
    rng = random.Random(78)
    for order in range(1, 9):
        k = CumulantVector([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(order)])
        assert vacuum_moments(canonical_T(k, order), order) == moments_from_cumulants(k)
        f = TruncSeries(
            [F(1)] + [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(max(order - 1, 1))],
            max(order - 1, 1),
        )
        mu = vacuum_moments(haagerup_op(f, order), order)
        assert s_transform(mu) == (TruncSeries.one(f.order) / f).truncate(order - 1)


def test_moment_locality_in_cumulants():
    # m_n depends only on k_1..k_n: perturbing k_{n+1} leaves m_n alone
    base = [F(1), F(-2), F(1, 2), F(3), F(0), F(0)]
    k1 = CumulantVector(base)
    k2 = CumulantVector(base[:4] + [F(99), F(-7)])
    m1 = vacuum_moments(canonical_T(k1, 6), 6)
    m2 = vacuum_moments(canonical_T(k2, 6), 6)
    assert m1.moments[:4] == m2.moments[:4]
    assert m1.moments[4] != m2.moments[4]


def test_haagerup_constant_one():
    mu = vacuum_moments(haagerup_op(TruncSeries.one(5), 6), 6)
    assert mu == Distribution.dirac(1, 6)
    assert s_transform(mu) == TruncSeries.one(5)


def test_haagerup_one_minus_z_matches_star_unit():
    # cross-module: same law as the pulled-back geometric series
    mu = vacuum_moments(haagerup_op(TruncSeries([1, -1], 5), 6), 6)
    assert mu.moments == (F(1), F(0), F(-1), F(0), F(2), F(0))
    assert mu == distribution_from_s(TruncSeries.geometric(1, 5))


def test_haagerup_s_transform_is_reciprocal():
    rng = random.Random(75)
    for _ in range(6):
        f = TruncSeries([F(1)] + [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)], 5)
        mu = vacuum_moments(haagerup_op(f, 6), 6)
        assert s_transform(mu) == TruncSeries.one(5) / f


def test_haagerup_needs_constant_term():
    with pytest.raises(ZeroConstantTerm):
        haagerup_op(TruncSeries.identity(4), 4)


def test_two_free_semicircles_mixed_words():
    cap = 12
    z = TruncSeries.identity(5)
    a = canonical_T(list(z.coeffs), 6, 1, 2, cap)
    b = canonical_T(list(z.coeffs), 6, 2, 2, cap)
    assert (a * b * a * b).vacuum() == 0
    assert (a * a * b * b).vacuum() == 1


def test_freeness_witness_semicircles():
    z = TruncSeries.identity(5)
    assert freeness_witness(z, z, 6)["passed"]


def test_freeness_witness_with_zero_marginal():
    z = TruncSeries.identity(5)
    rep = freeness_witness(z, TruncSeries.zero(5), 6)
    assert rep["passed"]
    mult = next(c for c in rep["checks"] if c["name"] == "multiplicative_convolution")
    assert "skipped" in mult


def test_freeness_witness_random():
    rng = random.Random(76)
    for _ in range(5):
        f = TruncSeries([F(1)] + [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)], 4)
        g = TruncSeries([F(1)] + [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)], 4)
        assert freeness_witness(f, g, 6)["passed"]


def test_genus_operator_trivial_and_recovery():
    assert vacuum_moments(genus_operator(TruncSeries.one(6), 6), 6) == Distribution.dirac(1, 6)
    rng = random.Random(77)
    for _ in range(5):
        q = TruncSeries([F(1)] + [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(8)], 8)
        mu = vacuum_moments(genus_operator(q, 8), 8)
        assert s_transform(mu) == q.truncate(7)


def test_genus_operator_todd_first_moment():
    # 1/Q for the Todd series starts 1 - z/2 + z^2/6 - ...
    from freewitt.genus import named_genus, q_from_genus

    q = q_from_genus(named_genus("todd", 9)).q
    inv = TruncSeries.one(8) / q
    assert inv.coeffs[:3] == (F(1), F(-1, 2), F(1, 6))
    mu = vacuum_moments(genus_operator(q.truncate(6), 6), 6)
    assert mu.moments[0] == 1


def test_genus_operator_needs_unital_series():
    with pytest.raises(ConstantTermNotOne):
        genus_operator(TruncSeries([2, 1], 4), 4)
