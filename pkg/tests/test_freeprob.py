"""Moment sequences, non-crossing combinatorics, transforms, convolutions."""

import random
from fractions import Fraction as F

import pytest

from freewitt.errors import LengthMismatch, MeanZero, NotMeanOne, ZeroLinearTerm
from freewitt.freeprob import (
    CumulantVector,
    Distribution,
    boxdot,
    boxminus,
    boxplus,
    boxtimes,
    catalan,
    circledast,
    cumulants_from_moments,
    dist_exp,
    dist_log,
    distribution_from_s,
    enumerate_partitions,
    is_crossing,
    moments_from_cumulants,
    moments_from_cumulants_nc,
    mult_fn_transform,
    r_transform,
    s_transform,
)
from freewitt.series import TruncSeries

N = 8


def rand_dist(rng, order=N, mean=None):
    m = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)]
    if mean is not None:
        m[0] = F(mean)
    return Distribution(m)


# -- partitions ---------------------------------------------------------------


def test_partition_counts_small():
    assert len(enumerate_partitions(1)) == 1
    assert len(enumerate_partitions(3)) == 5
    assert len(enumerate_partitions(3, "noncrossing")) == 5
    assert len(enumerate_partitions(4)) == 15
    assert len(enumerate_partitions(4, "noncrossing")) == 14


def test_unique_crossing_partition_of_four():
    crossing = [p for p in enumerate_partitions(4) if is_crossing(p)]
    assert crossing == [((1, 3), (2, 4))]


def test_noncrossing_counts_are_catalan():
    for n in range(1, 9):
        assert len(enumerate_partitions(n, "noncrossing")) == catalan(n)


def test_direct_generation_matches_definitional_filter():
    for n in range(1, 8):
        filtered = sorted(
            p for p in enumerate_partitions(n) if not is_crossing(p)
        )
        assert filtered == enumerate_partitions(n, "noncrossing")


def test_partitions_cover_and_are_disjoint():
    for p in enumerate_partitions(5, "noncrossing"):
        seen = [x for block in p for x in block]
        assert sorted(seen) == list(range(1, 6))
        assert len(set(seen)) == len(seen)


# -- moments and cumulants ------------------------------------------------------


def test_semicircle_moments_are_interleaved_catalan():
    k = CumulantVector([F(0), F(1)] + [F(0)] * 6)
    mu = moments_from_cumulants(k)
    assert mu.moments == (F(0), F(1), F(0), F(2), F(0), F(5), F(0), F(14))


def test_constant_cumulants_give_catalan_moments():
    mu = moments_from_cumulants(CumulantVector([F(1)] * 8))
    assert list(mu.moments) == [F(catalan(n)) for n in range(1, 9)]


def test_first_cumulant_only_gives_powers():
    c = F(3, 2)
    mu = moments_from_cumulants(CumulantVector([c] + [F(0)] * 7))
    assert mu == Distribution.dirac(c, 8)
    back = cumulants_from_moments(Distribution.dirac(c, 8))
    assert back.k == (c,) + (F(0),) * 7


def test_zero_roundtrip():
    zero = CumulantVector([F(0)] * 6)
    assert cumulants_from_moments(moments_from_cumulants(zero)).k == zero.k


def test_recursion_equals_enumeration_oracle():
    rng = random.Random(51)
    for _ in range(6):
        k = CumulantVector([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(8)])
        assert moments_from_cumulants(k) == moments_from_cumulants_nc(k)


def test_moment_cumulant_roundtrip():
    rng = random.Random(52)
    for _ in range(10):
        mu = rand_dist(rng)
        assert moments_from_cumulants(cumulants_from_moments(mu)) == mu


# -- transforms -------------------------------------------------------------------


def test_r_transform_point_mass():
    c = F(5, 3)
    assert r_transform(Distribution.dirac(c, N)) == TruncSeries.monomial(c, 1, N)
    assert r_transform(Distribution.dirac(0, N)) == TruncSeries.zero(N)


def test_r_transform_semicircle():
    assert r_transform(Distribution.semicircle(N)) == TruncSeries.monomial(1, 2, N)


def test_r_transform_coefficients_are_cumulants():
    rng = random.Random(53)
    for _ in range(8):
        mu = rand_dist(rng)
        assert list(r_transform(mu).coeffs[1:]) == list(cumulants_from_moments(mu).k)


def test_s_transform_closed_forms():
    assert s_transform(Distribution.dirac(1, N)) == TruncSeries([F(1)], N - 1)
    c = F(7, 2)
    assert s_transform(Distribution.dirac(c, N)) == TruncSeries([1 / c], N - 1)
    fp = Distribution.free_poisson(N)
    assert s_transform(fp) == 1 / TruncSeries([F(1), F(1)], N - 1)


def test_s_transform_needs_mean():
    with pytest.raises(MeanZero):
        s_transform(Distribution.semicircle(N))


def test_s_distribution_roundtrip():
    rng = random.Random(54)
    for _ in range(8):
        mu = rand_dist(rng, mean=1)
        assert distribution_from_s(s_transform(mu)) == mu


# -- convolutions --------------------------------------------------------------------


def test_boxplus_point_masses():
    a, b = F(2), F(-7, 3)
    assert boxplus(Distribution.dirac(a, N), Distribution.dirac(b, N)) == Distribution.dirac(a + b, N)


def test_boxplus_semicircles():
    s2 = boxplus(Distribution.semicircle(N), Distribution.semicircle(N))
    k = cumulants_from_moments(s2)
    assert k.k == (F(0), F(2)) + (F(0),) * 6
    assert s2.moments[1] == 2 and s2.moments[3] == 8


def test_boxplus_neutral_and_inverse():
    rng = random.Random(55)
    mu = rand_dist(rng)
    assert boxplus(mu, Distribution.dirac(0, N)) == mu
    assert boxminus(mu, mu) == Distribution.dirac(0, N)


def test_boxtimes_point_masses_and_scaling():
    a, b = F(3), F(5, 2)
    assert boxtimes(Distribution.dirac(a, N), Distribution.dirac(b, N)) == Distribution.dirac(a * b, N)
    rng = random.Random(56)
    mu = rand_dist(rng, mean=2)
    scaled = boxtimes(Distribution.dirac(a, N), mu)
    assert scaled.moments == tuple(a ** n * m for n, m in enumerate(mu.moments, start=1))


def test_boxtimes_neutral():
    rng = random.Random(57)
    mu = rand_dist(rng, mean=1)
    assert boxtimes(Distribution.dirac(1, N), mu) == mu


def test_boxtimes_free_poissons():
    fp = Distribution.free_poisson(N)
    sq = boxtimes(fp, fp)
    assert s_transform(sq) == 1 / (TruncSeries([F(1), F(1)], N - 1) ** 2)
    assert sq.moments[0] == 1 and sq.moments[1] == 3


def test_boxtimes_needs_nonzero_means():
    with pytest.raises(MeanZero):
        boxtimes(Distribution.semicircle(N), Distribution.dirac(1, N))


def test_boxtimes_inverses_exist():
    # the S-transform turns boxtimes into multiplication of unit series,
    # so 1/S gives the group inverse of any law with nonzero mean
    rng = random.Random(65)
    for _ in range(6):
        mu = rand_dist(rng, mean=rng.choice([1, 2, F(-1, 3)]))
        inv = distribution_from_s(1 / s_transform(mu))
        assert boxtimes(mu, inv) == Distribution.dirac(1, N)


def test_circledast_delta1_absorbs():
    rng = random.Random(58)
    mu = rand_dist(rng, mean=1)
    d1 = Distribution.dirac(1, N)
    assert circledast(d1, mu) == d1


def test_circledast_unit_element():
    u = distribution_from_s(TruncSeries.geometric(1, N - 1))
    assert u.moments == (F(1), F(0), F(-1), F(0), F(2), F(0), F(-5), F(0))
    rng = random.Random(59)
    mu = rand_dist(rng, mean=1)
    assert circledast(u, mu) == mu


def test_circledast_commutative_and_needs_mean_one():
    rng = random.Random(60)
    mu, nu = rand_dist(rng, mean=1), rand_dist(rng, mean=1)
    assert circledast(mu, nu) == circledast(nu, mu)
    with pytest.raises(NotMeanOne):
        circledast(Distribution.dirac(2, N), mu)


def test_boxdot_componentwise():
    a, b = F(2), F(3)
    assert boxdot(Distribution.dirac(a, N), Distribution.dirac(b, N)) == Distribution.dirac(a * b, N)
    rng = random.Random(61)
    mu = rand_dist(rng)
    assert boxdot(mu, Distribution.free_poisson(N)) == mu
    assert boxdot(mu, Distribution.dirac(0, N)) == Distribution.dirac(0, N)


def test_order_mismatch_raises():
    with pytest.raises(LengthMismatch):
        boxplus(Distribution.dirac(1, 4), Distribution.dirac(1, 5))


# -- LOG / EXP -------------------------------------------------------------------------


def test_log_exp_point_masses():
    assert dist_log(Distribution.dirac(1, N)) == Distribution.dirac(0, N - 1)
    assert dist_exp(Distribution.dirac(0, N)) == Distribution.dirac(1, N + 1)


def test_log_exp_mutually_inverse():
    rng = random.Random(62)
    for _ in range(6):
        mu = rand_dist(rng, mean=1)
        assert dist_exp(dist_log(mu)) == mu
        nu = rand_dist(rng)
        assert dist_log(dist_exp(nu)) == nu


def test_log_is_group_then_ring_homomorphism():
    rng = random.Random(63)
    for _ in range(6):
        mu, nu = rand_dist(rng, mean=1), rand_dist(rng, mean=1)
        assert dist_log(boxtimes(mu, nu)) == boxplus(dist_log(mu), dist_log(nu))
        assert dist_log(circledast(mu, nu)) == boxdot(dist_log(mu), dist_log(nu))


def test_log_requires_mean_one():
    with pytest.raises(NotMeanOne):
        dist_log(Distribution.dirac(2, N))


# -- partition-lattice bridge ------------------------------------------------------------


def test_mult_fn_transform_fixed_point_and_example():
    z = TruncSeries.identity(8)
    assert mult_fn_transform(z) == z
    f = z / (1 - z)
    out = mult_fn_transform(f)
    assert list(out.coeffs[:6]) == [F(0), F(1), F(-1), F(2), F(-5), F(14)]


def test_mult_fn_transform_output_shape():
    rng = random.Random(64)
    for _ in range(5):
        f = TruncSeries(
            [F(0), F(1)] + [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(6)], 7
        )
        out = mult_fn_transform(f)
        assert out.coeffs[0] == 0 and out.coeffs[1] == 1
    with pytest.raises(ZeroLinearTerm):
        mult_fn_transform(TruncSeries([0, 2], 4))
