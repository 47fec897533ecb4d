"""Free probability as exact algebra on moment sequences.

Moments and free cumulants are dual charts through the non-crossing
partition formula; the R- and S-transforms linearize the two free
convolutions; and on top of those sit two full ring structures related by
the LOG/EXP isomorphism, mirroring series-ring and ghost-ring arithmetic.
"""

from fractions import Fraction as F

from freewitt.freeprob import (
    Distribution,
    boxdot,
    boxplus,
    boxtimes,
    circledast,
    cumulants_from_moments,
    dist_exp,
    dist_log,
    distribution_from_s,
    enumerate_partitions,
    r_transform,
    s_transform,
)
from freewitt.series import TruncSeries

N = 8

print("|NC(4)| =", len(enumerate_partitions(4, "noncrossing")),
      "  |P(4)| =", len(enumerate_partitions(4)),
      "  the one crossing partition: ((1,3),(2,4))")

semi = Distribution.semicircle(N)
fp = Distribution.free_poisson(N)
print("semicircle moments :", [str(m) for m in semi.moments])
print("free Poisson moments (Catalan):", [str(m) for m in fp.moments])
print("R(semicircle) =", r_transform(semi))
print("S(free Poisson) =", s_transform(fp), " (= 1/(1+z))")

print()
print("free convolutions:")
s2 = boxplus(semi, semi)
print("  semicircle [+] semicircle: m2, m4 =", s2.moments[1], ",", s2.moments[3])
fp2 = boxtimes(fp, fp)
print("  fP [x] fP: m1, m2 =", fp2.moments[0], ",", fp2.moments[1])

print()
print("the ring on mean-1 laws: [x] is addition, the S-pulled product is mul")
u = distribution_from_s(TruncSeries.geometric(1, N - 1))
print("  multiplicative unit's moments:", [str(m) for m in u.moments])
mu = Distribution([F(1), F(1, 2), F(-1), F(2), F(0), F(1), F(1, 3), F(-2)])
print("  u (*) mu == mu:", circledast(u, mu) == mu)

print()
print("LOG carries ([x], (*)) to ([+], [.]):")
nu = Distribution([F(1), F(-1), F(1, 2), F(0), F(3), F(1), F(0), F(1, 4)])
print("  LOG(mu [x] nu) == LOG(mu) [+] LOG(nu):",
      dist_log(boxtimes(mu, nu)) == boxplus(dist_log(mu), dist_log(nu)))
print("  LOG(mu (*) nu) == LOG(mu) [.] LOG(nu):",
      dist_log(circledast(mu, nu)) == boxdot(dist_log(mu), dist_log(nu)))
print("  EXP(LOG(mu)) == mu:", dist_exp(dist_log(mu)) == mu)
print("  cumulants of LOG(mu) are the ghost chart of S(mu):",
      [str(k) for k in cumulants_from_moments(dist_log(mu)).k])
