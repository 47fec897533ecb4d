"""Multiplicative genera: projective-space values, characteristic series,
Hirzebruch polynomials, and the operator realization.

A genus is pinned down by its values on CP^n; the characteristic series
Q = z / log^{-1}(z) generates the multiplicative sequence by symmetric
reduction, and (1+l)(1/Q)(l*) realizes the genus as a noncommutative
random variable whose S-transform recovers Q.
"""

from freewitt.fock import genus_operator, vacuum_moments
from freewitt.freeprob import s_transform
from freewitt.genus import (
    genus_add_lambda,
    genus_compose_log,
    msequence_from_q,
    msequence_multiplicativity_check,
    named_genus,
    q_from_genus,
)

todd = named_genus("todd", 11)
sig = named_genus("L", 11)

qt = q_from_genus(todd)
ql = q_from_genus(sig)
print("Todd genus  Q =", qt.q)
print("L genus     Q =", ql.q)

print()
ms = msequence_from_q(qt, 4)
print("Todd polynomials by symmetric reduction:")
for n, K in enumerate(ms.K):
    print("  K_%d =" % n, K)
print("multiplicativity identity to weight 4:",
      msequence_multiplicativity_check(ms, 4)["passed"])

print()
print("the same genus as a Fock operator:")
q6 = qt.q.truncate(6)
mu = vacuum_moments(genus_operator(q6, 6), 6)
print("  moments:", [str(m) for m in mu.moments])
print("  S-transform equals Q:", s_transform(mu) == q6.truncate(5))

print()
print("two algebraic structures on genera:")
both = genus_add_lambda(todd, sig)
print("  series-product structure, cp values:", [str(v) for v in both.cp_values[:5]])
comp = genus_compose_log(todd, sig)
print("  log-composition structure, cp values:", [str(v) for v in comp.cp_values[:5]])
print("  composition is noncommutative:",
      genus_compose_log(todd, sig) != genus_compose_log(sig, todd))
