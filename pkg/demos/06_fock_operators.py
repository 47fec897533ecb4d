"""Symbolic Fock-space operators: laws realized by creation/annihilation words.

The rewrite rule l*_i l_j = delta_ij collapses any product of words to a
normal-ordered word, the vacuum functional reads the empty-word
coefficient, and two canonical constructions realize a prescribed law:
l + f(l*) hits given free cumulants, (1+l) f(l*) hits S-transform 1/f.
Elements built on orthogonal generators are free.
"""

from fractions import Fraction as F

from freewitt.fock import (
    OpElement,
    canonical_T,
    freeness_witness,
    haagerup_op,
    vacuum_moments,
)
from freewitt.freeprob import CumulantVector, s_transform
from freewitt.series import TruncSeries

cap = 8
l = OpElement.creator(1, 1, cap)
ls = OpElement.annihilator(1, 1, cap)

print("Cuntz relation: l* l =", ls * l, "   but l l* =", l * ls)
print("semicircle element l + l*, moments:",
      [str(m) for m in vacuum_moments(l + ls, 8).moments])

print()
k = CumulantVector([F(1)] * 6)
T = canonical_T(k, 6)
print("all-ones cumulants realized by l + sum (l*)^n:")
print("  element:", T)
print("  moments:", [str(m) for m in vacuum_moments(T, 6).moments], " (Catalan)")

print()
f = TruncSeries([F(1), F(-1)], 5)
a = haagerup_op(f, 6)
mu = vacuum_moments(a, 6)
print("(1+l)(1-l*): moments", [str(m) for m in mu.moments])
print("  S-transform:", s_transform(mu), " (= 1/(1-z))")

print()
z = TruncSeries.identity(5)
rep = freeness_witness(z, z, 6)
print("two semicircles on orthogonal generators:")
for c in rep["checks"]:
    print("  %-28s %s" % (c["name"], "ok" if c["passed"] else "FAILED"))
