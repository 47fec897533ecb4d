"""Formal group laws from strict logarithms, and the Lie algebra underneath.

A strict series l(z) = z + ... produces the law F(x,y) = l^{-1}(l(x)+l(y));
the law is checked against the three defining axioms as exact polynomial
identities.  Derivations -z^{n+1} d/dz close under the bracket with
[l_m, l_n] = (m-n) l_{m+n}, and exponentiating a derivation of valuation
two or more gives back a strict substitution automorphism.
"""

from freewitt.formal_group import (
    Derivation,
    derivation_bracket,
    exp_derivation,
    fgl_check_axioms,
    fgl_formal_inverse,
    fgl_from_log,
    fgl_is_hom,
    fgl_log,
)
from freewitt.series import TruncSeries, exp_zero, log_unit

z = TruncSeries.identity(8)

additive = fgl_from_log(z, 6)
multiplicative = fgl_from_log(log_unit(1 + z), 6)
print("additive law:      ", additive.F)
print("multiplicative law:", multiplicative.F)
print("axioms:", fgl_check_axioms(multiplicative)["passed"])
print("formal inverse of x+y+xy:", fgl_formal_inverse(multiplicative), " (= -x/(1+x))")
print("log recovered from the law:", fgl_log(multiplicative))

print()
print("e^z - 1 intertwines the two laws:")
print("  is_hom:", fgl_is_hom(exp_zero(z) - 1, additive, multiplicative))

print()
print("bracket table on the first basis derivations ( [l_m, l_n] = (m-n) l_{m+n} ):")
for m, n in [(1, 2), (0, 3), (2, 5)]:
    br = derivation_bracket(Derivation.ell(m), Derivation.ell(n))
    print("  [l%d, l%d] coefficient series:" % (m, n), br.coeff_series)

print()
print("the time-1 flow of -z^2 d/dz is the Moebius shift:")
print("  exp(l_1) acting on z:", exp_derivation(Derivation.ell(1), 8))
print("  z/(1+z)             :", z / (1 + z))
