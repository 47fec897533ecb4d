"""Faber polynomials three ways, Grunsky coefficients, power operations.

The data is h(z) = 1 + b_1 z + ...; near infinity g(z) = z h(1/z) is a
perturbed coordinate and its Faber polynomials can be computed by a
recursion, by a generating function, or as a Hessenberg determinant.  The
same determinant with b_j replaced by graded variables is, up to sign, the
classical power-sum/elementary-symmetric determinant.
"""

from fractions import Fraction as F

from freewitt.faber import (
    adams_poly,
    check_adams_lemma,
    faber_det,
    faber_from_generating,
    faber_recursion,
    grunsky_coeffs,
)
from freewitt.multipoly import MultiPoly

b = [F(1, 2), F(-2), F(3), F(1, 3), F(2), F(-1)]
rec = faber_recursion(b, 6)
gen = faber_from_generating(b, 6)
det = [faber_det(b, n) for n in range(7)]

print("recursion F_2(w) coefficients :", [str(c) for c in rec[2].coeffs])
print("determinant route agrees      :", [p.coeffs for p in rec] == [p.coeffs for p in det])
print("values at w=0 from the series :", [str(v) for v in gen])

print()
print("symbolic, with b_j as weight-j variables:")
bs = [MultiPoly.var("b%02d" % j, weight=j) for j in range(1, 4)]
print("  F_3(0) =", faber_recursion(bs, 3)[3].at_zero())

print()
print("Grunsky table of g = z + b2/z (only beta_11 and beta_22 survive):")
t = grunsky_coeffs([F(0), F(5, 7), F(0), F(0)], 4)
for row in t.beta:
    print("  ", [str(c) for c in row])
print("symmetric:", t.is_symmetric())

print()
print("power operations as determinants in lambda variables:")
for n in (1, 2, 3, 4):
    print("  Psi^%d =" % n, adams_poly(n))
print("sign identity against the Faber recursion, n <= 6:", check_adams_lemma(6))
