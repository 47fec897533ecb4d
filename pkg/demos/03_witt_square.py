"""One ring, four coordinate systems.

A length-L Witt vector can be rewritten as a unital power series, as a
necklace vector, or as its ghost components; all six connecting maps are
exact over the rationals and every square of maps commutes.  Ring
operations are componentwise in the ghost chart and are transported from
there, while the necklace product has its own lcm/gcd formula that must
(and does) agree.
"""

from fractions import Fraction as F

from freewitt.witt import (
    NecklaceVector,
    WittVector,
    check_diagram,
    frobenius,
    necklace_poly,
    necklace_to_ghost,
    verschiebung,
    witt_to_ghost,
    witt_to_lambda,
    witt_to_necklace,
)

L = 8
a = WittVector([F(2)] + [F(0)] * (L - 1))
print("witt vector      :", [str(c) for c in a.comps])
print("ghost components :", [str(c) for c in witt_to_ghost(a).comps])
print("unital series    :", witt_to_lambda(a).series)
print("necklace vector  :", [str(c) for c in witt_to_necklace(a).comps])
print("  (M(2,n) counts aperiodic binary necklaces; M(2,6) =", necklace_poly(F(2), 6), ")")

print()
b = WittVector([F(1, 2), F(-1), F(3), F(0), F(1), F(0), F(0), F(2)])
print("full diagram commutes on a messier vector:", check_diagram(b)["passed"])

print()
s = a + b
p = a * b
print("witt sum, first comps    :", [str(c) for c in s.comps[:4]])
print("witt product, first comps:", [str(c) for c in p.comps[:4]])
print("gamma(sum) == gamma(a)*gamma(b):",
      witt_to_lambda(s).series == witt_to_lambda(a).series * witt_to_lambda(b).series)

print()
e1 = NecklaceVector.one(6)
e2 = verschiebung(2, e1)
print("V_2(e1) =", [str(c) for c in e2.comps])
print("F_2(e2) =", [str(c) for c in frobenius(2, e2).comps], "  (F_r V_r = r)")
print("e2 * e2 =", [str(c) for c in (e2 * e2).comps])
print("ghost of e2:", [str(c) for c in necklace_to_ghost(e2).comps])
