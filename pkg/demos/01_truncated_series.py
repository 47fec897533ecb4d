"""Exact truncated power series: the kernel everything else runs on.

Every coefficient is a fractions.Fraction, every result carries the order
up to which it is exact, and binary operations return the minimum order of
their inputs so precision is never invented.
"""

from fractions import Fraction as F

from freewitt.series import (
    TruncSeries,
    comp_inverse,
    compose,
    exp_zero,
    log_unit,
    z_dlog,
    z_dlog_inv,
)

z = TruncSeries.identity(10)

print("geometric series      1/(1-z) =", 1 / (1 - z))
print("log of it         log(1/(1-z)) =", log_unit(1 / (1 - z)))
print("its z d/dz log               =", z_dlog(1 / (1 - z)))

print()
print("compositional inversion is a triangular solve:")
f = z + z * z
g = comp_inverse(f)
print("  f        =", f)
print("  f^{-1}   =", g, "   (signed Catalan numbers)")
print("  f(f^{-1}) =", compose(f, g))

print()
print("log/exp are mutually inverse at any order:")
w = TruncSeries([F(1), F(3), F(1)], 10)
print("  exp(log(1 + 3z + z^2)) =", exp_zero(log_unit(w)))

print()
print("z d/dz log turns products into sums:")
a, b = 1 + z, 1 - 2 * z
print("  zdlog(a*b)           =", z_dlog(a * b))
print("  zdlog(a) + zdlog(b)  =", z_dlog(a) + z_dlog(b))
print("  inverse transform    =", z_dlog_inv(z_dlog(a * b)))
