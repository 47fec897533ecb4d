"""One-dimensional commutative formal group laws over the rationals.

A group law is a bivariate polynomial F(x, y) truncated at a total degree
D, constructed from a strict logarithm l (l(0)=0, l'(0)=1) as
F = l^{-1}(l(x) + l(y)).  The module also carries the Lie-algebra side:
derivations v(z) d/dz with the bracket [u, v] = (u v' - v u') d/dz and the
exponential map from derivations of valuation >= 2 to substitution
automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPositiveDerivation, NotStrict, ZeroLinearTerm
from .multipoly import MultiPoly
from .series import TruncSeries, comp_inverse

X = "x"
Y = "y"
ZVAR = "zz"


def series_subst(f: TruncSeries, u: MultiPoly, cap: int) -> MultiPoly:
    """f(u) for a polynomial u of positive minimal weight, Horner style."""
    top = min(f.order, cap)
    result = MultiPoly.const(f.coeffs[top])
    for k in range(top - 1, -1, -1):
        result = result.mul_capped(u, cap) + MultiPoly.const(f.coeffs[k])
    return result.truncate_weight(cap)


def series_in_var(f: TruncSeries, name: str, cap: int) -> MultiPoly:
    """The polynomial sum_{k<=cap} f_k * name^k."""
    terms = {}
    for k in range(min(f.order, cap) + 1):
        if f.coeffs[k] != 0:
            terms[(k,)] = f.coeffs[k]
    return MultiPoly((name,), terms)


@dataclass(frozen=True)
class Fgl:
    """Formal group law as a bivariate polynomial modulo total degree > degree."""

    F: MultiPoly
    degree: int

    def __call__(self, a, b, cap=None):
        """Substitute polynomials or scalars for x and y."""
        return self.F.substitute({X: a, Y: b}, self.degree if cap is None else cap)


def fgl_from_log(logf: TruncSeries, degree: int) -> Fgl:
    """Group law with the given strict logarithm: l^{-1}(l(x) + l(y))."""
    if logf.coeffs[0] != 0:
        raise ZeroLinearTerm("logarithm must vanish at 0")
    if logf.order < 1 or logf.coeffs[1] == 0:
        raise ZeroLinearTerm("logarithm needs a nonzero linear term")
    if logf.coeffs[1] != 1:
        raise NotStrict("logarithm must be strict (linear coefficient 1)")
    if logf.order < degree:
        raise ValueError("logarithm order %d below requested degree %d" % (logf.order, degree))
    expf = comp_inverse(logf)
    s = series_subst(logf, MultiPoly.var(X), degree) + series_subst(
        logf, MultiPoly.var(Y), degree
    )
    return Fgl(series_subst(expf, s, degree), degree)


def fgl_check_axioms(fgl: Fgl) -> dict:
    """Verify neutrality, associativity and commutativity up to the degree.

    Returns {"passed": bool, "checks": [...]}; the first failing identity
    reports one offending monomial.
    """
    D = fgl.degree
    checks = []

    def record(name, diff):
        if diff.is_zero():
            checks.append({"name": name, "passed": True})
            return True
        exp, c = diff.sorted_terms()[-1]
        mono = {n: e for n, e in zip(diff.vars, exp) if e}
        checks.append(
            {"name": name, "passed": False,
             "monomial": {"exps": mono, "coeff": str(c)}}
        )
        return False

    x = MultiPoly.var(X)
    y = MultiPoly.var(Y)
    z = MultiPoly.var(ZVAR)
    ok = record("neutral_right", fgl(x, 0) - x)
    ok = record("neutral_left", fgl(0, y) - y) and ok
    # associativity: F(x, F(y, z)) = F(F(x, y), z)
    f_yz = fgl.F.substitute({X: MultiPoly.var(Y), Y: z}, D)
    lhs = fgl(x, f_yz)
    rhs = fgl(fgl.F, z)
    ok = record("associativity", lhs - rhs) and ok
    ok = record("commutativity", fgl(y, x) - fgl.F) and ok
    return {"passed": ok, "checks": checks}


def fgl_formal_inverse(fgl: Fgl) -> TruncSeries:
    """The series i(x) with F(x, i(x)) = 0, solved degree by degree."""
    D = fgl.degree
    coeffs = [Fraction(0), Fraction(-1)] + [Fraction(0)] * (D - 1)
    for n in range(2, D + 1):
        partial = series_in_var(TruncSeries(coeffs, D), X, D)
        val = fgl(MultiPoly.var(X), partial).coeff({X: n})
        # F = x + y + higher, so the unknown coefficient enters with factor 1
        coeffs[n] = -val
    return TruncSeries(coeffs, D)


def fgl_log(fgl: Fgl) -> TruncSeries:
    """Recover the strict logarithm from the law itself.

    Differentiating l(F(x, y)) = l(x) + l(y) in y at y = 0 gives
    l'(x) = 1 / (dF/dy)(x, 0); integrate termwise.  Inverse of
    fgl_from_log up to the stored degree.
    """
    D = fgl.degree
    dcoeffs = [Fraction(0)] * D
    for exp, c in fgl.F.terms.items():
        mono = dict(zip(fgl.F.vars, exp))
        if mono.get("y", 0) == 1:
            i = mono.get("x", 0)
            if i < D:
                dcoeffs[i] = c
    deriv = TruncSeries.one(D - 1) / TruncSeries(dcoeffs, D - 1)
    return TruncSeries(
        [Fraction(0)] + [deriv.coeffs[n - 1] * Fraction(1, n) for n in range(1, D + 1)],
        D,
    )


def fgl_is_hom(f: TruncSeries, src: Fgl, dst: Fgl) -> bool:
    """Does f(src(x, y)) = dst(f(x), f(y)) hold up to the common degree?"""
    if f.coeffs[0] != 0:
        raise ZeroLinearTerm("homomorphisms fix 0")
    D = min(src.degree, dst.degree, f.order)
    lhs = series_subst(f, src.F.truncate_weight(D), D)
    rhs = dst.F.substitute(
        {X: series_in_var(f, X, D), Y: series_in_var(f, Y, D)}, D
    )
    return lhs == rhs


# -- derivations -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Derivation:
    """The derivation v(z) d/dz for a polynomial coefficient v.

    coeff_series is exact: coefficients beyond its stored order are zero,
    so applying the derivation to an order-N series is exact at order N
    whenever v has valuation >= 1.
    """

    coeff_series: TruncSeries

    @classmethod
    def from_coeffs(cls, coeffs) -> "Derivation":
        return cls(TruncSeries(list(coeffs) or [Fraction(0)]))

    @classmethod
    def ell(cls, n: int) -> "Derivation":
        """Basis derivation -z^{n+1} d/dz, n >= 0."""
        if n < 0:
            raise ValueError("only the non-negative part is modeled")
        return cls.from_coeffs([Fraction(0)] * (n + 1) + [Fraction(-1)])

    def valuation(self):
        return self.coeff_series.valuation()

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        a, b = self.coeff_series, other.coeff_series
        n = max(a.order, b.order)
        pad = lambda s: s.coeffs + (Fraction(0),) * (n - s.order)
        return pad(a) == pad(b)

    def __add__(self, other: "Derivation") -> "Derivation":
        a, b = self.coeff_series, other.coeff_series
        n = max(a.order, b.order)
        return Derivation(
            TruncSeries(
                [
                    (a.coeffs[k] if k <= a.order else 0)
                    + (b.coeffs[k] if k <= b.order else 0)
                    for k in range(n + 1)
                ],
                n,
            )
        )

    def __rmul__(self, c) -> "Derivation":
        return Derivation(self.coeff_series * c)

    def __neg__(self):
        return Derivation(-self.coeff_series)

    def apply(self, f: TruncSeries) -> TruncSeries:
        """v * f', exact at the order of f (needs valuation(v) >= 1)."""
        v = self.coeff_series
        if not v.is_zero() and v.valuation() == 0:
            raise NotPositiveDerivation("coefficient must vanish at 0")
        N = f.order
        out = [Fraction(0)] * (N + 1)
        for i in range(1, min(v.order, N) + 1):
            vi = v.coeffs[i]
            if vi == 0:
                continue
            for j in range(0, N - i + 1):
                fc = f.coeffs[j + 1] if j + 1 <= N else 0
                if fc != 0:
                    out[i + j] += vi * (j + 1) * fc
        return TruncSeries(out, N)


def derivation_bracket(u: Derivation, v: Derivation) -> Derivation:
    """[u, v] = (u v' - v u') d/dz, computed on exact polynomial data."""
    a, b = u.coeff_series, v.coeff_series
    da, db = a.derivative(), b.derivative()
    n = a.order + b.order
    prod = lambda p, q: TruncSeries(list(p.coeffs), n) * TruncSeries(list(q.coeffs), n)
    return Derivation(prod(a, db) - prod(b, da))


def exp_derivation(v: Derivation, order: int) -> TruncSeries:
    """Action on z of exp(v) for v of valuation >= 2: sum v^k(z)/k!.

    Each application of v raises valuation, so the sum is degreewise finite
    and lands in the strict substitution group (linear coefficient 1).
    """
    val = v.valuation()
    if val is not None and val < 2:
        raise NotPositiveDerivation("exp needs coefficient valuation >= 2")
    total = TruncSeries.identity(order)
    term = total
    k = 0
    while True:
        k += 1
        term = v.apply(term) * Fraction(1, k)
        if term.is_zero() or k > order + 1:
            break
        total = total + term
    return total
