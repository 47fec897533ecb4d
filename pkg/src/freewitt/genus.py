"""Complex-valued multiplicative genera at desk scale.

A genus is stored through its values on the complex projective spaces,
(phi(CP^0)=1, phi(CP^1), ..., phi(CP^{L-1})); these are equivalent to the
strict logarithm

    log(z) = sum_{n>=1} phi(CP^{n-1}) / n * z^n

and to the unital characteristic series Q(z) = z / log^{-1}(z).  From Q
the multiplicative sequence K_0, K_1, ... is recomputed by symmetric
reduction: expand prod_i Q(x_i) in weight-1 roots, then rewrite each
homogeneous piece in the elementary symmetric polynomials p_k of the
roots.  Two algebraic structures are exposed: the commutative one
(multiply characteristic series) and the noncommutative one (compose
logarithms).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotStrictAutomorphism, ReductionFailure, UnknownName
from .multipoly import MultiPoly
from .series import TruncSeries, comp_inverse

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Genus:
    """Values on projective spaces; first entry is phi(CP^0) = 1."""

    cp_values: tuple

    def __init__(self, cp_values):
        vals = tuple(Fraction(v) if isinstance(v, int) else v for v in cp_values)
        if not vals or vals[0] != 1:
            raise NotStrictAutomorphism("phi(CP^0) must be 1")
        object.__setattr__(self, "cp_values", vals)

    @property
    def length(self) -> int:
        return len(self.cp_values)


@dataclass(frozen=True)
class CharSeries:
    """Unital characteristic power series Q."""

    q: TruncSeries

    def __init__(self, q: TruncSeries):
        if q.coeffs[0] != 1:
            raise NotStrictAutomorphism("characteristic series must be unital")
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class MSequence:
    """Polynomials K_0..K_D in p_1..p_D, K_n homogeneous of weight n."""

    K: tuple


def log_from_genus(g: Genus) -> TruncSeries:
    coeffs = [ZERO] + [g.cp_values[n - 1] / n for n in range(1, g.length + 1)]
    return TruncSeries(coeffs, g.length)


def genus_from_log(l: TruncSeries) -> Genus:
    if l.coeffs[0] != 0 or l.order < 1 or l.coeffs[1] != 1:
        raise NotStrictAutomorphism("logarithm must be z + higher order")
    return Genus([n * l.coeffs[n] for n in range(1, l.order + 1)])


def q_from_log(l: TruncSeries) -> CharSeries:
    """Q(z) = z / log^{-1}(z); an order-L log yields Q to order L-1."""
    if l.coeffs[0] != 0 or l.order < 1 or l.coeffs[1] != 1:
        raise NotStrictAutomorphism("logarithm must be z + higher order")
    linv = comp_inverse(l)
    return CharSeries(TruncSeries.one(l.order - 1) / linv.shift_down(1))


def log_from_q(q: CharSeries) -> TruncSeries:
    """Invert q_from_log: log = (z / Q)^{-1} under composition; gains an order."""
    linv = (TruncSeries.one(q.q.order) / q.q).shift_up(1)
    return comp_inverse(linv)


def q_from_genus(g: Genus) -> CharSeries:
    return q_from_log(log_from_genus(g))


def named_genus(name: str, length: int = 11) -> Genus:
    """Stock examples: 'trivial', 'todd' and the signature genus 'L'."""
    if name == "trivial":
        return Genus([ONE] + [ZERO] * (length - 1))
    if name == "todd":
        return Genus([ONE] * length)
    if name == "L":
        return Genus([ONE if n % 2 == 0 else ZERO for n in range(length)])
    raise UnknownName("no genus named %r" % name)


# -- multiplicative sequences ----------------------------------------------------


def _root_name(i: int) -> str:
    return "x%02d" % i


def _elementary_symmetric(names) -> list[MultiPoly]:
    """[e_0, e_1, ..., e_n] in the given root variables."""
    polys = [MultiPoly.const(1)]
    for name in names:
        x = MultiPoly.var(name)
        new = []
        for k in range(len(polys) + 1):
            term = polys[k] if k < len(polys) else None
            low = polys[k - 1] * x if k >= 1 else None
            if term is None:
                new.append(low)
            elif low is None:
                new.append(term)
            else:
                new.append(term + low)
        polys = new
    return polys


def _reduce_symmetric(h: MultiPoly, names, esym, weight: int) -> MultiPoly:
    """Rewrite a homogeneous symmetric polynomial in the e_k, as p-variables.

    Classical triangular elimination: the lex-leading exponent of a
    symmetric polynomial is a partition lambda, and the product
    prod e_k^{lambda_k - lambda_{k+1}} has the same leading monomial with
    coefficient 1, so subtracting strictly decreases the leading term.
    """
    n = len(names)
    out = MultiPoly.const(0)
    work = h
    guard = 0
    while not work.is_zero():
        guard += 1
        if guard > 10000:
            raise ReductionFailure("symmetric reduction did not terminate")
        exps = work.exponents_for(names)
        lead = max(exps)
        c = exps[lead]
        lam = list(lead) + [0]
        if any(lam[i] < lam[i + 1] for i in range(n)):
            raise ReductionFailure("leading exponent is not a partition")
        e_prod = MultiPoly.const(1)
        p_prod = MultiPoly.const(c)
        for k in range(1, n + 1):
            mult = lam[k - 1] - lam[k] if k < len(lam) else lam[k - 1]
            if mult > 0:
                e_prod = e_prod * esym[k] ** mult
                p_prod = p_prod * MultiPoly.var("p%d" % k, weight=k) ** mult
        work = work - c * e_prod
        out = out + p_prod
    return out


def msequence_from_q(q: CharSeries, D: int) -> MSequence:
    """K_0..K_D by expanding prod Q(x_i) over formal weight-1 roots.

    The weight-n piece uses n roots, enough for e_1..e_n to be
    algebraically independent; the answer is stable when more roots are
    added.
    """
    if q.q.order < D:
        raise ValueError("characteristic series order %d below D=%d" % (q.q.order, D))
    Ks = [MultiPoly.const(1)]
    for n in range(1, D + 1):
        names = [_root_name(i) for i in range(1, n + 1)]
        prod = MultiPoly.const(1)
        for name in names:
            qx = MultiPoly((name,), {
                (k,): q.q.coeffs[k] for k in range(n + 1) if q.q.coeffs[k] != 0
            })
            prod = prod.mul_capped(qx, n)
        piece = MultiPoly(
            tuple(names),
            {e: c for e, c in prod.exponents_for(names).items() if sum(e) == n},
        )
        esym = _elementary_symmetric(names)
        Ks.append(_reduce_symmetric(piece, names, esym, n))
    return MSequence(tuple(Ks))


def msequence_multiplicativity_check(K: MSequence, D: int) -> dict:
    """Verify that the sequence turns series factorizations into products.

    With independent variables p'_i, p''_j and p_k = sum_{i+j=k} p'_i p''_j,
    checks K_k(p) = sum_{i+j=k} K_i(p') K_j(p'') as an exact polynomial
    identity for every k <= D.
    """
    if len(K.K) <= D:
        raise ValueError("sequence too short for weight %d" % D)
    left = [MultiPoly.var("q%d" % i, weight=i) for i in range(1, D + 1)]
    right = [MultiPoly.var("r%d" % i, weight=i) for i in range(1, D + 1)]
    conv = {}
    for k in range(1, D + 1):
        total = left[k - 1] + right[k - 1]
        for i in range(1, k):
            total = total + left[i - 1] * right[k - i - 1]
        conv["p%d" % k] = total

    def k_in(vars_, n):
        sub = {"p%d" % j: vars_[j - 1] for j in range(1, n + 1)}
        return K.K[n].substitute(sub)

    checks = []
    ok = True
    for k in range(0, D + 1):
        lhs = K.K[k].substitute(conv)
        rhs = MultiPoly.const(0)
        for i in range(0, k + 1):
            rhs = rhs + k_in(left, i) * k_in(right, k - i)
        diff = lhs - rhs
        if diff.is_zero():
            checks.append({"name": "weight_%d" % k, "passed": True})
        else:
            ok = False
            exp, c = diff.sorted_terms()[-1]
            mono = {v: e for v, e in zip(diff.vars, exp) if e}
            checks.append(
                {"name": "weight_%d" % k, "passed": False,
                 "monomial": {"exps": mono, "coeff": str(c)}}
            )
    return {"passed": ok, "checks": checks}


# -- the two algebraic structures on genera ------------------------------------------


def genus_add_lambda(g1: Genus, g2: Genus) -> Genus:
    """Commutative structure: characteristic series multiply."""
    q1, q2 = q_from_genus(g1), q_from_genus(g2)
    return genus_from_log(log_from_q(CharSeries(q1.q * q2.q)))


def genus_compose_log(g1: Genus, g2: Genus) -> Genus:
    """Noncommutative structure: logarithms compose (strict stays strict)."""
    from .series import compose

    l1, l2 = log_from_genus(g1), log_from_genus(g2)
    return genus_from_log(compose(l1, l2))
