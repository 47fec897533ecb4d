"""Symbolic algebra of creation/annihilation words over the rationals.

Words are normal ordered: all creation letters stand left of all
annihilation letters, so a word is a pair of index sequences.  The single
rewrite rule is the orthonormality relation

    l*_i l_j  =  delta_{ij} 1,

applied eagerly at the interface when two words are concatenated; it is
length-reducing and overlap-free, so the reduction is confluent and a
product of monomials is again a monomial (or zero).  Elements are finite
rational combinations of words, truncated at a total word length
``degree_cap``.

The vacuum functional reads the coefficient of the empty word.  Moments
of an element are computed through iterated products in which words still
carrying creation letters are dropped from the running power: a creation
letter at the left end of a word can never be removed by multiplying on
the right, so such words contribute to no later vacuum coefficient.  The
unpruned route is kept in the tests as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConstantTermNotOne,
    DegreeCapTooSmall,
    GeneratorMismatch,
    ZeroConstantTerm,
)
from .freeprob import Distribution, boxplus, boxtimes
from .series import TruncSeries

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class OpWord:
    creators: tuple
    annihilators: tuple

    @property
    def length(self) -> int:
        return len(self.creators) + len(self.annihilators)

    def adjoint(self) -> "OpWord":
        return OpWord(tuple(reversed(self.annihilators)), tuple(reversed(self.creators)))

    def __repr__(self):
        cs = "".join("l%d" % i for i in self.creators)
        as_ = "".join("l%d*" % j for j in self.annihilators)
        return (cs + as_) or "1"


EMPTY = OpWord((), ())


def _word_mul(w1: OpWord, w2: OpWord):
    """Product of two normal-ordered words: one word, or None if it vanishes."""
    a, c = w1.annihilators, w2.creators
    k = 0
    limit = min(len(a), len(c))
    while k < limit:
        if a[len(a) - 1 - k] != c[k]:
            return None
        k += 1
    return OpWord(w1.creators + c[k:], a[: len(a) - k] + w2.annihilators)


class OpElement:
    """Finite combination of normal-ordered words, truncated at degree_cap."""

    __slots__ = ("terms", "generators", "degree_cap")

    def __init__(self, terms: dict, generators: int, degree_cap: int):
        clean = {}
        for w, c in terms.items():
            if isinstance(c, int):
                c = Fraction(c)
            if c == 0 or w.length > degree_cap:
                continue
            if any(i < 1 or i > generators for i in w.creators + w.annihilators):
                raise ValueError("generator index out of range")
            clean[w] = c
        self.terms = clean
        self.generators = generators
        self.degree_cap = degree_cap

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, generators: int, degree_cap: int) -> "OpElement":
        return cls({}, generators, degree_cap)

    @classmethod
    def one(cls, generators: int, degree_cap: int) -> "OpElement":
        return cls({EMPTY: ONE}, generators, degree_cap)

    @classmethod
    def creator(cls, i: int, generators: int, degree_cap: int) -> "OpElement":
        return cls({OpWord((i,), ()): ONE}, generators, degree_cap)

    @classmethod
    def annihilator(cls, i: int, generators: int, degree_cap: int) -> "OpElement":
        return cls({OpWord((), (i,)): ONE}, generators, degree_cap)

    # -- algebra ---------------------------------------------------------------

    def _check(self, other: "OpElement"):
        if self.generators != other.generators or self.degree_cap != other.degree_cap:
            raise GeneratorMismatch("mismatched generator count or degree cap")

    def __add__(self, other):
        if not isinstance(other, OpElement):
            other = OpElement({EMPTY: other}, self.generators, self.degree_cap)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return OpElement(out, self.generators, self.degree_cap)

    __radd__ = __add__

    def __neg__(self):
        return OpElement(
            {w: -c for w, c in self.terms.items()}, self.generators, self.degree_cap
        )

    def __sub__(self, other):
        if not isinstance(other, OpElement):
            other = OpElement({EMPTY: other}, self.generators, self.degree_cap)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, OpElement):
            return OpElement(
                {w: c * other for w, c in self.terms.items()},
                self.generators,
                self.degree_cap,
            )
        self._check(other)
        cap = self.degree_cap
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = _word_mul(w1, w2)
                if w is None or w.length > cap:
                    continue
                s = out.get(w, ZERO) + c1 * c2
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return OpElement(out, self.generators, cap)

    __rmul__ = lambda self, other: self.__mul__(other)

    def __pow__(self, n: int):
        result = OpElement.one(self.generators, self.degree_cap)
        for _ in range(n):
            result = result * self
        return result

    def adjoint(self) -> "OpElement":
        return OpElement(
            {w.adjoint(): c for w, c in self.terms.items()},
            self.generators,
            self.degree_cap,
        )

    def vacuum(self) -> Fraction:
        """Coefficient of the empty word."""
        return self.terms.get(EMPTY, ZERO)

    def prune_creators(self) -> "OpElement":
        """Keep only words without creation letters (see module docstring)."""
        return OpElement(
            {w: c for w, c in self.terms.items() if not w.creators},
            self.generators,
            self.degree_cap,
        )

    def mul_for_vacuum(self, other: "OpElement", max_ann: int) -> "OpElement":
        """Product keeping only annihilator words of bounded length.

        Used inside vacuum-moment loops: a word with creation letters never
        reaches the empty word again, and a pure annihilator word longer
        than the creation supply of the remaining factors cannot either, so
        both may be dropped.
        """
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            if w1.creators:
                continue
            for w2, c2 in other.terms.items():
                w = _word_mul(w1, w2)
                if (
                    w is None
                    or w.creators
                    or len(w.annihilators) > max_ann
                ):
                    continue
                s = out.get(w, ZERO) + c1 * c2
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return OpElement(out, self.generators, self.degree_cap)

    def max_creators(self) -> int:
        return max((len(w.creators) for w in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, OpElement):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.degree_cap == other.degree_cap
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "OpElement(0)"
        body = " + ".join(
            "%s*%r" % (c, w)
            for w, c in sorted(self.terms.items(), key=lambda t: (t[0].length, repr(t[0])))
        )
        return "OpElement(%s)" % body


def op_mul(a: OpElement, b: OpElement) -> OpElement:
    return a * b


def series_of_annihilators(f: TruncSeries, gen: int, generators: int, degree_cap: int) -> OpElement:
    """f(l*_gen) as an element: sum f_j (l*)^j up to the degree cap."""
    terms = {}
    for j in range(min(f.order, degree_cap) + 1):
        if f.coeffs[j] != 0:
            terms[OpWord((), (gen,) * j)] = f.coeffs[j]
    return OpElement(terms, generators, degree_cap)


def vacuum_moments(a: OpElement, order: int) -> Distribution:
    """Moments m_n = vacuum coefficient of a^n, n = 1..order.

    Words with creation letters are pruned from the running power; this
    leaves every later vacuum coefficient unchanged because creation
    letters at the left of a word survive any further right
    multiplication.
    """
    if a.degree_cap < order:
        raise DegreeCapTooSmall(
            "degree cap %d below moment order %d" % (a.degree_cap, order)
        )
    supply = a.max_creators()
    power = OpElement.one(a.generators, a.degree_cap)
    moments = []
    for step in range(1, order + 1):
        power = power.mul_for_vacuum(a, min(a.degree_cap, supply * (order - step)))
        moments.append(power.vacuum())
    return Distribution(moments)


def canonical_T(k, order: int, gen: int = 1, generators: int = 1,
                degree_cap: int | None = None) -> OpElement:
    """Canonical additive realization l + f(l*) of a cumulant vector.

    f is the series with f_j = k_{j+1}, so the law of the element has
    exactly the prescribed free cumulants.
    """
    kt = list(getattr(k, "k", k))
    if degree_cap is None:
        degree_cap = max(order, 1)
    if degree_cap < order:
        raise DegreeCapTooSmall("degree cap %d below order %d" % (degree_cap, order))
    f = TruncSeries(kt[:order] + [ZERO] * max(0, order - len(kt)), max(order - 1, 0))
    el = series_of_annihilators(f, gen, generators, degree_cap)
    return el + OpElement.creator(gen, generators, degree_cap)


def haagerup_op(f: TruncSeries, order: int, gen: int = 1, generators: int = 1,
                degree_cap: int | None = None) -> OpElement:
    """Multiplicative realization (1 + l) f(l*); needs f(0) != 0.

    The law of the element has S-transform 1/f.
    """
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("multiplicative form needs f(0) != 0")
    if degree_cap is None:
        degree_cap = max(order, 1)
    if degree_cap < order:
        raise DegreeCapTooSmall("degree cap %d below order %d" % (degree_cap, order))
    ftr = f.truncate(min(f.order, max(order - 1, 0)))
    base = series_of_annihilators(ftr, gen, generators, degree_cap)
    return base + OpElement.creator(gen, generators, degree_cap) * base


def genus_operator(q: TruncSeries, order: int, generators: int = 1,
                   degree_cap: int | None = None) -> OpElement:
    """Fock representation of a genus with characteristic series q.

    The element is (1 + l) (1/q)(l*); its law has S-transform q.
    """
    if q.coeffs[0] != 1:
        raise ConstantTermNotOne("characteristic series must be unital")
    inv = TruncSeries.one(q.order) / q
    return haagerup_op(inv, order, 1, generators, degree_cap)


def freeness_witness(f: TruncSeries, g: TruncSeries, order: int) -> dict:
    """Exercise freeness of elements built on orthogonal generators.

    Three checks: moments of a + b match the free additive convolution of
    the marginals (additive forms), moments of a b match the free
    multiplicative convolution (multiplicative forms, skipped when a
    constant term vanishes), and the vanishing of alternating products of
    centered powers up to total degree `order`.
    """
    cap = 2 * order
    checks = []

    a = canonical_T(list(f.coeffs), order, 1, 2, cap)
    b = canonical_T(list(g.coeffs), order, 2, 2, cap)
    mu_a = vacuum_moments(a, order)
    mu_b = vacuum_moments(b, order)
    sum_ok = vacuum_moments(a + b, order) == boxplus(mu_a, mu_b)
    checks.append({"name": "additive_convolution", "passed": sum_ok})

    if f.coeffs[0] != 0 and g.coeffs[0] != 0:
        am = haagerup_op(f, order, 1, 2, cap)
        bm = haagerup_op(g, order, 2, 2, cap)
        prod_ok = vacuum_moments(am * bm, order) == boxtimes(
            vacuum_moments(am, order), vacuum_moments(bm, order)
        )
        checks.append({"name": "multiplicative_convolution", "passed": prod_ok})
    else:
        checks.append({"name": "multiplicative_convolution", "passed": True,
                       "skipped": "zero constant term"})

    alt_ok = _alternating_centered_check(a, b, mu_a, mu_b, order)
    checks.append({"name": "alternating_centered", "passed": alt_ok})

    return {"passed": all(c["passed"] for c in checks), "checks": checks}


def _alternating_centered_check(a, b, mu_a, mu_b, order) -> bool:
    """tau(p_1 p_2 ... p_q) = 0 for alternating centered powers.

    Patterns are compositions (e_1..e_q), q >= 2, sum e_i <= order, with
    factors alternating between the two elements; each factor is
    x^{e} - tau(x^{e}).
    """
    one = OpElement.one(a.generators, a.degree_cap)
    pow_a, pow_b = [one], [one]
    for i in range(order):
        pow_a.append(pow_a[-1] * a)
        pow_b.append(pow_b[-1] * b)
    centered_a = [None] + [pow_a[e] - mu_a.moments[e - 1] for e in range(1, order + 1)]
    centered_b = [None] + [pow_b[e] - mu_b.moments[e - 1] for e in range(1, order + 1)]

    def patterns(total):
        for q in range(2, total + 1):
            for comp in _compositions(total, q):
                yield comp

    for total in range(2, order + 1):
        for comp in patterns(total):
            for start_a in (True, False):
                acc = one
                use_a = start_a
                remaining = total
                for e in comp:
                    remaining -= e
                    factor = centered_a[e] if use_a else centered_b[e]
                    acc = acc.mul_for_vacuum(factor, remaining)
                    use_a = not use_a
                if acc.vacuum() != 0:
                    return False
    return True


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
