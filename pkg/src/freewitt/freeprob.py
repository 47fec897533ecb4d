"""Non-commutative probability laws as exact moment sequences.

A ``Distribution`` is the truncation (m_1..m_N) of a linear functional
with m_0 = 1; no positivity is imposed, the operations are formal.  Free
cumulants are the dual chart through the moment-cumulant formula

    m_n = sum over non-crossing partitions pi of prod_{V in pi} k_{|V|}.

The production moment<->cumulant conversions use the triangular
recursion obtained by splitting a non-crossing partition at the block
containing 1; exhaustive enumeration over NC(n) stays available as the
independent oracle.  On top of that sit the Cauchy/R/S transforms, the
four ring operations (free additive and multiplicative convolution, the
lambda-ring product pulled through S, the componentwise cumulant
product), and the LOG/EXP ring isomorphism between mean-1 laws under
(boxtimes, star) and all laws under (boxplus, dot).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InsufficientLength,
    LengthMismatch,
    MeanZero,
    NotMeanOne,
    ZeroLinearTerm,
)
from .series import TruncSeries, comp_inverse, z_dlog, z_dlog_inv
from .witt import LambdaElement

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac_tuple(values) -> tuple:
    out = []
    for v in values:
        if isinstance(v, int):
            v = Fraction(v)
        if not isinstance(v, Fraction):
            raise TypeError("expected exact rationals")
        out.append(v)
    if not out:
        raise ValueError("order must be at least 1")
    return tuple(out)


@dataclass(frozen=True)
class Distribution:
    """Moment sequence (m_1..m_N); m_0 = 1 is implicit."""

    moments: tuple

    def __init__(self, moments):
        object.__setattr__(self, "moments", _frac_tuple(moments))

    @property
    def order(self) -> int:
        return len(self.moments)

    def mean(self) -> Fraction:
        return self.moments[0]

    def in_sigma_x(self) -> bool:
        return self.moments[0] != 0

    def in_sigma_1(self) -> bool:
        return self.moments[0] == 1

    def truncate(self, n: int) -> "Distribution":
        return Distribution(self.moments[:n])

    @classmethod
    def dirac(cls, c, order: int) -> "Distribution":
        c = Fraction(c)
        return cls([c ** n for n in range(1, order + 1)])

    @classmethod
    def semicircle(cls, order: int) -> "Distribution":
        k = ([ZERO, ONE] + [ZERO] * order)[:order]
        return moments_from_cumulants(CumulantVector(k))

    @classmethod
    def free_poisson(cls, order: int) -> "Distribution":
        return moments_from_cumulants(CumulantVector([ONE] * order))


@dataclass(frozen=True)
class CumulantVector:
    k: tuple

    def __init__(self, k):
        object.__setattr__(self, "k", _frac_tuple(k))

    @property
    def order(self) -> int:
        return len(self.k)


# -- partitions -----------------------------------------------------------------


def set_partitions(n: int) -> list[tuple]:
    """All partitions of {1..n} as tuples of sorted blocks (desk scale n <= 10)."""
    if n < 1 or n > 10:
        raise ValueError("set partition enumeration is limited to 1 <= n <= 10")
    parts = []

    def extend(k, blocks):
        if k > n:
            parts.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(k)
            extend(k + 1, blocks)
            b.pop()
        blocks.append([k])
        extend(k + 1, blocks)
        blocks.pop()

    extend(1, [])
    return parts


def is_crossing(partition) -> bool:
    """Definitional test: p1 < q1 < p2 < q2, p's together, q's together, apart."""
    block_of = {}
    for i, block in enumerate(partition):
        for x in block:
            block_of[x] = i
    elems = sorted(block_of)
    n = len(elems)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    p1, q1, p2, q2 = elems[a], elems[b], elems[c], elems[d]
                    if (
                        block_of[p1] == block_of[p2]
                        and block_of[q1] == block_of[q2]
                        and block_of[p2] != block_of[q1]
                    ):
                        return True
    return False


def noncrossing_partitions(n: int) -> list[tuple]:
    """NC(n), generated directly (Catalan many; cap n <= 12)."""
    if n < 1 or n > 12:
        raise ValueError("non-crossing enumeration is limited to 1 <= n <= 12")

    def gen(points):
        if not points:
            yield ()
            return
        first = points[0]
        rest = points[1:]
        # The block of `first` is any subset of the rest; anything crossing
        # one of its gaps would cross the block, so the gaps (including the
        # tail after the last block element) are partitioned independently.
        for chosen in _sublists(rest):
            block = (first,) + chosen
            gaps = []
            idx = 0
            cur = []
            for p in rest:
                if idx < len(chosen) and p == chosen[idx]:
                    gaps.append(tuple(cur))
                    cur = []
                    idx += 1
                else:
                    cur.append(p)
            gaps.append(tuple(cur))

            def rec(gs):
                if not gs:
                    yield ()
                    return
                for head in gen(gs[0]):
                    for tail in rec(gs[1:]):
                        yield head + tail

            for sub in rec(gaps):
                yield (block,) + sub

    out = []
    for p in gen(tuple(range(1, n + 1))):
        out.append(tuple(sorted(p)))
    return out


def _sublists(seq):
    if not seq:
        yield ()
        return
    for rest in _sublists(seq[1:]):
        yield rest
        yield (seq[0],) + rest


def enumerate_partitions(n: int, mode: str = "all") -> list[tuple]:
    """Partitions of {1..n}; mode 'all' or 'noncrossing'. Sorted, duplicate-free."""
    if mode == "all":
        return sorted(set(set_partitions(n)))
    if mode == "noncrossing":
        return sorted(set(noncrossing_partitions(n)))
    raise ValueError("unknown mode %r" % mode)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


# -- moment <-> cumulant ----------------------------------------------------------


def moments_from_cumulants(k: CumulantVector) -> Distribution:
    """Moments by the triangular recursion from the non-crossing formula.

    Splitting at the block of 1 gives
    m_n = sum_{s=1..n} k_s sum_{i_1+..+i_s=n-s} m_{i_1} .. m_{i_s}.
    """
    N = k.order
    m = [ONE]  # m_0
    for n in range(1, N + 1):
        # row[j] after s rounds = sum over i_1+..+i_s = j of m_{i_1}..m_{i_s},
        # needing only m_0..m_{n-1}
        total = ZERO
        row = [ONE] + [ZERO] * (n - 1)
        for s in range(1, n + 1):
            new = [ZERO] * n
            for j in range(n):
                if row[j] == 0:
                    continue
                for i in range(0, n - j):
                    if m[i] != 0:
                        new[j + i] += row[j] * m[i]
            row = new
            if k.k[s - 1] != 0:
                total += k.k[s - 1] * row[n - s]
        m.append(total)
    return Distribution(m[1:])


def moments_from_cumulants_nc(k: CumulantVector) -> Distribution:
    """Oracle route: direct sum over NC(n) of block-size cumulant products."""
    N = k.order
    out = []
    for n in range(1, N + 1):
        total = ZERO
        for pi in noncrossing_partitions(n):
            prod = ONE
            for block in pi:
                prod *= k.k[len(block) - 1]
                if prod == 0:
                    break
            total += prod
        out.append(total)
    return Distribution(out)


def cumulants_from_moments(mu: Distribution) -> CumulantVector:
    """Triangular inversion of the same recursion (k_n enters m_n linearly)."""
    N = mu.order
    m = [ONE] + list(mu.moments)
    k = []
    for n in range(1, N + 1):
        row = [ONE] + [ZERO] * (n - 1)
        total = ZERO
        for s in range(1, n):
            new = [ZERO] * n
            for j in range(n):
                if row[j] == 0:
                    continue
                for i in range(0, n - j):
                    if m[i] != 0:
                        new[j + i] += row[j] * m[i]
            row = new
            if k[s - 1] != 0:
                total += k[s - 1] * row[n - s]
        k.append(m[n] - total)
    return CumulantVector(k)


# -- transforms ----------------------------------------------------------------------


def r_transform(mu: Distribution) -> TruncSeries:
    """R(z) = sum k_n z^n via inversion of the Cauchy transform.

    In the chart u = 1/z the Cauchy transform is G^(u) = sum m_n u^{n+1};
    with its compositional inverse u^ the R-transform is
    z * (z - u^(z)) / (z * u^(z)).
    """
    N = mu.order
    ghat = TruncSeries([ZERO, ONE] + list(mu.moments), N + 1)
    uhat = comp_inverse(ghat)
    z = TruncSeries.identity(N + 1)
    num = (z - uhat).shift_down(2)      # valuation >= 2 since u^ = z + O(z^2)
    den = uhat.shift_down(1)            # unit series, constant term 1
    scr = num / den                     # curly-R, order N - 1
    return scr.shift_up(1)


def s_transform(mu: Distribution) -> TruncSeries:
    """S(z) = (1+z)/z * M^{-1}(z), checked against R^{-1}(z)/z.

    Needs a nonzero mean.  Result has order N-1: the first N moments
    determine exactly N coefficients of S.
    """
    if mu.moments[0] == 0:
        raise MeanZero("S-transform needs a nonzero first moment")
    N = mu.order
    mser = TruncSeries((ZERO,) + mu.moments, N)
    minv = comp_inverse(mser)
    s_a = (TruncSeries([ONE, ONE], N - 1)) * minv.shift_down(1) if N > 1 else (
        TruncSeries([ONE], 0) * minv.shift_down(1)
    )
    r = r_transform(mu)
    s_b = comp_inverse(r).shift_down(1)
    if s_a != s_b:
        raise AssertionError("S-transform routes disagree")
    return s_a


def distribution_from_r(r: TruncSeries) -> Distribution:
    """Law whose R-transform is r (coefficients are the cumulants)."""
    if r.coeffs[0] != 0:
        raise ZeroLinearTerm("R-transform lies in z C[[z]]")
    return moments_from_cumulants(CumulantVector(list(r.coeffs[1:])))


def distribution_from_s(s: TruncSeries) -> Distribution:
    """Law of order s.order + 1 whose S-transform is s (s(0) != 0)."""
    if s.coeffs[0] == 0:
        raise MeanZero("S-transform has nonzero constant term")
    N = s.order + 1
    minv = (s.shift_up(1)) / TruncSeries([ONE, ONE], N)
    mser = comp_inverse(minv)
    return Distribution(list(mser.coeffs[1:]))


# -- ring operations -------------------------------------------------------------------


def _same_order(mu, nu):
    if mu.order != nu.order:
        raise LengthMismatch("orders %d and %d differ" % (mu.order, nu.order))


def boxplus(mu: Distribution, nu: Distribution) -> Distribution:
    """Free additive convolution: cumulants add."""
    _same_order(mu, nu)
    a = cumulants_from_moments(mu).k
    b = cumulants_from_moments(nu).k
    return moments_from_cumulants(CumulantVector([x + y for x, y in zip(a, b)]))


def boxminus(mu: Distribution, nu: Distribution) -> Distribution:
    """Inverse of boxplus: cumulants subtract."""
    _same_order(mu, nu)
    a = cumulants_from_moments(mu).k
    b = cumulants_from_moments(nu).k
    return moments_from_cumulants(CumulantVector([x - y for x, y in zip(a, b)]))


def boxtimes(mu: Distribution, nu: Distribution) -> Distribution:
    """Free multiplicative convolution: S-transforms multiply."""
    _same_order(mu, nu)
    if mu.moments[0] == 0 or nu.moments[0] == 0:
        raise MeanZero("boxtimes needs nonzero means")
    return distribution_from_s(s_transform(mu) * s_transform(nu))


def circledast(mu: Distribution, nu: Distribution) -> Distribution:
    """Ring multiplication on mean-1 laws: lambda product of S-transforms."""
    _same_order(mu, nu)
    if mu.moments[0] != 1 or nu.moments[0] != 1:
        raise NotMeanOne("circledast is defined on mean-1 laws")
    sm = LambdaElement(s_transform(mu))
    sn = LambdaElement(s_transform(nu))
    return distribution_from_s((sm * sn).series)


def boxdot(mu: Distribution, nu: Distribution) -> Distribution:
    """Ring multiplication on all laws: cumulants multiply componentwise."""
    _same_order(mu, nu)
    a = cumulants_from_moments(mu).k
    b = cumulants_from_moments(nu).k
    return moments_from_cumulants(CumulantVector([x * y for x, y in zip(a, b)]))


def dist_log(mu: Distribution) -> Distribution:
    """LOG: mean-1 laws to all laws; S, then z d/dz log, then R^{-1}.

    Drops one order: N moments determine S to order N-1.
    """
    if mu.moments[0] != 1:
        raise NotMeanOne("LOG is defined on mean-1 laws")
    if mu.order < 2:
        raise InsufficientLength("LOG of an order-N law has order N-1; need N >= 2")
    s = s_transform(mu)
    ghost = z_dlog(s)
    return distribution_from_r(ghost)


def dist_exp(mu: Distribution) -> Distribution:
    """EXP: inverse of LOG; gains one order."""
    r = TruncSeries((ZERO,) + cumulants_from_moments(mu).k, mu.order)
    s = z_dlog_inv(r)
    return distribution_from_s(s)


def mult_fn_transform(f: TruncSeries) -> TruncSeries:
    """Bridge between multiplicative functions on the two partition lattices.

    Computes the compositional inverse of z^2 / f^{-1}(z); input must have
    zero constant and unit linear coefficient, and the output does too.
    """
    if f.coeffs[0] != 0 or f.order < 1 or f.coeffs[1] != 1:
        raise ZeroLinearTerm("transform needs f = z + ...")
    g = comp_inverse(f)
    h = (TruncSeries.one(f.order) / g.shift_down(1)).shift_up(1)
    return comp_inverse(h)
