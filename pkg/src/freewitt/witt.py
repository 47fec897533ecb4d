"""Witt vectors, unital power series, necklace vectors and ghost vectors.

Four coordinate systems for the same commutative ring, all at a fixed
truncation length L:

* ``WittVector``    components (a_1..a_L)
* ``LambdaElement`` unital series 1 + s_1 z + ... + s_L z^L
* ``NecklaceVector`` components (alpha_1..alpha_L)
* ``GhostVector``   components (x_1..x_L), ring ops componentwise

with the connecting maps

    witt_to_ghost(a)_n     = sum_{d|n} d * a_d^{n/d}
    witt_to_lambda(a)      = prod_n (1 - a_n z^n)^{-1}
    witt_to_necklace(a)_m  = sum_{n|m} M(a_n, m/n)      (necklace polynomials)
    necklace_to_ghost(al)_n = sum_{d|n} d * al_d
    necklace_to_lambda(al) = prod_n (1 - z^n)^{-al_n}
    lambda_to_ghost(f)     = coefficients of z f'/f

Over the rationals every map is invertible, so ring operations in any
chart are transported through the ghost chart where they are
componentwise.  The defining formulas (formal factorisation for the
lambda product, lcm/gcd convolution for the necklace product) are kept as
independent routes for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstantTermNotOne, InsufficientLength, LengthMismatch
from .series import TruncSeries, exp_zero, log_unit, z_dlog, z_dlog_inv

ZERO = Fraction(0)
ONE = Fraction(1)


# -- elementary number theory --------------------------------------------------


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Classical Mobius function by trial division."""
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def necklace_poly(x, n: int):
    """M(x, n) = (1/n) sum_{d|n} mobius(n/d) x^d, for rational or polynomial x."""
    if n < 1:
        raise ValueError("necklace polynomials need n >= 1")
    total = None
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        term = Fraction(mu, n) * x ** d
        total = term if total is None else total + term
    return total


# -- the four carriers ------------------------------------------------------------


def _comps(values) -> tuple:
    out = []
    for v in values:
        if isinstance(v, int):
            v = Fraction(v)
        if not isinstance(v, Fraction):
            raise TypeError("components must be exact rationals")
        out.append(v)
    if not out:
        raise ValueError("length must be at least 1")
    return tuple(out)


def _samelen(a, b):
    if len(a.comps) != len(b.comps):
        raise LengthMismatch("lengths %d and %d differ" % (len(a.comps), len(b.comps)))


@dataclass(frozen=True)
class GhostVector:
    comps: tuple

    def __init__(self, comps):
        object.__setattr__(self, "comps", _comps(comps))

    def __len__(self):
        return len(self.comps)

    def __add__(self, other):
        _samelen(self, other)
        return GhostVector([a + b for a, b in zip(self.comps, other.comps)])

    def __mul__(self, other):
        _samelen(self, other)
        return GhostVector([a * b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return GhostVector([-a for a in self.comps])

    @classmethod
    def zero(cls, L):
        return cls([ZERO] * L)

    @classmethod
    def one(cls, L):
        return cls([ONE] * L)


@dataclass(frozen=True)
class WittVector:
    comps: tuple

    def __init__(self, comps):
        object.__setattr__(self, "comps", _comps(comps))

    def __len__(self):
        return len(self.comps)

    def __add__(self, other):
        _samelen(self, other)
        return ghost_inv(witt_to_ghost(self) + witt_to_ghost(other))

    def __mul__(self, other):
        _samelen(self, other)
        return ghost_inv(witt_to_ghost(self) * witt_to_ghost(other))

    def __neg__(self):
        return ghost_inv(-witt_to_ghost(self))

    @classmethod
    def zero(cls, L):
        return cls([ZERO] * L)

    @classmethod
    def one(cls, L):
        return cls([ONE] + [ZERO] * (L - 1))


@dataclass(frozen=True)
class NecklaceVector:
    comps: tuple

    def __init__(self, comps):
        object.__setattr__(self, "comps", _comps(comps))

    def __len__(self):
        return len(self.comps)

    def __add__(self, other):
        _samelen(self, other)
        return NecklaceVector([a + b for a, b in zip(self.comps, other.comps)])

    def __mul__(self, other):
        """Metropolis-Rota product: (al * be)_n = sum_{lcm(i,j)=n} gcd(i,j) al_i be_j."""
        _samelen(self, other)
        from math import gcd

        L = len(self.comps)
        out = [ZERO] * L
        for i in range(1, L + 1):
            if self.comps[i - 1] == 0:
                continue
            for j in range(1, L + 1):
                if other.comps[j - 1] == 0:
                    continue
                g = gcd(i, j)
                n = i * j // g
                if n <= L:
                    out[n - 1] += g * self.comps[i - 1] * other.comps[j - 1]
        return NecklaceVector(out)

    def __neg__(self):
        return NecklaceVector([-a for a in self.comps])

    @classmethod
    def zero(cls, L):
        return cls([ZERO] * L)

    @classmethod
    def one(cls, L):
        """e_1, the unit of the Metropolis-Rota product."""
        return cls([ONE] + [ZERO] * (L - 1))


@dataclass(frozen=True)
class LambdaElement:
    series: TruncSeries

    def __init__(self, series: TruncSeries):
        if series.coeffs[0] != 1:
            raise ConstantTermNotOne("lambda elements are unital series")
        object.__setattr__(self, "series", series)

    def __len__(self):
        return self.series.order

    def __add__(self, other):
        """Addition in the lambda-ring is multiplication of series."""
        return LambdaElement(self.series * other.series)

    def __mul__(self, other):
        """Product transported through the ghost chart (exact over Q)."""
        return ghost_to_lambda(lambda_to_ghost(self) * lambda_to_ghost(other))

    def __neg__(self):
        return LambdaElement(TruncSeries.one(self.series.order) / self.series)

    @classmethod
    def zero(cls, L):
        return cls(TruncSeries.one(L))

    @classmethod
    def one(cls, L):
        """(1 - z)^{-1}, whose ghost vector is (1, 1, 1, ...)."""
        return cls(TruncSeries.geometric(1, L))


# -- connecting maps -------------------------------------------------------------


def witt_to_ghost(a: WittVector) -> GhostVector:
    L = len(a.comps)
    return GhostVector(
        [
            sum((d * a.comps[d - 1] ** (n // d) for d in divisors(n)), ZERO)
            for n in range(1, L + 1)
        ]
    )


def ghost_inv(x: GhostVector) -> WittVector:
    """Triangular solve of the ghost formula for the Witt components."""
    L = len(x.comps)
    a = []
    for n in range(1, L + 1):
        s = x.comps[n - 1]
        for d in divisors(n):
            if d < n:
                s -= d * a[d - 1] ** (n // d)
        a.append(s / n)
    return WittVector(a)


def witt_to_lambda(a: WittVector) -> LambdaElement:
    """prod_n (1 - a_n z^n)^{-1}, expanded to order L."""
    L = len(a.comps)
    denom = TruncSeries.one(L)
    for n in range(1, L + 1):
        if a.comps[n - 1] != 0:
            denom = denom * (TruncSeries.monomial(-a.comps[n - 1], n, L) + 1)
    return LambdaElement(TruncSeries.one(L) / denom)


def lambda_to_witt(f: LambdaElement) -> WittVector:
    """Peel factors: the z^n coefficient of the remaining product is a_n."""
    L = f.series.order
    rest = f.series
    a = []
    for n in range(1, L + 1):
        an = rest.coeffs[n]
        a.append(an)
        if an != 0:
            rest = rest * (TruncSeries.monomial(-an, n, L) + 1)
    return WittVector(a)


def lambda_to_ghost(f: LambdaElement) -> GhostVector:
    x = z_dlog(f.series)
    return GhostVector(list(x.coeffs[1:]))


def ghost_to_lambda(x: GhostVector) -> LambdaElement:
    """exp(sum x_n z^n / n), the inverse of z d/dz log."""
    L = len(x.comps)
    return LambdaElement(z_dlog_inv(TruncSeries((ZERO,) + x.comps, L)))


def necklace_to_ghost(alpha: NecklaceVector) -> GhostVector:
    L = len(alpha.comps)
    return GhostVector(
        [
            sum((d * alpha.comps[d - 1] for d in divisors(n)), ZERO)
            for n in range(1, L + 1)
        ]
    )


def ghost_to_necklace(x: GhostVector) -> NecklaceVector:
    """Mobius inversion: alpha_n = (1/n) sum_{d|n} mobius(n/d) x_d."""
    L = len(x.comps)
    return NecklaceVector(
        [
            sum(
                (Fraction(mobius(n // d), n) * x.comps[d - 1] for d in divisors(n)),
                ZERO,
            )
            for n in range(1, L + 1)
        ]
    )


def witt_to_necklace(a: WittVector) -> NecklaceVector:
    """Necklace coordinates: component m is sum_{n|m} M(a_n, m/n)."""
    L = len(a.comps)
    out = [ZERO] * L
    for m in range(1, L + 1):
        for n in divisors(m):
            if a.comps[n - 1] != 0:
                out[m - 1] += necklace_poly(a.comps[n - 1], m // n)
    return NecklaceVector(out)


def necklace_to_lambda(alpha: NecklaceVector) -> LambdaElement:
    """prod_n (1 - z^n)^{-alpha_n} via exp/log (rational exponents allowed)."""
    L = len(alpha.comps)
    acc = TruncSeries.zero(L)
    for n in range(1, L + 1):
        const = alpha.comps[n - 1]
        if const == 0:
            continue
        log_factor = log_unit(TruncSeries.monomial(-1, n, L) + 1)
        acc = acc + log_factor * (-const)
    return LambdaElement(exp_zero(acc))


# -- ring operations as named entry points (CLI surface) -----------------------------


def witt_ring_op(a: WittVector, b: WittVector, kind: str) -> WittVector:
    return a + b if kind == "add" else a * b


def lambda_ring_op(f: LambdaElement, g: LambdaElement, kind: str) -> LambdaElement:
    return f + g if kind == "add" else f * g


def necklace_ring_op(a: NecklaceVector, b: NecklaceVector, kind: str) -> NecklaceVector:
    return a + b if kind == "add" else a * b


def ghost_ring_op(a: GhostVector, b: GhostVector, kind: str) -> GhostVector:
    return a + b if kind == "add" else a * b


# -- Verschiebung and Frobenius on necklace vectors -----------------------------------


def verschiebung(r: int, alpha: NecklaceVector) -> NecklaceVector:
    """Index dilation: beta_n = alpha_{n/r} if r | n else 0."""
    if r < 1:
        raise ValueError("r >= 1 required")
    L = len(alpha.comps)
    return NecklaceVector(
        [alpha.comps[n // r - 1] if n % r == 0 else ZERO for n in range(1, L + 1)]
    )


def frobenius(r: int, alpha: NecklaceVector, out_len: int | None = None) -> NecklaceVector:
    """Index compression: beta_n = sum_{lcm(r,d)=n r} (d/n) alpha_d.

    Producing out_len components consumes r*out_len input components, so
    the input must be at least that long; no zero padding happens.
    """
    if r < 1:
        raise ValueError("r >= 1 required")
    from math import gcd

    L = len(alpha.comps)
    if out_len is None:
        out_len = L // r
    if out_len < 1 or L < r * out_len:
        raise InsufficientLength(
            "need %d input components for %d outputs, got %d" % (r * out_len, out_len, L)
        )
    out = [ZERO] * out_len
    for n in range(1, out_len + 1):
        for d in range(1, r * n + 1):
            if d * r // gcd(r, d) == n * r:
                out[n - 1] += Fraction(d, n) * alpha.comps[d - 1]
    return NecklaceVector(out)


# -- diagram check --------------------------------------------------------------------


def check_diagram(a: WittVector) -> dict:
    """All commutation identities of the connecting maps, on one Witt vector."""
    ghost = witt_to_ghost(a)
    lam = witt_to_lambda(a)
    neck = witt_to_necklace(a)
    L = len(a.comps)
    checks = [
        ("zdlog_gamma_vs_ghost", lambda_to_ghost(lam) == ghost),
        ("gtilde_ftilde_vs_ghost", necklace_to_ghost(neck) == ghost),
        ("c_ftilde_vs_gamma", necklace_to_lambda(neck) == lam),
        (
            "c_gtilde_inv_is_exp_sum",
            necklace_to_lambda(ghost_to_necklace(ghost)).series
            == z_dlog_inv(TruncSeries((ZERO,) + ghost.comps, L)),
        ),
        ("ghost_roundtrip", ghost_inv(ghost) == a),
        ("gamma_roundtrip", lambda_to_witt(lam) == a),
    ]
    return {
        "passed": all(ok for _, ok in checks),
        "checks": [{"name": n, "passed": ok} for n, ok in checks],
    }
