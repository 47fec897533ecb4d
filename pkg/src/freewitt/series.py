"""Truncated formal power series with exact rational coefficients.

A ``TruncSeries`` stores the coefficients of z^0 .. z^N exactly (``order``
= N) and never reads beyond them: every binary operation returns the
minimum order of its inputs, so a result coefficient is only ever produced
when it is exactly determined.  Coefficients are ``fractions.Fraction``
throughout; the same routines also run unchanged over polynomial
coefficients (see ``multipoly``), which only need ``+``, ``*`` and
division by integers.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    ConstantTermNotOne,
    ConstantTermNotZero,
    DivisionByNonUnit,
    InnerConstantTermNonzero,
    ZeroLinearTerm,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce(c):
    """Coerce a coefficient: ints become Fractions, floats are rejected."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed")
    return c  # ring elements such as MultiPoly pass through


def _inv(c):
    """Multiplicative inverse of a coefficient, or DivisionByNonUnit."""
    if isinstance(c, Fraction):
        if c == 0:
            raise DivisionByNonUnit("division by zero constant term")
        return ONE / c
    inv = getattr(c, "inverse", None)
    if inv is None:
        raise DivisionByNonUnit("coefficient %r is not invertible" % (c,))
    return inv()


class TruncSeries:
    """Power series known exactly up to and including z^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs=(), order=None):
        coeffs = [_coerce(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        # Padding here is an explicit claim by the caller that the series
        # is polynomial; arithmetic itself never pads.
        if len(coeffs) < order + 1:
            coeffs.extend([ZERO] * (order + 1 - len(coeffs)))
        object.__setattr__(self, "coeffs", tuple(coeffs[: order + 1]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("TruncSeries is immutable")

    # -- basic interrogation ------------------------------------------------

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self):
        """Index of first nonzero stored coefficient, or None if all zero."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    def truncate(self, n: int) -> "TruncSeries":
        if n > self.order:
            raise ValueError("cannot truncate order %d up to %d" % (self.order, n))
        return TruncSeries(self.coeffs[: n + 1], n)

    def __repr__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c)
            if n == 0:
                parts.append(cs)
            elif n == 1:
                parts.append("%s*z" % cs)
            else:
                parts.append("%s*z^%d" % (cs, n))
        body = " + ".join(parts) if parts else "0"
        return "TruncSeries(%s + O(z^%d))" % (body, self.order + 1)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([ZERO], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([ONE], order)

    @classmethod
    def identity(cls, order: int) -> "TruncSeries":
        """The series z."""
        return cls([ZERO, ONE], order)

    @classmethod
    def monomial(cls, c, n: int, order: int) -> "TruncSeries":
        coeffs = [ZERO] * (order + 1)
        if n <= order:
            coeffs[n] = _coerce(c)
        return cls(coeffs, order)

    @classmethod
    def geometric(cls, a, order: int) -> "TruncSeries":
        """1/(1 - a z) = sum a^n z^n."""
        a = _coerce(a)
        return cls([a ** n for n in range(order + 1)], order)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            c = _coerce(other)
            coeffs = list(self.coeffs)
            coeffs[0] = coeffs[0] + c
            return TruncSeries(coeffs, self.order)
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncSeries) else -_coerce(other))

    def __rsub__(self, other):
        return (-self) + _coerce(other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = _coerce(other)
            return TruncSeries([a * c for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            s = ZERO
            for i in range(k + 1):
                a = self.coeffs[i]
                b = other.coeffs[k - i]
                if a != 0 and b != 0:
                    s = s + a * b
            out.append(s)
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            return self * _inv(_coerce(other))
        n = min(self.order, other.order)
        if other.coeffs[0] == 0:
            raise DivisionByNonUnit("divisor has zero constant term")
        inv0 = _inv(other.coeffs[0])
        out = []
        for k in range(n + 1):
            s = self.coeffs[k]
            for i in range(1, k + 1):
                b = other.coeffs[i]
                if b != 0:
                    s = s - b * out[k - i]
            out.append(s * inv0)
        return TruncSeries(out, n)

    def __rtruediv__(self, other):
        return TruncSeries([_coerce(other)], self.order) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- exact reindexing -------------------------------------------------------

    def shift_up(self, k: int) -> "TruncSeries":
        """Multiply by z^k (exact: coefficients of z^k..z^{order+k} known)."""
        return TruncSeries((ZERO,) * k + self.coeffs, self.order + k)

    def shift_down(self, k: int) -> "TruncSeries":
        """Divide by z^k; requires the first k coefficients to vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise DivisionByNonUnit("series is not divisible by z^%d" % k)
        return TruncSeries(self.coeffs[k:], self.order - k)

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries([ZERO], 0)
        return TruncSeries(
            [(n + 1) * self.coeffs[n + 1] for n in range(self.order)],
            self.order - 1,
        )


# -- composition and inversion ---------------------------------------------------


def compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(z)) to order min(order f, order g); needs g(0) = 0."""
    if g.coeffs[0] != 0:
        raise InnerConstantTermNonzero("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n) if g.order > n else g
    result = TruncSeries([f.coeffs[min(n, f.order)]], n)
    for k in range(min(n, f.order) - 1, -1, -1):
        result = result * g + f.coeffs[k]
    return result


def comp_inverse(f: TruncSeries) -> TruncSeries:
    """Compositional inverse g with f(g(z)) = g(f(z)) = z.

    Triangular solve: once g is known below degree n, the z^n coefficient
    of f(g) is f_1 * g_n plus terms depending only on lower g's, so each
    g_n is determined by one division by f_1.
    """
    if f.coeffs[0] != 0:
        raise ZeroLinearTerm("series must have zero constant term")
    if f.order < 1 or f.coeffs[1] == 0:
        raise ZeroLinearTerm("series must have invertible linear term")
    n = f.order
    inv1 = _inv(f.coeffs[1])
    g = [ZERO, inv1] + [ZERO] * (n - 1)
    for m in range(2, n + 1):
        val = compose(f, TruncSeries(g, n)).coeffs[m]
        g[m] = -val * inv1
    return TruncSeries(g, n)


def log_unit(f: TruncSeries) -> TruncSeries:
    """log f for f with constant term 1, via n*f_n = sum k*l_k*f_{n-k}."""
    if f.coeffs[0] != 1:
        raise ConstantTermNotOne("log needs constant term 1")
    n = f.order
    l = [ZERO] * (n + 1)
    for m in range(1, n + 1):
        s = f.coeffs[m]
        for k in range(1, m):
            if l[k] != 0 and f.coeffs[m - k] != 0:
                s = s - Fraction(k, m) * l[k] * f.coeffs[m - k]
        l[m] = s
    return TruncSeries(l, n)


def exp_zero(g: TruncSeries) -> TruncSeries:
    """exp g for g with zero constant term, via n*e_n = sum k*g_k*e_{n-k}."""
    if g.coeffs[0] != 0:
        raise ConstantTermNotZero("exp needs zero constant term")
    n = g.order
    e = [ONE] + [ZERO] * n
    for m in range(1, n + 1):
        s = ZERO
        for k in range(1, m + 1):
            if g.coeffs[k] != 0 and e[m - k] != 0:
                s = s + Fraction(k, m) * g.coeffs[k] * e[m - k]
        e[m] = s
    return TruncSeries(e, n)


def z_dlog(f: TruncSeries) -> TruncSeries:
    """z * f'/f for unital f; coefficient recurrence keeps the full order."""
    if f.coeffs[0] != 1:
        raise ConstantTermNotOne("z_dlog needs constant term 1")
    n = f.order
    x = [ZERO] * (n + 1)
    # z f' = x * f  =>  n f_n = sum_{k=1..n} x_k f_{n-k}
    for m in range(1, n + 1):
        s = m * f.coeffs[m]
        for k in range(1, m):
            if x[k] != 0 and f.coeffs[m - k] != 0:
                s = s - x[k] * f.coeffs[m - k]
        x[m] = s
    return TruncSeries(x, n)


def z_dlog_inv(x: TruncSeries) -> TruncSeries:
    """Inverse of z_dlog: exp(sum x_n z^n / n)."""
    if x.coeffs[0] != 0:
        raise ConstantTermNotZero("z_dlog_inv needs zero constant term")
    g = TruncSeries(
        [ZERO] + [x.coeffs[m] * Fraction(1, m) for m in range(1, x.order + 1)],
        x.order,
    )
    return exp_zero(g)


def series_arith(a: TruncSeries, b: TruncSeries, kind: str) -> TruncSeries:
    """Dispatch add/sub/mul/div, mainly for the CLI."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError("unknown kind %r" % kind)
