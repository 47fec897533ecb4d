"""Faber polynomials, Grunsky coefficients and the power-operation identity.

The data is a coefficient vector b = (b_1..b_L) for the unital series
h(z) = 1 + b_1 z + ... + b_L z^L; the associated g(z) = z h(1/z) is a
polynomial deformation of z at infinity.  Faber polynomials are computed
by three independent routes:

* the recursion F_{n+1}(w) = (w - b_1) F_n - sum b_{n-k+1} F_k - (n+1) b_{n+1},
  seeded with F_0 = 1 and F_1 = w - b_1;
* coefficient extraction from z d/dz log g (equivalently from the log of
  h itself, with both extractions compared);
* a Hessenberg determinant of the companion-type matrix.

Coefficients may be rationals or ``MultiPoly`` values, so the identities
can be checked as polynomial identities in symbolic b's.  All expansions
at infinity are done in the chart u = 1/z on plain TruncSeries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multipoly import MultiPoly
from .series import TruncSeries, log_unit, z_dlog

ZERO = Fraction(0)
ONE = Fraction(1)


def _h_series(b, order: int) -> TruncSeries:
    """h = 1 + b_1 z + ... as an exact polynomial, padded to the order."""
    coeffs = [ONE] + list(b)
    return TruncSeries(coeffs[: order + 1], order)


# -- dense polynomials in w over rationals or MultiPoly -----------------------------


@dataclass(frozen=True)
class FaberPoly:
    """Monic polynomial in w; coeffs ascending, coeffs[-1] = 1."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_zero(self):
        return self.coeffs[0]

    def __call__(self, w):
        total = None
        for c in reversed(self.coeffs):
            total = c if total is None else total * w + c
        return total

    def __repr__(self):
        return "FaberPoly(%s)" % (list(self.coeffs),)


def _wp_add(p, q):
    n = max(len(p), len(q))
    pad = lambda r: list(r) + [ZERO] * (n - len(r))
    return [a + b for a, b in zip(pad(p), pad(q))]


def _wp_scale(p, c):
    return [a * c for a in p]


def _wp_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b == 0:
                continue
            out[i + j] = out[i + j] + a * b
    return out


# -- route 1: recursion -----------------------------------------------------------


def faber_recursion(b, n_max: int) -> list[FaberPoly]:
    """F_0 .. F_{n_max} by the recursion (applied for n >= 1).

    Applying the recursion at n = 0 would yield w - 2 b_1; the series
    definition forces F_1 = w - b_1, so both seeds are explicit.
    """
    b = list(b)
    if n_max > len(b):
        raise ValueError("need %d coefficients, got %d" % (n_max, len(b)))
    polys = [[ONE]]
    if n_max >= 1:
        polys.append([-b[0], ONE])
    for n in range(1, n_max):
        cur = _wp_mul([-b[0], ONE], polys[n])
        for k in range(1, n):
            cur = _wp_add(cur, _wp_scale(polys[k], -b[n - k]))
        cur = _wp_add(cur, [-(n + 1) * b[n]])
        polys.append(cur)
    return [FaberPoly(tuple(p)) for p in polys]


# -- route 2: generating function ---------------------------------------------------


def faber_from_generating(b, n_max: int) -> list:
    """F_n(0) for n = 0..n_max from the logarithmic derivative of h.

    Two equivalent extractions are computed and must agree exactly:
    F_n = -[z^n] (z h'/h) and F_n = -n [z^n] log h.
    """
    b = list(b)
    if n_max > len(b):
        raise ValueError("need %d coefficients, got %d" % (n_max, len(b)))
    h = _h_series(b, n_max)
    x = z_dlog(h)
    l = log_unit(h)
    route_a = [ONE] + [-x.coeffs[n] for n in range(1, n_max + 1)]
    route_b = [ONE] + [-n * l.coeffs[n] for n in range(1, n_max + 1)]
    if route_a != route_b:
        raise AssertionError("generating-function routes disagree")
    return route_a


# -- route 3: determinant ------------------------------------------------------------


def _companion_entry(b, i: int, j: int):
    """Entry (i, j), 1-indexed, of the companion-type matrix A_n."""
    if j == 1:
        return i * b[i - 1]
    if j == i + 1:
        return ONE
    if j <= i:
        return b[i - j]  # b_{i-j+1}
    return ZERO


def _det_hessenberg(entry, n: int, superdiag):
    """Determinant of a lower-Hessenberg matrix via leading principal minors.

    D_k = sum_j (-1)^{k-j} M[k][j] (prod_{i=j..k-1} s_i) D_{j-1}, where s_i
    is the superdiagonal entry M[i][i+1].
    """
    D = [ONE]
    for k in range(1, n + 1):
        total = None
        sprod = ONE
        for j in range(k, 0, -1):
            term = entry(k, j)
            if j < k:
                sprod = sprod * (-superdiag)
            piece = term * sprod * D[j - 1] if term != 0 else None
            if piece is not None:
                total = piece if total is None else total + piece
        D.append(total if total is not None else ZERO)
    return D[n]


def faber_det(b, n: int, w_value=None):
    """F_n(w) = det(w 1 - A_n); returns a FaberPoly, or a value if w is given.

    The matrix is lower Hessenberg, so the determinant expands in O(n^2)
    ring operations, exact over rationals and polynomials alike.
    """
    b = list(b)
    if n > len(b):
        raise ValueError("need %d coefficients, got %d" % (n, len(b)))
    if n == 0:
        return FaberPoly((ONE,)) if w_value is None else ONE

    if w_value is not None:
        entry = lambda i, j: (
            (w_value - _companion_entry(b, i, j)) if i == j else -_companion_entry(b, i, j)
        )
        return _det_hessenberg(entry, n, -ONE)

    # Same recurrence over dense polynomials in w.  The superdiagonal of
    # w 1 - A_n is -1, so the (-1)^{k-j} sign and the superdiagonal product
    # cancel and D_k = sum_j B[k][j] D_{j-1}.
    def entry(i, j):
        a = _companion_entry(b, i, j)
        return [-a, ONE] if i == j else [-a]

    D = [[ONE]]
    for k in range(1, n + 1):
        total = [ZERO]
        for j in range(k, 0, -1):
            total = _wp_add(total, _wp_mul(entry(k, j), D[j - 1]))
        D.append(total)
    return FaberPoly(tuple(D[n]))


# -- Grunsky coefficients ---------------------------------------------------------------


@dataclass(frozen=True)
class GrunskyTable:
    """beta[m-1][n-1] = beta_{mn}, 1 <= m, n <= size."""

    beta: tuple

    @property
    def size(self) -> int:
        return len(self.beta)

    def is_symmetric(self) -> bool:
        M = self.size
        return all(
            self.beta[m][n] == self.beta[n][m] for m in range(M) for n in range(M)
        )


def grunsky_coeffs(b, M: int) -> GrunskyTable:
    """Grunsky table from F_n(g(z)) = z^n + n sum_m beta_{mn} z^{-m}.

    In the chart u = 1/z the defining expansion becomes
    u^n F_n(g) = 1 + n sum_m beta_{mn} u^{n+m}, a plain power series in u
    since g^k = h(u)^k u^{-k}.  Before returning, the bivariate log
    expansion of (g(z)-g(w))/(z-w) is recomputed independently and checked
    against the table for all m + n <= M.
    """
    b = list(b)
    if M > len(b):
        raise ValueError("need %d coefficients, got %d" % (M, len(b)))
    order = 2 * M
    h = _h_series(b, order)
    hpow = [TruncSeries.one(order)]
    for _ in range(M):
        hpow.append(hpow[-1] * h)
    polys = faber_recursion(b, M)
    beta = [[None] * M for _ in range(M)]
    for n in range(1, M + 1):
        # u^n F_n(g) = sum_k c_k h^k u^{n-k}
        series = TruncSeries.zero(order)
        for k, c in enumerate(polys[n].coeffs):
            if c == 0:
                continue
            series = series + hpow[k].truncate(order - (n - k)).shift_up(n - k) * c
        for m in range(1, M + 1):
            beta[m - 1][n - 1] = series.coeffs[n + m] * Fraction(1, n)

    _verify_grunsky_bivariate(b, M, beta)
    return GrunskyTable(tuple(tuple(row) for row in beta))


def _biv_mul(a: dict, b: dict, cap: int) -> dict:
    """Product of bivariate expansions {(m, n): coeff}, degree-capped."""
    out = {}
    for (i, j), ca in a.items():
        for (k, l), cb in b.items():
            if i + k + j + l > cap:
                continue
            key = (i + k, j + l)
            s = out.get(key)
            s = ca * cb if s is None else s + ca * cb
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _verify_grunsky_bivariate(b, M: int, beta) -> None:
    """Check beta_{mn} = -[u^m v^n] log((g(z)-g(w))/(z-w)) for m+n <= M.

    With u = 1/z, v = 1/w the ratio becomes the polynomial
    1 - sum_{k>=2} b_k sum_{i+j=k-2} u^{i+1} v^{j+1}, whose log is expanded
    bivariately, truncated at total (u, v)-degree M.  Coefficients may be
    rationals or polynomials.
    """
    q = {}
    for k in range(2, len(b) + 1):
        if b[k - 1] == 0:
            continue
        for i in range(k - 1):
            j = k - 2 - i
            exp = (i + 1, j + 1)
            cur = q.get(exp)
            q[exp] = -b[k - 1] if cur is None else cur - b[k - 1]
    logp = {}
    qk = {(0, 0): ONE}
    for k in range(1, M // 2 + 1):
        qk = _biv_mul(qk, q, M)
        if not qk:
            break
        c = Fraction((-1) ** (k + 1), k)
        for exp, v in qk.items():
            cur = logp.get(exp)
            logp[exp] = c * v if cur is None else cur + c * v
    for m in range(1, M + 1):
        for n in range(1, M + 1):
            if m + n > M:
                continue
            expected = -logp.get((m, n), ZERO)
            if beta[m - 1][n - 1] != expected:
                raise AssertionError(
                    "Grunsky routes disagree at (%d, %d)" % (m, n)
                )


# -- power operations ----------------------------------------------------------------------


def _lam_name(j: int) -> str:
    return "lam%02d" % j


def lam_var(j: int) -> MultiPoly:
    """The j-th exterior-power variable, graded with weight j."""
    return MultiPoly.var(_lam_name(j), weight=j)


def adams_poly(n: int) -> MultiPoly:
    """n-th power-sum operation as a determinant in the lam variables.

    Same Hessenberg determinant as the Newton identity linking power sums
    with elementary symmetric functions.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    lam = [lam_var(j) for j in range(1, n + 1)]

    def entry(i, j):
        if j == 1:
            return i * lam[i - 1]
        if j == i + 1:
            return MultiPoly.const(1)
        if j <= i:
            return lam[i - j]
        return MultiPoly.const(0)

    return _det_hessenberg(entry, n, MultiPoly.const(1))


def check_adams_lemma(n_max: int) -> bool:
    """Power operation equals (-1)^n times the Faber value at w = 0.

    Left side by determinant, right side by the independent recursion
    route with b_j replaced by the lam_j variable.
    """
    lam = [lam_var(j) for j in range(1, n_max + 1)]
    rec = faber_recursion(lam, n_max)
    for n in range(1, n_max + 1):
        lhs = adams_poly(n)
        rhs = Fraction((-1) ** n) * rec[n].at_zero()
        if lhs != rhs:
            return False
    return True
