"""Seeded self-test suite; the acceptance gate and the CLI `selftest` verb.

Every check is deterministic for a fixed seed and returns (passed,
detail); all comparisons are exact rational equality, there are no
tolerances anywhere.  The same checks back tests/test_acceptance.py, so
CI and the command line exercise identical code.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .faber import (
    adams_poly,
    check_adams_lemma,
    faber_det,
    faber_from_generating,
    faber_recursion,
    grunsky_coeffs,
    lam_var,
)
from .fock import canonical_T, freeness_witness, genus_operator, vacuum_moments
from .formal_group import (
    Derivation,
    derivation_bracket,
    exp_derivation,
    fgl_check_axioms,
    fgl_from_log,
)
from .freeprob import (
    CumulantVector,
    Distribution,
    boxdot,
    boxplus,
    boxtimes,
    catalan,
    circledast,
    cumulants_from_moments,
    dist_exp,
    dist_log,
    distribution_from_s,
    enumerate_partitions,
    is_crossing,
    moments_from_cumulants,
    moments_from_cumulants_nc,
    r_transform,
    s_transform,
)
from .genus import (
    genus_from_log,
    log_from_genus,
    log_from_q,
    msequence_from_q,
    msequence_multiplicativity_check,
    named_genus,
    q_from_genus,
)
from .multipoly import MultiPoly
from .series import TruncSeries, compose, exp_zero, log_unit, z_dlog_inv
from .witt import (
    GhostVector,
    LambdaElement,
    NecklaceVector,
    WittVector,
    check_diagram,
    ghost_to_necklace,
    lambda_to_ghost,
    necklace_to_ghost,
    necklace_to_lambda,
    witt_to_ghost,
    witt_to_lambda,
    witt_to_necklace,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def _rng(seed, name: str) -> random.Random:
    return random.Random("%s:%s" % (seed, name))


def _frac(rng, num=6, den=4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _fail(msg: str):
    return False, msg


# -- criterion 1 ------------------------------------------------------------------


def check_diagram_commutativity(seed, order: int = 8):
    """All path equalities of the coordinate-change square, 100 random vectors."""
    rng = _rng(seed, "diagram")
    L = order
    for trial in range(100):
        a = WittVector([_frac(rng) for _ in range(L)])
        ghost = witt_to_ghost(a)
        lam = witt_to_lambda(a)
        neck = witt_to_necklace(a)
        if lambda_to_ghost(lam) != ghost:
            return _fail("z d/dz log after gamma mismatched ghost at trial %d" % trial)
        if necklace_to_ghost(neck) != ghost:
            return _fail("divisor sum after necklace map mismatched ghost at trial %d" % trial)
        if necklace_to_lambda(neck) != lam:
            return _fail("necklace-to-series route mismatched gamma at trial %d" % trial)
        x = GhostVector([_frac(rng) for _ in range(L)])
        lhs = necklace_to_lambda(ghost_to_necklace(x)).series
        rhs = z_dlog_inv(TruncSeries((ZERO,) + x.comps, L))
        if lhs != rhs:
            return _fail("exp(sum x_n z^n / n) identity failed at trial %d" % trial)
    return True, "100 random vectors, length %d, all paths equal" % L


# -- criterion 2 --------------------------------------------------------------------


def check_ring_isomorphisms(seed, order: int = 8):
    """Transported add/mul agree in all four charts; units correspond."""
    rng = _rng(seed, "rings")
    L = order
    for trial in range(50):
        a = WittVector([_frac(rng) for _ in range(L)])
        b = WittVector([_frac(rng) for _ in range(L)])
        for kind in ("add", "mul"):
            if kind == "add":
                rw = a + b
                rl = witt_to_lambda(a) + witt_to_lambda(b)
                rn = witt_to_necklace(a) + witt_to_necklace(b)
                rg = witt_to_ghost(a) + witt_to_ghost(b)
            else:
                rw = a * b
                rl = witt_to_lambda(a) * witt_to_lambda(b)
                rn = witt_to_necklace(a) * witt_to_necklace(b)
                rg = witt_to_ghost(a) * witt_to_ghost(b)
            if witt_to_lambda(rw) != rl:
                return _fail("%s disagreed in the series chart, trial %d" % (kind, trial))
            if witt_to_necklace(rw) != rn:
                return _fail("%s disagreed in the necklace chart, trial %d" % (kind, trial))
            if witt_to_ghost(rw) != rg:
                return _fail("%s disagreed in the ghost chart, trial %d" % (kind, trial))
    unit = WittVector.one(8)
    if witt_to_lambda(unit) != LambdaElement.one(8):
        return _fail("unit does not map to the geometric series")
    if witt_to_necklace(unit) != NecklaceVector.one(8):
        return _fail("unit does not map to e_1")
    if witt_to_ghost(unit) != GhostVector.one(8):
        return _fail("unit does not map to (1,1,...)")
    return True, "50 random pairs, add and mul agree in all four charts; units map to units"


# -- criterion 3 ----------------------------------------------------------------------


def check_faber_routes(seed, order: int = 8):
    """Recursion, generating function and determinant coincide; Grunsky; Adams."""
    rng = _rng(seed, "faber")
    b = [_frac(rng) for _ in range(10)]
    rec = faber_recursion(b, 10)
    gen = faber_from_generating(b, 10)
    det = [faber_det(b, n) for n in range(11)]
    if [p.at_zero() for p in rec] != gen:
        return _fail("recursion and generating function disagree numerically")
    if [p.coeffs for p in rec] != [p.coeffs for p in det]:
        return _fail("recursion and determinant disagree numerically")
    bs = [MultiPoly.var("b%02d" % j, weight=j) for j in range(1, 7)]
    rec_s = faber_recursion(bs, 6)
    gen_s = faber_from_generating(bs, 6)
    det_s = [faber_det(bs, n) for n in range(7)]
    if [p.at_zero() for p in rec_s] != gen_s:
        return _fail("symbolic recursion and generating function disagree")
    for n in range(7):
        if list(rec_s[n].coeffs) != list(det_s[n].coeffs):
            return _fail("symbolic determinant route differs at n=%d" % n)
    table = grunsky_coeffs([_frac(rng) for _ in range(8)], 8)  # reconstruction checked inside
    if not table.is_symmetric():
        return _fail("Grunsky table is not symmetric")
    if not check_adams_lemma(6):
        return _fail("power-operation identity failed")
    if adams_poly(2) != lam_var(1) ** 2 - 2 * lam_var(2):
        return _fail("second power operation has the wrong value")
    return True, "three routes agree (n<=10 numeric, n<=6 symbolic); Grunsky symmetric and reconstructed; power-operation identity holds to n=6"


# -- criterion 4 ------------------------------------------------------------------------


def check_formal_groups(seed, order: int = 8):
    """Random strict logarithms give genuine group laws; bracket and flow."""
    rng = _rng(seed, "fgl")
    for trial in range(20):
        logf = TruncSeries(
            [ZERO, ONE] + [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(9)],
            10,
        )
        fgl = fgl_from_log(logf, 10)
        rep = fgl_check_axioms(fgl)
        if not rep["passed"]:
            return _fail("axioms failed at trial %d: %r" % (trial, rep))
    z = TruncSeries.identity(10)
    fm = fgl_from_log(log_unit(1 + z), 10)
    expected = MultiPoly(("x", "y"), {(1, 0): ONE, (0, 1): ONE, (1, 1): ONE})
    if fm.F != expected:
        return _fail("log(1+z) did not give x + y + xy")
    for m in range(6):
        for n in range(6):
            lhs = derivation_bracket(Derivation.ell(m), Derivation.ell(n))
            rhs_c = (m - n) * Derivation.ell(m + n).coeff_series
            probe = TruncSeries([_frac(rng) for _ in range(11)], 10)
            if lhs.apply(probe) != Derivation(rhs_c).apply(probe):
                return _fail("bracket relation failed at (%d, %d)" % (m, n))
    flow = exp_derivation(Derivation.ell(1), 10)
    target = TruncSeries.identity(10) / TruncSeries([ONE, ONE], 10)
    if flow != target:
        return _fail("time-1 flow of -z^2 d/dz is not z/(1+z)")
    return True, "20 random degree-10 laws pass axioms; multiplicative law, bracket table (m,n<=5) and the z/(1+z) flow all exact"


# -- criterion 5 ----------------------------------------------------------------------------


def check_freeprob_core(seed, order: int = 8):
    """Moment/cumulant machinery against the enumeration oracle and closed forms."""
    rng = _rng(seed, "freeprob")
    N = order
    for n in range(1, N + 1):
        ncp = enumerate_partitions(n, "noncrossing")
        if len(ncp) != catalan(n):
            return _fail("NC(%d) has %d elements, expected Catalan" % (n, len(ncp)))
        if n <= 6:
            allp = enumerate_partitions(n, "all")
            filtered = sorted(p for p in allp if not is_crossing(p))
            if filtered != ncp:
                return _fail("direct and filtered NC(%d) enumerations differ" % n)
    allp4 = enumerate_partitions(4, "all")
    crossing = [p for p in allp4 if is_crossing(p)]
    if len(allp4) != 15 or crossing != [((1, 3), (2, 4))]:
        return _fail("P(4) structure is wrong")
    for trial in range(10):
        k = CumulantVector([_frac(rng) for _ in range(N)])
        mu = moments_from_cumulants(k)
        if cumulants_from_moments(mu).k != k.k:
            return _fail("moment/cumulant roundtrip failed at trial %d" % trial)
        if trial < 4 and moments_from_cumulants_nc(k) != mu:
            return _fail("recursion disagrees with NC enumeration at trial %d" % trial)
        if list(r_transform(mu).coeffs[1:]) != list(k.k):
            return _fail("R-transform coefficients are not the cumulants")
        if mu.moments[0] != 0:
            s_transform(mu)  # dual-route agreement asserted inside
    sc = Distribution.semicircle(N)
    if sc.moments != (ZERO, ONE, ZERO, Fraction(2), ZERO, Fraction(5), ZERO, Fraction(14)):
        return _fail("semicircle moments are off")
    if r_transform(sc) != TruncSeries.monomial(1, 2, N):
        return _fail("semicircle R-transform is not z^2")
    fp = Distribution.free_poisson(N)
    if list(fp.moments) != [Fraction(catalan(n)) for n in range(1, N + 1)]:
        return _fail("free Poisson moments are not the Catalan numbers")
    if s_transform(fp) != TruncSeries([ONE, ONE], N - 1) ** 0 / TruncSeries([ONE, ONE], N - 1):
        return _fail("free Poisson S-transform is not 1/(1+z)")
    c = Fraction(3, 2)
    dc = Distribution.dirac(c, N)
    if r_transform(dc) != TruncSeries.monomial(c, 1, N):
        return _fail("point mass R-transform is not c z")
    if s_transform(dc) != TruncSeries([ONE / c], N - 1):
        return _fail("point mass S-transform is not 1/c")
    return True, "NC counts Catalan to n=8 (1430 at n=8); oracle equals recursion; R/S closed forms exact"


# -- criterion 6 -------------------------------------------------------------------------------


def check_ring_structures(seed, order: int = 8):
    """Both transported ring structures and the LOG/EXP isomorphism pair."""
    rng = _rng(seed, "distrings")
    N = order

    def rand_mean1():
        return Distribution([ONE] + [_frac(rng) for _ in range(N - 1)])

    def rand_dist():
        return Distribution([_frac(rng) for _ in range(N)])

    d1 = Distribution.dirac(1, N)
    d0 = Distribution.dirac(0, N)
    ast_unit = distribution_from_s(TruncSeries.geometric(1, N - 1))
    fp = Distribution.free_poisson(N)
    for trial in range(10):
        mu, nu, rho = rand_mean1(), rand_mean1(), rand_mean1()
        if boxtimes(mu, nu) != boxtimes(nu, mu):
            return _fail("boxtimes is not commutative")
        if boxtimes(boxtimes(mu, nu), rho) != boxtimes(mu, boxtimes(nu, rho)):
            return _fail("boxtimes is not associative")
        if boxtimes(mu, d1) != mu:
            return _fail("delta_1 is not neutral for boxtimes")
        if circledast(mu, nu) != circledast(nu, mu):
            return _fail("circledast is not commutative")
        if circledast(circledast(mu, nu), rho) != circledast(mu, circledast(nu, rho)):
            return _fail("circledast is not associative")
        if circledast(mu, ast_unit) != mu:
            return _fail("the pulled-back geometric series is not the circledast unit")
        if circledast(mu, boxtimes(nu, rho)) != boxtimes(circledast(mu, nu), circledast(mu, rho)):
            return _fail("circledast does not distribute over boxtimes")
        a, b, c2 = rand_dist(), rand_dist(), rand_dist()
        if boxplus(a, b) != boxplus(b, a) or boxplus(boxplus(a, b), c2) != boxplus(a, boxplus(b, c2)):
            return _fail("boxplus group laws failed")
        if boxplus(a, d0) != a:
            return _fail("delta_0 is not neutral for boxplus")
        if boxdot(a, b) != boxdot(b, a) or boxdot(boxdot(a, b), c2) != boxdot(a, boxdot(b, c2)):
            return _fail("boxdot ring laws failed")
        if boxdot(a, fp) != a:
            return _fail("free Poisson is not the boxdot unit")
        if boxdot(a, boxplus(b, c2)) != boxplus(boxdot(a, b), boxdot(a, c2)):
            return _fail("boxdot does not distribute over boxplus")
        if dist_log(boxtimes(mu, nu)) != boxplus(dist_log(mu), dist_log(nu)):
            return _fail("LOG does not take boxtimes to boxplus")
        if dist_log(circledast(mu, nu)) != boxdot(dist_log(mu), dist_log(nu)):
            return _fail("LOG does not take circledast to boxdot")
        if dist_exp(dist_log(mu)) != mu:
            return _fail("EXP does not invert LOG")
        if dist_log(dist_exp(a)) != a:
            return _fail("LOG does not invert EXP")
    if dist_log(d1) != Distribution.dirac(0, N - 1):
        return _fail("LOG of delta_1 is not delta_0")
    return True, "ring axioms for both structures on 10 random triples at N=8; LOG/EXP mutually inverse ring isomorphisms"


# -- criterion 7 -----------------------------------------------------------------------


def check_fock_cross_validation(seed, order: int = 6):
    """Word algebra reproduces the combinatorial moments; freeness passes."""
    rng = _rng(seed, "fock")
    N = 6
    for trial in range(20):
        k = CumulantVector([_frac(rng, 5, 3) for _ in range(N)])
        if vacuum_moments(canonical_T(k, N), N) != moments_from_cumulants(k):
            return _fail("canonical element has wrong moments at trial %d" % trial)
    for trial in range(20):
        f = TruncSeries([ONE] + [_frac(rng, 4, 3) for _ in range(6)], 6)
        g = TruncSeries([ONE] + [_frac(rng, 4, 3) for _ in range(6)], 6)
        rep = freeness_witness(f, g, N)
        if not rep["passed"]:
            return _fail("freeness witness failed at trial %d: %r" % (trial, rep))
    return True, "20 canonical elements match the cumulant route; 20 freeness witnesses pass all three checks at N=6"


# -- criterion 8 ----------------------------------------------------------------------------


def check_genus_suite(seed, order: int = 8):
    """Named genera, Todd polynomials, multiplicativity and the Fock link."""
    todd = named_genus("todd", 11)
    q = q_from_genus(todd)
    z = TruncSeries.identity(11)
    todd_expected = TruncSeries.one(10) / (1 - exp_zero(-z)).shift_down(1)
    if q.q != todd_expected:
        return _fail("Todd characteristic series mismatch")
    lgenus = named_genus("L", 11)
    ql = q_from_genus(lgenus)
    sinh = (exp_zero(z) - exp_zero(-z)) * Fraction(1, 2)
    cosh = (exp_zero(z) + exp_zero(-z)) * Fraction(1, 2)
    tanh = sinh / cosh
    if ql.q != TruncSeries.one(10) / tanh.shift_down(1):
        return _fail("signature characteristic series mismatch")
    from .genus import MSequence

    ms = msequence_from_q(q, 8)
    p1 = MultiPoly.var("p1", weight=1)
    p2 = MultiPoly.var("p2", weight=2)
    if ms.K[1] != p1 * Fraction(1, 2):
        return _fail("first Todd polynomial is not p1/2")
    if ms.K[2] != (p2 + p1 ** 2) * Fraction(1, 12):
        return _fail("second Todd polynomial is not (p2 + p1^2)/12")
    for K, qq in ((ms, q), (msequence_from_q(ql, 8), ql)):
        for n in range(9):
            assign = {v: (ONE if v == "p1" else ZERO) for v in K.K[n].vars}
            if K.K[n].eval(assign) != qq.q.coeffs[n]:
                return _fail("readback K_n(1,0,...,0) failed at n=%d" % n)
        for n in range(1, 9):
            w = K.K[n].total_weight()
            if w is not None and any(
                K.K[n].term_weight(e) != n for e in K.K[n].terms
            ):
                return _fail("K_%d is not weight-homogeneous" % n)
    rep = msequence_multiplicativity_check(MSequence(ms.K[:7]), 6)
    if not rep["passed"]:
        return _fail("multiplicativity identity failed: %r" % rep)
    for name in ("trivial", "todd", "L"):
        qg = q_from_genus(named_genus(name, 11)).q.truncate(6)
        op = genus_operator(qg, 6)
        mu = vacuum_moments(op, 6)
        if s_transform(mu) != qg.truncate(5):
            return _fail("operator representation of %s genus has wrong S-transform" % name)
    lg = log_from_genus(named_genus("todd", 11))
    if genus_from_log(log_from_q(q_from_genus(named_genus("todd", 11)))) != named_genus("todd", 11):
        return _fail("genus/Q roundtrip failed")
    comp = compose(lg, log_from_genus(named_genus("L", 11)))
    if comp.coeffs[1] != 1:
        return _fail("composition of strict logarithms is not strict")
    return True, "Todd and signature series exact to order 10; Todd polynomials recomputed; readback, weight homogeneity, multiplicativity and the operator link all hold"


# -- criterion 9 (JSON half; byte determinism is exercised by running twice) -----------------


def check_json_roundtrips(seed, order: int = 8):
    from . import jsonio

    rng = _rng(seed, "json")
    L = order
    f = TruncSeries([_frac(rng) for _ in range(L + 1)], L)
    if jsonio.series_from_json(jsonio.series_to_json(f)) != f:
        return _fail("series roundtrip failed")
    a = WittVector([_frac(rng) for _ in range(L)])
    if jsonio.vector_from_json(jsonio.vector_to_json(a)) != a:
        return _fail("vector roundtrip failed")
    mu = Distribution([_frac(rng) for _ in range(L)])
    if jsonio.distribution_from_json(jsonio.distribution_to_json(mu)) != mu:
        return _fail("distribution roundtrip failed")
    fgl = fgl_from_log(TruncSeries([ZERO, ONE, _frac(rng), _frac(rng)], 3), 3)
    if jsonio.fgl_from_json(jsonio.fgl_to_json(fgl)).F != fgl.F:
        return _fail("group law roundtrip failed")
    el = canonical_T(CumulantVector([_frac(rng) for _ in range(4)]), 4)
    if jsonio.opelement_from_json(jsonio.opelement_to_json(el)) != el:
        return _fail("operator roundtrip failed")
    ms = msequence_from_q(q_from_genus(named_genus("todd", 11)), 4)
    back = jsonio.msequence_from_json(jsonio.msequence_to_json(ms))
    if any(x != y for x, y in zip(back.K, ms.K)):
        return _fail("multiplicative sequence roundtrip failed")
    return True, "all JSON encodings roundtrip bit-exactly"


CHECKS = [
    ("diagram", "coordinate-square commutativity", check_diagram_commutativity),
    ("rings", "four-chart ring isomorphisms", check_ring_isomorphisms),
    ("faber", "Faber routes, Grunsky, power operations", check_faber_routes),
    ("fgl", "formal group laws and the Lie side", check_formal_groups),
    ("freeprob", "moments, cumulants and transforms", check_freeprob_core),
    ("distrings", "transported ring structures and LOG/EXP", check_ring_structures),
    ("fock", "operator realizations and freeness", check_fock_cross_validation),
    ("genus", "genera, Todd polynomials, operator link", check_genus_suite),
    ("json", "JSON roundtrips", check_json_roundtrips),
]


def run_selftest(order: int = 8, seed=42) -> tuple[bool, str]:
    lines = []
    all_ok = True
    for key, label, fn in CHECKS:
        ok, detail = fn(seed, order)
        all_ok = all_ok and ok
        lines.append("%-8s  %-4s  %s" % (key, "PASS" if ok else "FAIL", detail))
    lines.append("selftest %s (order=%d, seed=%s)" % ("PASS" if all_ok else "FAIL", order, seed))
    return all_ok, "\n".join(lines)
