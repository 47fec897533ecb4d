"""Multivariate polynomials over the rationals with graded variables.

Terms live in a dict from exponent tuples to nonzero ``Fraction``
coefficients.  Every variable carries an integer weight (default 1) and
"degree" always means the weighted degree, so the same type serves plain
bivariate group laws (weights 1) and Pontryagin-style variables p_i of
weight i.  Instances are treated as immutable; all operations return new
polynomials in a canonical form (variables sorted by name, unused
variables pruned, no zero coefficients).
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("expected an exact rational, got %r" % (c,))


class MultiPoly:
    __slots__ = ("vars", "weights", "terms")

    def __init__(self, vars=(), terms=None, weights=None):
        vars = tuple(vars)
        if weights is None:
            weights = (1,) * len(vars)
        weights = tuple(weights)
        if len(weights) != len(vars):
            raise ValueError("weights must match variables")
        terms = dict(terms or {})
        # canonical form: sort variables, prune unused, drop zeros
        order = sorted(range(len(vars)), key=lambda i: vars[i])
        used = [False] * len(vars)
        clean = {}
        for exp, c in terms.items():
            c = _coerce_scalar(c)
            if c == 0:
                continue
            exp = tuple(exp)
            if len(exp) != len(vars):
                raise ValueError("exponent arity mismatch")
            clean[tuple(exp[i] for i in order)] = c
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        keep = [j for j, i in enumerate(order) if used[i]]
        object.__setattr__(self, "vars", tuple(vars[order[j]] for j in keep))
        object.__setattr__(self, "weights", tuple(weights[order[j]] for j in keep))
        object.__setattr__(
            self,
            "terms",
            {tuple(exp[j] for j in keep): c for exp, c in clean.items()},
        )

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _coerce_scalar(c)
        return cls((), {(): c} if c != 0 else {})

    @classmethod
    def var(cls, name: str, weight: int = 1, exp: int = 1) -> "MultiPoly":
        return cls((name,), {(exp,): ONE}, (weight,))

    @classmethod
    def monomial(cls, c, exps: dict, weights: dict | None = None) -> "MultiPoly":
        names = tuple(exps)
        w = tuple((weights or {}).get(n, 1) for n in names)
        return cls(names, {tuple(exps[n] for n in names): c}, w)

    # -- interrogation ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), ZERO)

    def inverse(self) -> "MultiPoly":
        from .errors import DivisionByNonUnit

        if not self.is_constant() or self.constant_value() == 0:
            raise DivisionByNonUnit("polynomial is not an invertible constant")
        return MultiPoly.const(ONE / self.constant_value())

    def term_weight(self, exp) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def total_weight(self):
        """Largest weighted degree of any term; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.term_weight(e) for e in self.terms)

    def coeff(self, exps: dict) -> Fraction:
        full = {n: 0 for n in self.vars}
        for n, e in exps.items():
            if e:
                if n not in full:
                    return ZERO
                full[n] = e
        return self.terms.get(tuple(full[n] for n in self.vars), ZERO)

    def exponents_for(self, names):
        """Terms re-expressed against an explicit variable list.

        Returns a dict {exponent tuple over names: coefficient}; raises if a
        term involves a variable outside `names`.
        """
        pos = {n: i for i, n in enumerate(names)}
        out = {}
        for exp, c in self.terms.items():
            row = [0] * len(names)
            for n, e in zip(self.vars, exp):
                if e:
                    if n not in pos:
                        raise ValueError("unexpected variable %r" % n)
                    row[pos[n]] = e
            out[tuple(row)] = c
        return out

    # -- alignment ----------------------------------------------------------------

    def _aligned(self, other):
        if self.vars == other.vars:
            if self.weights != other.weights:
                raise ValueError("conflicting variable weights")
            return self.vars, self.weights, self.terms, other.terms
        ws = dict(zip(self.vars, self.weights))
        for n, w in zip(other.vars, other.weights):
            if ws.setdefault(n, w) != w:
                raise ValueError("conflicting weights for variable %r" % n)
        names = tuple(sorted(ws))
        weights = tuple(ws[n] for n in names)

        def remap(poly):
            pos = [names.index(n) for n in poly.vars]
            out = {}
            for exp, c in poly.terms.items():
                row = [0] * len(names)
                for p, e in zip(pos, exp):
                    row[p] = e
                out[tuple(row)] = c
            return out

        return names, weights, remap(self), remap(other)

    # -- arithmetic ------------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        names, weights, a, b = self._aligned(other)
        out = dict(a)
        for exp, c in b.items():
            s = out.get(exp, ZERO) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return MultiPoly(names, out, weights)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, self.weights)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _coerce_scalar(other)
            if c == 0:
                return MultiPoly.const(0)
            return MultiPoly(
                self.vars, {e: v * c for e, v in self.terms.items()}, self.weights
            )
        return self.mul_capped(other, None)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self * other.inverse()
        return self * (ONE / _coerce_scalar(other))

    def mul_capped(self, other: "MultiPoly", cap) -> "MultiPoly":
        """Product, discarding terms of weighted degree above cap."""
        names, weights, a, b = self._aligned(other)
        if not a or not b:
            return MultiPoly(names, {}, weights)
        wt = lambda exp: sum(e * w for e, w in zip(exp, weights))
        awt = {e: wt(e) for e in a}
        bwt = {e: wt(e) for e in b}
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                if cap is not None and awt[ea] + bwt[eb] > cap:
                    continue
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(exp, ZERO) + ca * cb
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return MultiPoly(names, out, weights)

    def __pow__(self, k: int):
        return self.pow_capped(k, None)

    def pow_capped(self, k: int, cap) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.const(1)
        for _ in range(k):
            result = result.mul_capped(self, cap)
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    # -- truncation, substitution, evaluation ----------------------------------------

    def truncate_weight(self, cap) -> "MultiPoly":
        if cap is None:
            return self
        return MultiPoly(
            self.vars,
            {e: c for e, c in self.terms.items() if self.term_weight(e) <= cap},
            self.weights,
        )

    def substitute(self, mapping: dict, cap=None) -> "MultiPoly":
        """Replace variables by polynomials/scalars, truncating at weight cap.

        Unlisted variables are kept.  Power caching makes repeated exponents
        cheap; with a cap every intermediate product is trimmed, which is
        exact whenever substituted values have positive minimal weight.
        """
        subs = {}
        for name, val in mapping.items():
            subs[name] = val if isinstance(val, MultiPoly) else MultiPoly.const(val)
        cache = {}

        def power(name, e):
            key = (name, e)
            if key not in cache:
                if e == 1:
                    cache[key] = subs[name]
                else:
                    cache[key] = power(name, e - 1).mul_capped(subs[name], cap)
            return cache[key]

        total = MultiPoly.const(0)
        for exp, c in self.terms.items():
            static = {}
            factors = []
            for name, e, w in zip(self.vars, exp, self.weights):
                if e == 0:
                    continue
                if name in subs:
                    factors.append(power(name, e))
                else:
                    static[name] = e
            term = MultiPoly.monomial(
                c, static, {n: w for n, w in zip(self.vars, self.weights)}
            )
            for f in factors:
                term = term.mul_capped(f, cap)
            total = total + term
        return total.truncate_weight(cap)

    def eval(self, assign: dict) -> Fraction:
        """Evaluate with every variable bound to an exact rational."""
        total = ZERO
        for exp, c in self.terms.items():
            v = c
            for name, e in zip(self.vars, exp):
                if e:
                    v = v * _coerce_scalar(assign[name]) ** e
            total += v
        return total

    def rename(self, mapping: dict) -> "MultiPoly":
        """Rename variables (weights travel along)."""
        names = tuple(mapping.get(n, n) for n in self.vars)
        if len(set(names)) != len(names):
            raise ValueError("renaming collides")
        return MultiPoly(names, dict(self.terms), self.weights)

    # -- presentation -------------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(
            self.terms.items(),
            key=lambda item: (self.term_weight(item[0]), item[0]),
            reverse=True,
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("%s*%s" % (c, "*".join(factors)))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out
