"""JSON encodings for every public value type.

Rationals travel as decimal-free "p/q" strings with an explicit
denominator, so every roundtrip is bit-exact.  Term lists are emitted in
descending graded-lexicographic order; together with sorted object keys
at the serializer this makes output byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .faber import FaberPoly, GrunskyTable
from .fock import OpElement, OpWord
from .formal_group import Fgl
from .freeprob import CumulantVector, Distribution
from .genus import Genus, MSequence
from .multipoly import MultiPoly
from .series import TruncSeries
from .witt import GhostVector, LambdaElement, NecklaceVector, WittVector


def frac_to_str(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator)


def frac_from_str(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or "." in s or "e" in s or "E" in s:
        raise ValueError("rationals must be decimal-free p/q strings: %r" % (s,))
    return Fraction(s)


def series_to_json(f: TruncSeries) -> dict:
    return {"order": f.order, "coeffs": [frac_to_str(c) for c in f.coeffs]}


def series_from_json(obj: dict) -> TruncSeries:
    coeffs = [frac_from_str(c) for c in obj["coeffs"]]
    order = obj["order"]
    if len(coeffs) != order + 1:
        raise ValueError("need order+1 coefficients")
    return TruncSeries(coeffs, order)


def multipoly_to_json(p: MultiPoly) -> dict:
    return {
        "vars": list(p.vars),
        "weights": list(p.weights),
        "terms": [
            {"e": list(exp), "c": frac_to_str(c)} for exp, c in p.sorted_terms()
        ],
    }


def multipoly_from_json(obj: dict) -> MultiPoly:
    return MultiPoly(
        tuple(obj["vars"]),
        {tuple(t["e"]): frac_from_str(t["c"]) for t in obj["terms"]},
        tuple(obj.get("weights") or (1,) * len(obj["vars"])),
    )


def fgl_to_json(f: Fgl) -> dict:
    terms = []
    for exp, c in f.F.sorted_terms():
        mono = dict(zip(f.F.vars, exp))
        terms.append({"x": mono.get("x", 0), "y": mono.get("y", 0), "c": frac_to_str(c)})
    return {"degree": f.degree, "terms": terms}


def fgl_from_json(obj: dict) -> Fgl:
    terms = {}
    for t in obj["terms"]:
        terms[(t.get("x", 0), t.get("y", 0))] = frac_from_str(t["c"])
    return Fgl(MultiPoly(("x", "y"), terms), obj["degree"])


_VECTOR_KINDS = {
    "witt": WittVector,
    "ghost": GhostVector,
    "necklace": NecklaceVector,
}


def vector_to_json(v) -> dict:
    for kind, cls in _VECTOR_KINDS.items():
        if isinstance(v, cls):
            return {"kind": kind, "comps": [frac_to_str(c) for c in v.comps]}
    raise TypeError("not a component vector: %r" % (v,))


def vector_from_json(obj: dict, expect: str | None = None):
    kind = obj["kind"]
    if expect is not None and kind != expect:
        raise ValueError("expected a %r vector, got %r" % (expect, kind))
    cls = _VECTOR_KINDS[kind]
    return cls([frac_from_str(c) for c in obj["comps"]])


def lambda_to_json(f: LambdaElement) -> dict:
    return series_to_json(f.series)


def lambda_from_json(obj: dict) -> LambdaElement:
    return LambdaElement(series_from_json(obj))


def distribution_to_json(mu: Distribution) -> dict:
    return {"moments": [frac_to_str(m) for m in mu.moments]}


def distribution_from_json(obj: dict) -> Distribution:
    return Distribution([frac_from_str(m) for m in obj["moments"]])


def cumulants_to_json(k: CumulantVector) -> dict:
    return {"cumulants": [frac_to_str(c) for c in k.k]}


def cumulants_from_json(obj: dict) -> CumulantVector:
    return CumulantVector([frac_from_str(c) for c in obj["cumulants"]])


def opelement_to_json(a: OpElement) -> dict:
    words = sorted(
        a.terms.items(),
        key=lambda t: (t[0].length, t[0].creators, t[0].annihilators),
    )
    return {
        "generators": a.generators,
        "degree_cap": a.degree_cap,
        "terms": [
            {
                "creators": list(w.creators),
                "annihilators": list(w.annihilators),
                "coeff": frac_to_str(c),
            }
            for w, c in words
        ],
    }


def opelement_from_json(obj: dict) -> OpElement:
    terms = {}
    for t in obj["terms"]:
        w = OpWord(tuple(t["creators"]), tuple(t["annihilators"]))
        terms[w] = frac_from_str(t["coeff"])
    return OpElement(terms, obj["generators"], obj["degree_cap"])


def grunsky_to_json(t: GrunskyTable) -> dict:
    return {
        "size": t.size,
        "beta": [frac_to_str(c) for row in t.beta for c in row],
    }


def grunsky_from_json(obj: dict) -> GrunskyTable:
    M = obj["size"]
    flat = [frac_from_str(c) for c in obj["beta"]]
    if len(flat) != M * M:
        raise ValueError("grunsky table must hold size^2 entries")
    return GrunskyTable(tuple(tuple(flat[i * M : (i + 1) * M]) for i in range(M)))


def faberpoly_to_json(p: FaberPoly) -> dict:
    if all(isinstance(c, Fraction) for c in p.coeffs):
        return {"coeffs": [frac_to_str(c) for c in p.coeffs]}
    return {"coeffs": [multipoly_to_json(MultiPoly.const(c) if isinstance(c, Fraction) else c)
                       for c in p.coeffs], "symbolic": True}


def genus_to_json(g: Genus) -> dict:
    return {"cp_values": [frac_to_str(v) for v in g.cp_values]}


def genus_from_json(obj: dict) -> Genus:
    return Genus([frac_from_str(v) for v in obj["cp_values"]])


def msequence_to_json(ms: MSequence) -> dict:
    return {"K": [multipoly_to_json(K) for K in ms.K]}


def msequence_from_json(obj: dict) -> MSequence:
    return MSequence(tuple(multipoly_from_json(k) for k in obj["K"]))
