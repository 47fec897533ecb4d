"""Bit-exact JSON roundtrips for every value type."""

import random
from fractions import Fraction as F

import pytest

from freewitt import jsonio
from freewitt.fock import canonical_T
from freewitt.formal_group import fgl_from_log
from freewitt.freeprob import CumulantVector, Distribution
from freewitt.genus import named_genus, msequence_from_q, q_from_genus
from freewitt.multipoly import MultiPoly
from freewitt.series import TruncSeries
from freewitt.witt import GhostVector, LambdaElement, NecklaceVector, WittVector
from freewitt.faber import grunsky_coeffs


def rand_fracs(rng, n):
    return [F(rng.randint(-30, 30), rng.randint(1, 17)) for _ in range(n)]


def test_fraction_strings():
    assert jsonio.frac_to_str(F(-3, 7)) == "-3/7"
    assert jsonio.frac_to_str(F(4)) == "4/1"
    assert jsonio.frac_from_str("-3/7") == F(-3, 7)
    assert jsonio.frac_from_str("5") == F(5)
    with pytest.raises(ValueError):
        jsonio.frac_from_str("0.5")
    with pytest.raises(ValueError):
        jsonio.frac_from_str("1e3")


def test_series_roundtrip():
    rng = random.Random(91)
    f = TruncSeries(rand_fracs(rng, 9), 8)
    enc = jsonio.series_to_json(f)
    assert enc == jsonio.series_to_json(jsonio.series_from_json(enc))
    assert jsonio.series_from_json(enc) == f
    with pytest.raises(ValueError):
        jsonio.series_from_json({"order": 3, "coeffs": ["1/1"]})


def test_vector_roundtrips():
    rng = random.Random(92)
    for cls in (WittVector, GhostVector, NecklaceVector):
        v = cls(rand_fracs(rng, 8))
        enc = jsonio.vector_to_json(v)
        assert jsonio.vector_from_json(enc) == v
    with pytest.raises(ValueError):
        jsonio.vector_from_json({"kind": "witt", "comps": ["1/1"]}, expect="ghost")


def test_lambda_roundtrip():
    f = LambdaElement(TruncSeries.geometric(F(2, 3), 6))
    assert jsonio.lambda_from_json(jsonio.lambda_to_json(f)) == f


def test_distribution_and_cumulants_roundtrip():
    rng = random.Random(93)
    mu = Distribution(rand_fracs(rng, 8))
    assert jsonio.distribution_from_json(jsonio.distribution_to_json(mu)) == mu
    k = CumulantVector(rand_fracs(rng, 6))
    assert jsonio.cumulants_from_json(jsonio.cumulants_to_json(k)) == k


def test_multipoly_roundtrip_canonical_order():
    p = (MultiPoly.var("p1") + MultiPoly.var("p2", weight=2)) ** 3
    enc = jsonio.multipoly_to_json(p)
    assert jsonio.multipoly_from_json(enc) == p
    assert enc == jsonio.multipoly_to_json(jsonio.multipoly_from_json(enc))


def test_fgl_roundtrip():
    law = fgl_from_log(TruncSeries([F(0), F(1), F(1, 2), F(-2)], 3), 3)
    enc = jsonio.fgl_to_json(law)
    back = jsonio.fgl_from_json(enc)
    assert back.F == law.F and back.degree == law.degree


def test_opelement_roundtrip():
    el = canonical_T(CumulantVector([F(1), F(-1, 2), F(3), F(0)]), 4)
    enc = jsonio.opelement_to_json(el)
    assert jsonio.opelement_from_json(enc) == el
    assert enc == jsonio.opelement_to_json(jsonio.opelement_from_json(enc))


def test_grunsky_roundtrip():
    t = grunsky_coeffs([F(0), F(2, 3), F(1), F(0)], 4)
    enc = jsonio.grunsky_to_json(t)
    assert jsonio.grunsky_from_json(enc) == t


def test_genus_and_msequence_roundtrip():
    g = named_genus("L", 9)
    assert jsonio.genus_from_json(jsonio.genus_to_json(g)) == g
    ms = msequence_from_q(q_from_genus(g), 3)
    back = jsonio.msequence_from_json(jsonio.msequence_to_json(ms))
    assert all(x == y for x, y in zip(back.K, ms.K))
