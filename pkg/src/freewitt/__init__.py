"""freewitt: exact computer algebra linking Witt vectors, lambda-rings,
necklace algebras, Faber polynomials, formal group laws, free probability
and complex-cobordism genera.

Everything is computed over the rationals with explicit truncation orders;
there is no floating point anywhere.
"""

from .series import (
    TruncSeries,
    comp_inverse,
    compose,
    exp_zero,
    log_unit,
    series_arith,
    z_dlog,
    z_dlog_inv,
)
from .multipoly import MultiPoly
from .formal_group import Derivation, Fgl
from .witt import GhostVector, LambdaElement, NecklaceVector, WittVector
from .freeprob import CumulantVector, Distribution
from .fock import OpElement, OpWord
from .genus import CharSeries, Genus, MSequence

__all__ = [
    "TruncSeries",
    "MultiPoly",
    "compose",
    "comp_inverse",
    "log_unit",
    "exp_zero",
    "z_dlog",
    "z_dlog_inv",
    "series_arith",
    "Fgl",
    "Derivation",
    "WittVector",
    "GhostVector",
    "NecklaceVector",
    "LambdaElement",
    "Distribution",
    "CumulantVector",
    "OpWord",
    "OpElement",
    "Genus",
    "CharSeries",
    "MSequence",
]

__version__ = "0.1.0"
