"""Exact combinatorics of the mod-p derived Geometrical Lemma.

Root data with dimension weights, Weyl groups and double cosets, characters
and the twisted Weyl action, the orbit filtration of a parabolically induced
representation, derived coinvariants of principal series and generalized
Steinberg representations, and Ext predictions.
"""

from .characters import SmoothCharacter, alpha_w, character, chars_equal, delta_w, rho, star, trivial
from .coinvariants import ps_coinvariants, steinberg_coinvariants, steinberg_corollary, verify_by_resolution
from .errors import InputError, ModeError, ParindError, PreconditionError
from .ext_predictor import ExtQuery, TorusAssumptions, claim_check, predict_parabolic_ext, predict_ps_ext
from .geom_lemma import graded_pieces, heights, orbit_dim
from .jh_lattice import build_complex, cohomology
from .root_datum import RootDatum, Weight, build
from .weyl import bruhat_leq, d_w, dml, i_of_w, weyl_group

__version__ = "0.1.0"

__all__ = [
    "ExtQuery",
    "InputError",
    "ModeError",
    "ParindError",
    "PreconditionError",
    "RootDatum",
    "SmoothCharacter",
    "TorusAssumptions",
    "Weight",
    "alpha_w",
    "bruhat_leq",
    "build",
    "build_complex",
    "character",
    "chars_equal",
    "claim_check",
    "cohomology",
    "d_w",
    "delta_w",
    "dml",
    "graded_pieces",
    "heights",
    "i_of_w",
    "orbit_dim",
    "predict_parabolic_ext",
    "predict_ps_ext",
    "ps_coinvariants",
    "rho",
    "star",
    "steinberg_coinvariants",
    "steinberg_corollary",
    "trivial",
    "verify_by_resolution",
    "weyl_group",
]
