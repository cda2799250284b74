"""Exact link-homotopy invariants of three-component link maps in the 4-sphere."""

from .group_ring import LaurentPoly, RingElem, parse_laurent, parse_ring
from .heisenberg import GX, GY, GZ, HeisenbergElem
from .invariants import affine_norm_stat, gcd_profile, mu_bar, mu_bar_eq, width
from .milnor import MF3Elem, Mf3Auto, magnus, project_gamma
from .orbit import Distinct, Equal, Undecided, orbit_eq
from .parsing import ParseError
from .theta import JKBlock, Stack, ThetaElem, closure_sigma, theta_of_stack
from .triples import BasingShift, Triple, act, brunnian_certificate, kirk_projection
from .welded import BraidWord, braid_action, longitudes, parse_braid

__version__ = "0.1.0"

__all__ = [
    "BasingShift", "BraidWord", "Distinct", "Equal", "GX", "GY", "GZ", "HeisenbergElem",
    "JKBlock", "LaurentPoly", "MF3Elem", "Mf3Auto", "ParseError", "RingElem", "Stack",
    "ThetaElem", "Triple", "Undecided", "act", "affine_norm_stat", "braid_action",
    "brunnian_certificate", "closure_sigma", "gcd_profile", "kirk_projection", "longitudes",
    "magnus", "mu_bar", "mu_bar_eq", "orbit_eq", "parse_braid", "parse_laurent", "parse_ring",
    "project_gamma", "theta_of_stack", "width",
]
