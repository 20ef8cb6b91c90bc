"""Exact CR invariants of generic submanifolds ``Im w = phi(z, zbar, Re w)``.

All arithmetic is over the Gaussian rationals; every rank, vanishing and
type decision is tolerance-free.
"""

from .invariants import InvariantProfile, bound_constants, profile
from .jets import DefiningJet, Dimensions, Jet
from .normalform import ChartError, eliminate_harmonic, recentre
from .parser import ParseError, parse_polynomial
from .scalars import GQ

__all__ = [
    "ChartError",
    "DefiningJet",
    "Dimensions",
    "GQ",
    "InvariantProfile",
    "Jet",
    "ParseError",
    "bound_constants",
    "eliminate_harmonic",
    "parse_polynomial",
    "profile",
    "recentre",
]

__version__ = "1.0.0"
