"""fillcurve: minimal-degree smooth space-filling curves on P1 x P1 over F_q.

The package builds the bidegree-(q+1, q+1) curves through every rational
point of P1 x P1, decides their smoothness exactly, enumerates and samples
the no-rational-point coefficient sets, reduces censuses by the SL2 action,
and constructs smooth partners and symmetric examples for odd q.
"""

__version__ = "0.1.0"

from .errors import FillcurveError
from .field import Fel, Field, canonical_field, enumerate_field
from .rng import RngState
from .unipoly import UPoly, factor, is_irreducible, monic_gcd, roots_in_field

__all__ = [
    "FillcurveError",
    "Fel",
    "Field",
    "RngState",
    "UPoly",
    "__version__",
    "canonical_field",
    "enumerate_field",
    "factor",
    "is_irreducible",
    "monic_gcd",
    "roots_in_field",
]
