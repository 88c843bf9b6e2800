"""Exact enumerative invariants of Brill-Noether theory on general curves."""
from .bn import (
    BNInput,
    VanishingSeq,
    complement,
    eh_exists,
    enumerate_sequences,
    rho,
    rho_adjusted,
)
from .castelnuovo import adjusted_castelnuovo, castelnuovo_number
from .codim2 import proportionality_report, surface_intersection
from .divisor import DivisorClass, bn_class, mu_nu, pointed_class, w_class
from .errors import PreconditionError
from .numeric import elementary_symmetric, factorial_det, inv_factorial
from .oracle import pointed_via_det, pointed_via_sym
from .pointed import cusp_count, pencil_count, plucker_count, pointed_count

__version__ = "0.1.0"
