"""Exact arithmetic for twisted Frobenius Laurent polynomials.

Finite fields and Puiseux coefficients, the ring K{tau, tau^-1}, kernels and
the kernel pairing, Newton polygons, and torsion pairings for Drinfeld
modules over finite fields.
"""

from __future__ import annotations

from .drinfeld import APoly, DrinfeldModule, adjoint_torsion, phi_of, tate_compat, torsion, weil_pair
from .errors import FieldMismatchError, InvariantError, OrePairError, PreconditionError
from .fields import FFElem, FiniteField, embed
from .kernels import (
    KernelBasis,
    PairingTable,
    adjoint_kernel_basis,
    annihilator,
    change_field_trace,
    concomitant,
    isotropy_check,
    kernel_basis,
    matrix_pair,
    pair,
    pairing_table,
)
from .newton import (
    NewtonPolygon,
    PolygonPointCloud,
    build_annihilator,
    build_polygon,
    ell_r,
    truncate_fn,
    zero_measure,
)
from .puiseux import PuiseuxElem, PuiseuxField
from .twisted import NormValue, TwistedPoly, ore_divide_right, remainder_left, remainder_right

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
