"""Exact checks of parity and product identities for quadratic residues mod p."""

from .counting import (
    count_below_b,
    count_below_quarter,
    pan_sign,
    s_count,
    shifted_count,
    t_count,
    tri_inversions,
    wide_gap_count,
)
from .cyclo import CycloElem, gauss_sum, plus_product, to_quadratic
from .modint import ResidueTable, jacobi, legendre, primes_in, sqrt_mod, two_squares
from .quadfield import (
    QuadElem,
    class_number_imag,
    class_number_imag_forms,
    class_number_real,
    fundamental_unit,
)
from .verify import CHECKERS, VerifyReport

__version__ = "0.1.0"
