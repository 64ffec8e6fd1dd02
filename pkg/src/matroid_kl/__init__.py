"""Kazhdan-Lusztig polynomials of matroids, the deformed Möbius algebra, and related checks."""

from .algebra import (
    AlgebraElement,
    boolean_product_closed,
    eps_product,
    expand_in_kl_basis,
    interval_kl,
    kl_basis_element,
    positivity_scan,
    product_in_kl_basis,
    structure_constant,
    unit,
)
from .bc import FVector, bc_f_vector, bc_h_poly, dominance_report
from .combinatorics import Partition, m_count, partitions, set_partitions, stirling
from .errors import KLError
from .families import (
    braid_char_poly,
    braid_cubic,
    braid_kl,
    braid_whitney,
    gf_check_braid,
    gf_check_uniform,
    uniform_char_poly,
    uniform_coeff_closed,
    uniform_kl,
)
from .kl import (
    KLResult,
    cancellation_check,
    check_defining_identity,
    conjecture_report,
    kl_coeff_closed,
    kl_poly,
)
from .lattice import (
    Boolean,
    Braid,
    ExplicitFlats,
    FlatLattice,
    Graph,
    Matrix,
    Uniform,
    build_lattice,
    char_poly,
    direct_sum,
    is_modular,
    localization,
    mobius,
    parse_spec,
    restriction,
    whitney,
)
from .polynomial import IntPoly, LaurentPoly
from .series import Series2

__version__ = "0.1.0"
