"""Exact-arithmetic certification of the lattice invariants of the Fano
surface of the Klein cubic threefold.

The package re-derives, in exact arithmetic, the period lattice of the
intermediate Jacobian, the Neron-Severi lattice of the Fano surface
(rank 25, discriminant 11^10), the classification of its fibrations onto
elliptic curves, and the impossibility of automorphisms of order 7 (and
the elimination step for order 11) for smooth cubic threefolds.
"""

__version__ = "0.1.0"

from .scalars import (  # noqa: F401
    CycElem,
    ModP,
    NU,
    ONE_PLUS_2NU,
    ParseError,
    QuadInt,
    QuadRat,
    embed_quadratic,
    format_scalar,
    parse_scalar,
    quad_div_rem,
    quad_gcd,
)
from .matrices import (  # noqa: F401
    F11Subspace,
    Matrix,
    SingularMatrixError,
    det,
    hnf_z,
    hnf_znu,
    invariant_chain_f11,
    inverse,
    solve,
)
from .periods import (  # noqa: F401
    AutoMatrix,
    Functional,
    PeriodVector,
    ZnuLattice,
    alternating_form,
    build_quotient,
    diagonal_automorphism,
    dual_lattice,
    gram_alternating,
    hermitian_invariance_check,
    homology_lattice,
    lattice_chain,
    permutation_automorphism,
    pfaffian_squared,
    span_lattice,
    to_v_coords,
    v_vector,
)
from .neron_severi import (  # noqa: F401
    FibrationForm,
    NSClass,
    canonical_degree,
    class_of_fibration,
    fiber_intersection,
    genus,
    gram_25,
    gram_25_det,
    incidence_degree,
    norm_squared,
    normalize_fibration,
    ns_basis,
    ns_s_lattice,
    theta_class,
)
from .cubics import (  # noqa: F401
    CubicForm,
    SingularityCertificate,
    WeightSystem,
    admissible_weight_orbits,
    certify_singular_support,
    character_decomposition,
    is_smooth,
    order7_nonexistence,
    order11_x3_elimination,
)
from .group_orders import (  # noqa: F401
    automorphism_order_bound,
    gl_order,
)
from .report import (  # noqa: F401
    CheckResult,
    VerificationReport,
    fibration_query,
    run_suite,
    smoothness_query,
)
