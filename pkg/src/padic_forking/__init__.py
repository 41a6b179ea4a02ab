"""Exact computations in truncated free p-adic modules.

Arithmetic in ``(Z/p^N)^n``, pure closures and distances, types and forking
independence over finite parameter sets, and the forking pregeometry on the
realizations of an unbounded type. :mod:`padic_forking.oracle_lab` checks all
of it against brute-force enumeration.
"""

from .errors import (
    AmbientTooSmall,
    ContextMismatch,
    ContextTooLarge,
    DimensionMismatch,
    NonPrime,
    NonUnit,
    NotARealization,
    NotIndependent,
    PadicError,
    ParseError,
    PrecisionExhausted,
    PreconditionViolated,
    UnknownSuite,
)
from .indep import (
    TypeDistance,
    TypeInvariant,
    eps_independent,
    free_extension,
    galois_type,
    independent,
    independent_tuple,
    lascar_eps_splits,
    rank,
    same_type,
    type_distance,
)
from .lattice import (
    LinearMap,
    Submodule,
    closest,
    dist_to,
    extend_to_p_basis,
    member,
    p_independent,
    saturate,
    span,
    witness_map,
)
from .padic_core import (
    BELOW_PRECISION,
    Context,
    DistanceValue,
    Scalar,
    Vector,
    add,
    distance,
    multiply,
    negate,
    unit_inverse,
    valuation,
)
from .pregeometry import (
    GeometryClass,
    GeometrySpace,
    closure_member,
    dimension,
    fp_line,
    forks_equiv,
    naive_closure_member,
)

__version__ = "0.1.0"
