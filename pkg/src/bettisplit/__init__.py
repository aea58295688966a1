"""Exact Betti numbers and Betti splittings of monomial ideals."""

from .betti import (
    BettiTable,
    graded_betti,
    has_linear_resolution,
    is_componentwise_linear,
    multigraded_betti,
    nonlinear_components,
    regularity,
)
from .complexes import SimplicialComplex
from .errors import (
    AmbientMismatchError,
    BettiSplitError,
    ConstructionFailure,
    DegenerateComplexError,
    DegenerateSplitError,
    HypothesisError,
    MalformedInputError,
    NotEquigeneratedError,
    PreconditionError,
    ResourceLimitError,
    UndefinedError,
)
from .fatpoints import (
    FatPointParams,
    betti_closed_form,
    betti_recursive,
    fat_points_ideal,
    theorem51_split,
    xn_split_equal_multiplicity,
)
from .formats import parse_complex, parse_ideal, render_betti_table, render_complex, render_ideal
from .homology import reduced_homology_dims
from .linalg import DEFAULT_FIELD, GF, QQ, FieldSpec
from .monomials import MonomialIdeal, colon_by_variable, ideal_intersection, ideal_sum
from .simplicial import (
    alexander_dual_ideal,
    find_shelling,
    is_sequentially_cm,
    is_vertex_decomposable,
    union_splitting_check,
    verify_shelling,
)
from .splitting import (
    SplittingReport,
    admits_xi_splitting,
    is_betti_splitting,
    search_betti_splittings,
    xi_split,
)

__version__ = "0.1.0"
