"""Exact Dunkl operators, nonsymmetric Jack polynomials and singular polynomials for S_N."""

__version__ = "0.1.0"

from .comb import (  # noqa: E402
    StandardTableau,
    apply_cycle,
    contents,
    dominates,
    drop_tilde,
    index_from_pair,
    insert,
    lambda_from_isotype,
    linext_cmp,
    rank,
    shape_from_pair,
    syt_enumerate,
    to_partition,
    top_tableau,
    xi,
)
from .jack import (  # noqa: E402
    CriticalPair,
    HookDatum,
    NsjpRecord,
    critical_pairs,
    e_factor,
    hook_product,
    leg_length,
    nsjp,
)
from .ops import b_op, cherednik_u, dunkl, murphy_omega, pairing  # noqa: E402
from .poly import Permutation, SparsePolynomial  # noqa: E402
from .scalar import (  # noqa: E402
    KAPPA,
    RationalFunctionK,
    eval_at,
    normalize,
    scaled_limit,
    vanishing_order,
)
from .singular import (  # noqa: E402
    SingularDatum,
    WitnessPlan,
    datum,
    isotype_of,
    module_degree,
    murphy_labels,
    nonexistence_witness,
    singular_basis,
    singular_space,
    verify_singular,
    witness_plan,
)
