"""Symmetric GF(2) polynomials in the sigma basis, Moebius transforms and code distance checks."""

from .mindist import (
    CodeMap,
    GeneratorMatrix,
    RankDeficientError,
    Verdict,
    brute_force_min_weight,
    min_distance,
    search_min_distance,
    weight_at_least,
    weight_bound_nonlinear,
)
from .moebius import (
    BudgetExceededError,
    DenseANF,
    SparseANF,
    TruthTable,
    collect,
    evaluate,
    expand,
    moebius,
    moebius_symbolic,
    truth_table_of,
)
from .spheres import (
    build_phi,
    build_phi_closed,
    build_rho,
    emit_table,
    expand_in_rho_basis,
    phi_factor_parts,
)
from .symfunc import (
    SymmetricPoly,
    binom_parity,
    eval_at_weight,
    from_power_basis,
    poly_mul,
    restrict,
    sigma_mul,
)

__version__ = "0.1.0"
