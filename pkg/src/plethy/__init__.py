"""Exact-arithmetic construction and verification of a plethystic
wedge-to-hook isomorphism for SL2 representation spaces."""

from .rings import (
    QQ,
    ZGAMMA,
    ZQ,
    ZZ,
    ConsistencyError,
    IntPoly,
    IntPolynomialRing,
    PrimeField,
    Ring,
    binomial,
    ring_by_name,
)
from .tableaux import (
    box,
    content,
    content_chain,
    count_hook_tableaux,
    increasing_to_pair,
    increasing_tuples,
    is_semistandard,
    neighbour,
    pair_alpha,
    pair_precedes,
    pair_sort_key,
    pair_to_increasing,
    semistandard_pairs,
)
from .spaces import (
    LinearMap,
    ModuleElement,
    PairCoords,
    Space,
    Sym,
    SymPower,
    Tensor,
    Wedge,
    act_e,
    act_f,
    act_group,
    basis,
    basis_index,
    dim,
    group_action_map,
    identity_map,
    kernel_basis,
    label_str,
    lie_action_map,
    multiplication_map,
    rank,
    rank_of_vectors,
    solve,
    total_degree,
    wedge_normalize,
    ydegree,
)
from .schur import HookSchurSpace, hook_schur_space
from .iso import (
    IsoContext,
    basis_image,
    flip_codomain_map,
    flip_domain_map,
    gl2_scalar_exponents,
    iso_context,
    reversal_sign,
    triangular_witness,
    verify_duality,
    verify_group_equivariance_fp,
    verify_group_equivariance_poly,
    verify_lie_equivariance,
    verify_structure,
)
from .characters import (
    QPoly,
    gaussian_binomial,
    hook_schur_polynomial,
    q_integer,
    qchar,
    qpoly,
    verify_qchar_identity,
)
from .conjecture import (
    CONVENTION,
    ConjectureReport,
    PrimeFingerprint,
    conjecture_qchar,
    hook_domain,
    hook_kernel_map,
    hook_kernel_vectors,
    jordan_fingerprint,
    jordan_type_from_ranks,
    kernel_qchar,
    lhs_space,
    scan,
    scan_one,
)
from .dump import (
    basis_to_json,
    dump_payload,
    linear_map_from_json,
    linear_map_to_csv,
    linear_map_to_json,
    ring_from_json,
    ring_to_json,
    weight_block_digest,
    weight_block_text,
)

__version__ = "0.1.0"
