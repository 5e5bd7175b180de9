"""Exact homology computations for the Schrodinger and Galilei Lie algebras."""

from schalg._core import (  # noqa: F401
    Chain,
    LieAlgebra,
    ModuleSpace,
    act,
    antisymmetrize,
    betti,
    build_algebra,
    ce_boundary_chain,
    check_tables,
    claims_report,
    free_product_series,
    invariant_subspace,
    lemma_suite,
    loday_boundary_chain,
    named_chain,
    predicted_series,
    tensor_series,
    wedge_space,
)

__all__ = [
    "Chain",
    "LieAlgebra",
    "ModuleSpace",
    "act",
    "antisymmetrize",
    "betti",
    "build_algebra",
    "ce_boundary_chain",
    "check_tables",
    "claims_report",
    "free_product_series",
    "invariant_subspace",
    "lemma_suite",
    "loday_boundary_chain",
    "named_chain",
    "predicted_series",
    "tensor_series",
    "wedge_space",
]
