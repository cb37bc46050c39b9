"""Exact lattice computations for polarized abelian varieties with group actions."""

from ._ppav import (
    GluedPPAV,
    MatrixGroup,
    PolarizedTorus,
    PpavError,
    alternating_type,
    build_standard,
    check_ids,
    column_hnf,
    determinant,
    example_a,
    example_b,
    example_c,
    from_symmetric_block,
    genus_bound,
    jacobian_cases,
    pfaffian,
    rh_residual,
    run_check,
    snf,
    theta,
    xi,
)

__all__ = [
    "GluedPPAV",
    "MatrixGroup",
    "PolarizedTorus",
    "PpavError",
    "alternating_type",
    "build_standard",
    "check_ids",
    "column_hnf",
    "determinant",
    "example_a",
    "example_b",
    "example_c",
    "from_symmetric_block",
    "genus_bound",
    "jacobian_cases",
    "pfaffian",
    "rh_residual",
    "run_check",
    "snf",
    "theta",
    "xi",
]
