"""Plunge-region eigenvalues of Gabor frame multipliers on binary symbols."""

from ._plunge import (
    NumericalError,
    ValidationError,
    annulus_unordered,
    counting_function,
    decreasing_rearrangement,
    dgt,
    disk_eigenvalue,
    disk_profile,
    disk_profile_error,
    erfc,
    erfc_inv,
    erfc_profile,
    frame_multiplier,
    hermitian_eigvals,
    load_mask,
    make_shape,
    measure,
    run_experiment,
    run_experiment_mask,
    save_mask,
    shape_kinds,
    table1_reference,
    two_erfc_rearranged,
    window,
)

__all__ = [
    "NumericalError",
    "ValidationError",
    "annulus_unordered",
    "counting_function",
    "decreasing_rearrangement",
    "dgt",
    "disk_eigenvalue",
    "disk_profile",
    "disk_profile_error",
    "erfc",
    "erfc_inv",
    "erfc_profile",
    "frame_multiplier",
    "hermitian_eigvals",
    "load_mask",
    "make_shape",
    "measure",
    "run_experiment",
    "run_experiment_mask",
    "save_mask",
    "shape_kinds",
    "table1_reference",
    "two_erfc_rearranged",
    "window",
]
