"""Discrete C-/E- Weyl orbit-function transforms, convolutions and image
filtering on the fundamental domains of A2, C2 and G2."""

from orbitx._core import (  # noqa: F401
    AlgebraId,
    GridKind,
    algebra_data,
    baseline_r2_filter,
    builtin_kernel,
    c_function,
    convolve,
    e_function,
    enumerate_labels,
    enumerate_points,
    epsilon,
    filter_image,
    forward,
    grid_size,
    h_dual,
    inverse,
    inverse_at,
    load_image,
    make_hexagon_test_image,
    save_image,
    verify_orthogonality,
    weyl_group_size,
    __version__,
)

__all__ = [
    "AlgebraId",
    "GridKind",
    "algebra_data",
    "baseline_r2_filter",
    "builtin_kernel",
    "c_function",
    "convolve",
    "e_function",
    "enumerate_labels",
    "enumerate_points",
    "epsilon",
    "filter_image",
    "forward",
    "grid_size",
    "h_dual",
    "inverse",
    "inverse_at",
    "load_image",
    "make_hexagon_test_image",
    "save_image",
    "verify_orthogonality",
    "weyl_group_size",
]
