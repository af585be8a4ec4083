"""Intrinsic volumes of the quantum state space and the complementarity polytope."""

from ._qgeom import (
    LogReal,
    PrescriptionKind,
    ball_volume,
    check_trivial_requirements,
    compare_polytope_statespace,
    distance_to_cpolytope,
    distance_to_statespace,
    estimate_neighborhood_volume,
    exclusion_report,
    fit_steiner_coefficients,
    flag_manifold_volume,
    generate_prescription,
    log_gamma,
    polytope_angles,
    polytope_face_counts,
    polytope_surface,
    polytope_table,
    polytope_vertices,
    polytope_volume,
    polytope_vtilde_dm2,
    polytope_vtilde_dm3,
    project_to_probability_simplex,
    selberg_laguerre,
    simplex_quadrature_oracle,
    simplex_selberg,
    spherical_triangle_area,
    statespace_p2,
    statespace_p3,
    statespace_surface,
    statespace_table,
    statespace_volume,
    __version__,
)

__all__ = [
    "LogReal",
    "PrescriptionKind",
    "ball_volume",
    "check_trivial_requirements",
    "compare_polytope_statespace",
    "distance_to_cpolytope",
    "distance_to_statespace",
    "estimate_neighborhood_volume",
    "exclusion_report",
    "fit_steiner_coefficients",
    "flag_manifold_volume",
    "generate_prescription",
    "log_gamma",
    "polytope_angles",
    "polytope_face_counts",
    "polytope_surface",
    "polytope_table",
    "polytope_vertices",
    "polytope_volume",
    "polytope_vtilde_dm2",
    "polytope_vtilde_dm3",
    "project_to_probability_simplex",
    "selberg_laguerre",
    "simplex_quadrature_oracle",
    "simplex_selberg",
    "spherical_triangle_area",
    "statespace_p2",
    "statespace_p3",
    "statespace_surface",
    "statespace_table",
    "statespace_volume",
    "__version__",
]
