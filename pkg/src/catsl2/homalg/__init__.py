from .complexes import (
    GradedComplex,
    GradedVS,
    build_koszul,
    build_modified_koszul,
    homology,
    homology_all,
    is_exact,
    kernel_vectors,
    top_class_degree,
    top_class_label,
)
from .convolve import QComplex, ReductionReport, TruncatedRing, gaussian_convolve, random_qcomplex, scalar_homology_dims
from .theta import (
    bridge_shift,
    extension_degree,
    g_degree,
    graded_dim_bridge,
    phi_degree,
    symwedge_bijection_check,
    theta_hw_complex,
    theta_shift,
)

__all__ = [
    "GradedComplex", "GradedVS", "QComplex", "ReductionReport", "TruncatedRing", "bridge_shift",
    "build_koszul", "build_modified_koszul", "extension_degree", "g_degree", "gaussian_convolve",
    "graded_dim_bridge", "homology", "homology_all", "is_exact", "kernel_vectors", "phi_degree",
    "random_qcomplex", "scalar_homology_dims", "symwedge_bijection_check", "theta_hw_complex",
    "theta_shift", "top_class_degree", "top_class_label",
]
