from .__header__ import (
    __manifest__,
    KernelSpace,
    HardySpace,
    DirichletAlphaSpace,
    DMuSpace,
    KernelGramian,
    PointMass,
    PointMassMeasure,
    CNPDiagnostic,
    check_point,
    one_minus_conj_product,
    pseudo_hyperbolic_distance,
    pseudo_hyperbolic_separation,
)

__all__ = [
    "__manifest__",
    "KernelSpace",
    "HardySpace",
    "DirichletAlphaSpace",
    "DMuSpace",
    "KernelGramian",
    "PointMass",
    "PointMassMeasure",
    "CNPDiagnostic",
    "check_point",
    "one_minus_conj_product",
    "pseudo_hyperbolic_distance",
    "pseudo_hyperbolic_separation",
]
