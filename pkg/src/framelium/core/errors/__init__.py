from .__header__ import (
    __manifest__,
    FrameliumError,
    NonFiniteError,
    NotHermitianError,
    DimensionError,
    ZeroVectorError,
    DomainError,
    ConfigError,
    IndexRangeError,
    NumericalError,
    ConvergenceError,
    SingularOperatorError,
    IllConditionedError,
    KernelVanishingError,
    DegenerateSectionError,
)

__all__ = [
    "__manifest__",
    "FrameliumError",
    "NonFiniteError",
    "NotHermitianError",
    "DimensionError",
    "ZeroVectorError",
    "DomainError",
    "ConfigError",
    "IndexRangeError",
    "NumericalError",
    "ConvergenceError",
    "SingularOperatorError",
    "IllConditionedError",
    "KernelVanishingError",
    "DegenerateSectionError",
]
