"""
Process-wide numerical settings.

Every tolerance the toolkit uses is a field here, so a run can be tuned from the
environment (prefix FRAMELIUM_, e.g. FRAMELIUM_SERIES_TOL=1e-12) without code
changes. Library code reads `FrameliumSettings.default` whenever a caller does
not pass an explicit value.
"""

from framelium.core import __manifest__ as __parent_manifest__
from framelium.core.header import Manifest, classProperty, dlock

import threading
from typing import ClassVar, Optional

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Tolerances and defaults, read from FRAMELIUM_* environment variables",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    dependencies=[
        Manifest.Dependency(name="pydantic-settings", version=">=2.0.0"),
    ],
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 1),
                           notes=["Initial settings model"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025, 9, 14),
                           notes=["Separate boundary margin for the Hardy space",
                                  "Stabilization tolerances for finite-section trends"]),
    ]
)


class FrameliumSettings(BaseSettings):
    """
    Numerical tolerances and defaults.

    The default instance is lazy-loaded and shared; register a custom one with
    `FrameliumSettings.set_default(...)` before first access, or pass explicit
    values to the individual operations.
    """
    model_config = SettingsConfigDict(env_prefix="FRAMELIUM_", frozen=True, extra="ignore", ignored_types=(classProperty,))

    # spectral core
    hermitian_tol: float = Field(default=1e-12, gt=0, description="Absolute Hermitian-symmetry tolerance")
    jacobi_tol: float = Field(default=1e-13, gt=0, description="Relative off-diagonal Frobenius stop criterion")
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    max_dimension: int = Field(default=1000, ge=1, description="Largest dense eigensolve accepted")
    psd_slack: float = Field(default=1e-9, ge=0, description="Negative eigenvalue slack for PSD verdicts")

    # sequences
    zero_vector_tol: float = Field(default=1e-14, gt=0)
    singular_tol: float = Field(default=1e-12, gt=0, description="Smallest admissible singular value of A")

    # kernels
    boundary_margin: float = Field(default=1e-9, gt=0, description="Points need |z| < 1 - margin")
    hardy_boundary_margin: float = Field(default=1e-12, gt=0)
    series_tol: float = Field(default=1e-10, gt=0)
    series_max_terms: int = Field(default=5000, ge=1)
    series_max_ratio: float = Field(default=0.995, gt=0, lt=1, description="Largest |conj(lambda) z| for D_alpha series")
    dmu_truncation: int = Field(default=40, ge=1)
    condition_limit: float = Field(default=1e12, gt=1)

    # partitions and reports
    not_separated_tol: float = Field(default=1e-12, gt=0)
    coincidence_tol: float = Field(default=4e-15, ge=0, lt=1e-6, description="Squared overlaps this close to 1 count as coinciding vectors")
    stabilization_rtol: float = Field(default=0.05, ge=0)
    stabilization_atol: float = Field(default=1e-9, ge=0)
    max_workers: int = Field(default=4, ge=1)
    log_level: str = Field(default="INFO")

    _default_instance: ClassVar[Optional["FrameliumSettings"]] = None
    _default_lock: ClassVar[threading.Lock] = threading.Lock()

    @model_validator(mode="after")
    def _check_margins(self) -> "FrameliumSettings":
        if self.boundary_margin >= 1 or self.hardy_boundary_margin >= 1:
            raise ValueError("boundary margins must be below 1")
        return self

    @classmethod
    def set_default(cls, settings: "FrameliumSettings") -> None:
        """
        Registers the instance returned by `FrameliumSettings.default`.

        Replacing the default after it has been read is allowed (tests do it),
        but objects built earlier keep the tolerances they captured.
        """
        if not isinstance(settings, FrameliumSettings):
            raise TypeError(f"{settings!r} is not a FrameliumSettings instance")
        with cls._default_lock:
            cls._default_instance = settings

    @classmethod
    def reset_default(cls) -> None:
        with cls._default_lock:
            cls._default_instance = None

    @classProperty
    @dlock("_default_lock", "_default_instance")
    def default(cls) -> "FrameliumSettings":
        """
        The default, shared settings instance (environment applied once).
        """
        return cls()
