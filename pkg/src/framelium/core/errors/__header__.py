"""
Exception hierarchy.

All errors derive from built-in exception types, so callers that only know
about ValueError / RuntimeError / IndexError keep working. The CLI maps
input errors to exit code 1 and NumericalError to exit code 2.
"""

from framelium.core import __manifest__ as __parent_manifest__
from framelium.manifest import Manifest

from typing import Any, Optional, Tuple

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Exception hierarchy for input and numerical failures",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.Immutable,
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 1),
                           notes=["Initial exception hierarchy"]),
    ]
)


class FrameliumError(Exception):
    """Root of all framelium errors."""


# --- input errors -----------------------------------------------------------

class NonFiniteError(FrameliumError, ValueError):
    """NaN or Inf in an input."""


class NotHermitianError(FrameliumError, ValueError):
    """Matrix violates Hermitian symmetry beyond tolerance."""

    def __init__(self, message: str, deviation: float):
        super().__init__(message)
        self.deviation = deviation


class DimensionError(FrameliumError, ValueError):
    """Shapes or lengths do not fit together."""


class ZeroVectorError(FrameliumError, ValueError):
    """A vector cannot be normalized."""

    def __init__(self, index: int, norm: float):
        super().__init__(f"zero vector at index {index} (norm {norm:.3e})")
        self.index = index
        self.norm = norm


class DomainError(FrameliumError, ValueError):
    """A point lies outside the domain of a kernel space."""

    def __init__(self, message: str, point: Optional[complex] = None):
        super().__init__(message)
        self.point = point


class ConfigError(FrameliumError, ValueError):
    """Invalid run configuration; `path` names the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class IndexRangeError(FrameliumError, IndexError):
    """1-based index outside the sequence."""


# --- numerical errors -------------------------------------------------------

class NumericalError(FrameliumError, RuntimeError):
    """A computation could not produce a trustworthy result."""


class ConvergenceError(NumericalError):
    """An iteration hit its cap before its stop criterion."""


class SingularOperatorError(NumericalError):
    """Operator is numerically singular."""

    def __init__(self, message: str, sigma_min: float):
        super().__init__(message)
        self.sigma_min = sigma_min


class IllConditionedError(NumericalError):
    """A matrix is too ill-conditioned to invert reliably."""

    def __init__(self, message: str, condition: float):
        super().__init__(message)
        self.condition = condition


class KernelVanishingError(NumericalError):
    """A kernel value vanished at a sampled pair (CNP condition (a) fails)."""

    def __init__(self, message: str, pair: Tuple[Any, Any]):
        super().__init__(message)
        self.pair = pair


class DegenerateSectionError(NumericalError):
    """A finite section has zero norm."""
