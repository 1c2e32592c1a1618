"""
Dense complex Hermitian linear algebra.

`HermitianMatrix` is the validated finite section every other package hands to
the eigensolver; `SpectralCore` is the eigensolver service (cyclic Jacobi,
implemented in __impl__.py) together with the Schur row-sum bound and the
extreme singular values of square matrices.
"""

from framelium import __project_manifest__ as __parent_manifest__
from framelium.core.header import Manifest, Header, classProperty, dlock
from framelium.core.config import FrameliumSettings
from framelium.core.errors import NonFiniteError, NotHermitianError, DimensionError

from abc import abstractmethod
from typing import ClassVar, List, Optional, Sequence, Tuple, Union
import threading

import numpy as np
from pydantic import Field, model_validator

import logging
logger = logging.getLogger(__name__)

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Dense Hermitian eigendecomposition, operator-norm bounds and singular extremes",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.Immutable,
    dependencies=[
        Manifest.Dependency(name="numpy", version=">=1.26"),
    ],
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 1),
                           notes=["Cyclic Jacobi eigensolver for complex Hermitian matrices"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025, 9, 5),
                           notes=["Schur row-sum bound and singular extremes"]),
    ]
)

ArrayLike = Union[np.ndarray, Sequence[Sequence[complex]]]


def as_finite_square(entries: ArrayLike, what: str = "matrix") -> np.ndarray:
    """Copy `entries` into a complex square array, rejecting NaN/Inf."""
    a = np.array(entries, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"{what} must be a non-empty square array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        bad = tuple(int(i) for i in np.argwhere(~np.isfinite(a))[0])
        raise NonFiniteError(f"{what} has a non-finite entry at {bad}")
    return a


class HermitianMatrix:
    """
    Dense n x n complex Hermitian matrix.

    Inputs within `tol` (absolute) of Hermitian are symmetrized by averaging
    with the conjugate transpose; the stored array is read-only.
    """

    def __init__(self, entries: ArrayLike, tol: Optional[float] = None):
        tol = FrameliumSettings.default.hermitian_tol if tol is None else tol
        a = as_finite_square(entries, "Hermitian matrix")
        deviation = float(np.max(np.abs(a - a.conj().T)))
        if deviation > tol:
            i, j = np.unravel_index(np.argmax(np.abs(a - a.conj().T)), a.shape)
            raise NotHermitianError(
                f"entry ({i + 1},{j + 1}) differs from the conjugate of ({j + 1},{i + 1}) by {deviation:.3e} > {tol:.1e}",
                deviation,
            )
        a = 0.5 * (a + a.conj().T)
        a.setflags(write=False)
        self._a = a

    @classmethod
    def from_entries(cls, n: int, entry, tol: Optional[float] = None) -> "HermitianMatrix":
        """Build from a 1-based entry function entry(i, j)."""
        a = np.empty((n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                a[i, j] = entry(i + 1, j + 1)
        return cls(a, tol=tol)

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    def entry(self, i: int, j: int) -> complex:
        """1-based entry access."""
        return complex(self._a[i - 1, j - 1])

    def leading(self, k: int) -> "HermitianMatrix":
        """Leading k x k principal submatrix."""
        if not 1 <= k <= self.n:
            raise DimensionError(f"leading section size {k} outside 1..{self.n}")
        return HermitianMatrix(self._a[:k, :k], tol=np.inf)

    def principal(self, indices: Sequence[int]) -> "HermitianMatrix":
        """Principal submatrix on 1-based indices."""
        idx = np.asarray(indices, dtype=int) - 1
        return HermitianMatrix(self._a[np.ix_(idx, idx)], tol=np.inf)

    def entrywise_modulus(self) -> "HermitianMatrix":
        return HermitianMatrix(np.abs(self._a), tol=np.inf)

    @property
    def trace(self) -> float:
        return float(np.trace(self._a).real)

    @property
    def frobenius(self) -> float:
        return float(np.linalg.norm(self._a))

    def __repr__(self) -> str:
        return f"HermitianMatrix(n={self.n})"


class SpectralSummary(Manifest.XObject):
    """Extreme eigenvalues of a finite section (estimates of Riesz bounds A, B)."""

    __style__ = Manifest.XObject.Style.LINEAR

    n: int = Field(ge=1, description="Dimension of the section")
    lambda_min: float
    lambda_max: float

    @model_validator(mode="after")
    def _ordered(self) -> "SpectralSummary":
        if self.lambda_min > self.lambda_max:
            raise ValueError(f"lambda_min {self.lambda_min} exceeds lambda_max {self.lambda_max}")
        return self


class SpectralCore(Header):
    """
    Eigensolver service for dense complex Hermitian matrices.

    Use `SpectralCore.default` for the shared instance built from the current
    settings, or `SpectralCore(tol=..., max_sweeps=...)` for a private one.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Cyclic Jacobi eigensolver service",
        status=Manifest.Status.Validated,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    _default_instance: ClassVar[Optional["SpectralCore"]] = None
    _default_lock: ClassVar[threading.Lock] = threading.Lock()

    @classProperty
    @dlock("_default_lock", "_default_instance")
    def default(cls) -> "SpectralCore":
        """
        The default, shared solver instance.
        """
        return SpectralCore()

    @classmethod
    def reset_default(cls) -> None:
        """Drop the shared instance so the next access re-reads the settings."""
        with SpectralCore._default_lock:
            SpectralCore._default_instance = None

    def __init__(self, tol: Optional[float] = None, max_sweeps: Optional[int] = None,
                 max_dimension: Optional[int] = None, hermitian_tol: Optional[float] = None):
        super().__init__()
        settings = FrameliumSettings.default
        self._tol = settings.jacobi_tol if tol is None else tol
        self._max_sweeps = settings.jacobi_max_sweeps if max_sweeps is None else max_sweeps
        self._max_dimension = settings.max_dimension if max_dimension is None else max_dimension
        self._hermitian_tol = settings.hermitian_tol if hermitian_tol is None else hermitian_tol

    def as_hermitian(self, m: Union[HermitianMatrix, ArrayLike]) -> HermitianMatrix:
        if isinstance(m, HermitianMatrix):
            return m
        return HermitianMatrix(m, tol=self._hermitian_tol)

    @abstractmethod
    def eig_hermitian(self, m: Union[HermitianMatrix, ArrayLike]) -> List[float]:
        """Eigenvalues in ascending order, ties kept as repeated values."""

    @abstractmethod
    def eigh(self, m: Union[HermitianMatrix, ArrayLike]) -> Tuple[np.ndarray, np.ndarray]:
        """Ascending eigenvalues and the unitary matrix of eigenvectors (columns)."""

    @abstractmethod
    def schur_row_bound(self, m: Union[HermitianMatrix, ArrayLike]) -> float:
        """Largest absolute row sum; an upper bound for the spectral radius."""

    @abstractmethod
    def singular_extremes(self, a: ArrayLike) -> Tuple[float, float]:
        """(sigma_min, sigma_max) of a square complex matrix."""

    def summary(self, m: Union[HermitianMatrix, ArrayLike]) -> SpectralSummary:
        values = self.eig_hermitian(m)
        return SpectralSummary(n=len(values), lambda_min=values[0], lambda_max=values[-1])
