"""
Vector sequences and their Gramians.

A `GramianProvider` answers entry(n, m) = <x_n, x_m> for 1-based indices; the
inner product is linear in the first argument and conjugate-linear in the
second throughout. Providers are immutable once built, so entry lookups may
run concurrently.
"""

from framelium import __project_manifest__ as __parent_manifest__
from framelium.core.header import Manifest, Header
from framelium.core.errors import DimensionError, IndexRangeError, NonFiniteError
from framelium.spectral import HermitianMatrix

from abc import abstractmethod
import enum
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

import logging
logger = logging.getLogger(__name__)

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Gramian providers: explicit vectors, matrices, sub-sequences and the tridiagonal example",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.Immutable,
    dependencies=[
        Manifest.Dependency(name="numpy", version=">=1.26"),
    ],
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 2),
                           notes=["Explicit sequences with synthesis and analysis operators",
                                  "Tridiagonal Gramian with interleaved and centered indexing"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025, 9, 9),
                           notes=["restrict() for per-class analysis", "MatrixGramian",
                                  "transfer_bounds under invertible operators"]),
    ]
)


class GramianProvider(Header):
    """
    Read access to the Gramian of a (possibly infinite) sequence.

    Subclasses implement `entry`; `length` is None for infinite sequences.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Abstract Gramian provider",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    @abstractmethod
    def entry(self, n: int, m: int) -> complex:
        """<x_n, x_m> for 1-based n, m."""

    @property
    @abstractmethod
    def normalized(self) -> bool:
        """True when every diagonal entry is 1."""

    @property
    def length(self) -> Optional[int]:
        return None

    @property
    def name(self) -> str:
        return type(self).__name__.removesuffix("Impl")

    def check_index(self, n: int) -> None:
        if n < 1 or (self.length is not None and n > self.length):
            raise IndexRangeError(f"index {n} outside 1..{self.length if self.length is not None else 'inf'}")

    def check_size(self, size: int) -> None:
        if size < 1:
            raise DimensionError(f"section size must be positive, got {size}")
        if self.length is not None and size > self.length:
            raise DimensionError(f"section size {size} exceeds the sequence length {self.length}")

    def section_array(self, size: int) -> np.ndarray:
        """Raw N x N array of the leading section; subclasses may vectorize this."""
        self.check_size(size)
        a = np.empty((size, size), dtype=complex)
        for i in range(size):
            a[i, i] = self.entry(i + 1, i + 1)
            for j in range(i + 1, size):
                a[i, j] = self.entry(i + 1, j + 1)
                a[j, i] = self.entry(j + 1, i + 1)
        return a

    def section(self, size: int) -> HermitianMatrix:
        """Leading size x size section of the Gramian."""
        return HermitianMatrix(self.section_array(size))

    def restrict(self, indices: Sequence[int]) -> "SubsequenceGramian":
        """Sub-sequence provider over 1-based `indices` of this one."""
        return SubsequenceGramian(self, indices)


class ExplicitSequence(GramianProvider):
    """
    Finitely many vectors in C^d, stored as the rows of an array.

    Operations that produce a new sequence (normalize, apply_invertible) return
    a fresh instance; the stored array is read-only.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Explicit vectors with synthesis and analysis operators",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    def __init__(self, vectors: Union[np.ndarray, Sequence[Sequence[complex]]]):
        super().__init__()
        x = np.array(vectors, dtype=complex)
        if x.ndim != 2 or x.shape[0] == 0 or x.shape[1] == 0:
            raise DimensionError(f"vectors must form a non-empty (length, dimension) array, got shape {x.shape}")
        if not np.all(np.isfinite(x)):
            bad = int(np.argwhere(~np.isfinite(x))[0][0]) + 1
            raise NonFiniteError(f"vector {bad} has a non-finite coordinate")
        x.setflags(write=False)
        self._x = x

    @property
    def vectors(self) -> np.ndarray:
        """Read-only (length, dimension) array; row n-1 is x_n."""
        return self._x

    @property
    def dimension(self) -> int:
        return self._x.shape[1]

    @property
    def length(self) -> int:
        return self._x.shape[0]

    @property
    def norms(self) -> np.ndarray:
        return np.linalg.norm(self._x, axis=1)

    @property
    def normalized(self) -> bool:
        return bool(np.all(np.abs(self.norms - 1.0) <= 1e-12))

    def vector(self, n: int) -> np.ndarray:
        self.check_index(n)
        return self._x[n - 1]

    def entry(self, n: int, m: int) -> complex:
        return self.gram_entry(n, m)

    @abstractmethod
    def normalize(self) -> "ExplicitSequence":
        """x_n / ||x_n||; raises ZeroVectorError naming the first vector below the zero threshold."""

    @abstractmethod
    def gram_entry(self, n: int, m: int) -> complex:
        """<x_n, x_m> = sum_k x_n[k] * conj(x_m[k])."""

    @abstractmethod
    def synthesis(self, coeffs: Sequence[complex]) -> np.ndarray:
        """J a = sum_n a_n x_n for a finite coefficient list."""

    @abstractmethod
    def analysis_coeffs(self, x: Sequence[complex]) -> List[complex]:
        """J* x = (<x, x_n>)_n."""

    @abstractmethod
    def apply_invertible(self, a: Union[np.ndarray, Sequence[Sequence[complex]]]) -> "ExplicitSequence":
        """(A x_n)_n for an invertible d x d matrix A."""

    @abstractmethod
    def transfer_bounds(self, a: Union[np.ndarray, Sequence[Sequence[complex]]], size: Optional[int] = None) -> "TransferBounds":
        """Predicted Riesz-bound window for the normalized images under A."""

    @abstractmethod
    def repeated_indices(self) -> List[Tuple[int, int]]:
        """Pairs (n, m), n < m, whose vectors coincide (the sequence is then a multiset)."""


class TransferBounds(Manifest.XObject):
    """
    Riesz-bound transfer under an invertible operator.

    For normalized Gramians G (of x_n) and G' (of A x_n):
    lambda_min(G') >= lambda_min(G) / kappa^2 and lambda_max(G') <= lambda_max(G) * kappa^2,
    kappa = sigma_max(A) / sigma_min(A).
    """
    __style__ = Manifest.XObject.Style.TABLE

    size: int
    sigma_min: float
    sigma_max: float
    lambda_min: float
    lambda_max: float
    lower: float
    upper: float
    image_lambda_min: float
    image_lambda_max: float
    separation: float
    image_separation: float

    @property
    def kappa(self) -> float:
        return self.sigma_max / self.sigma_min

    @property
    def holds(self) -> bool:
        slack = 1e-10
        return self.image_lambda_min >= self.lower - slack and self.image_lambda_max <= self.upper + slack


class TridiagMode(str, enum.Enum):
    """Enumeration of the integer-indexed example."""
    Interleaved = "interleaved"
    Centered = "centered"


class TridiagExampleProvider(GramianProvider):
    """
    Gramian of f_n = z^n sqrt(phi) in L^2 of the circle, phi(e^{it}) = 1 + cos t.

    Entries are phi-hat(m - n): 1 on the diagonal, 1/2 for integer neighbours,
    0 otherwise. Integer indices are reached from 1, 2, 3, ... either by the
    interleaving 0, 1, -1, 2, -2, ... (infinite) or, in centered mode with
    half width K, by n -> n - 1 - K (indices -K..K, length 2K + 1). A centered
    provider may be cut to a shorter `length`; it then covers -K..length - 1 - K.

    Leading sections of both modes are permutations of contiguous integer
    blocks, so their spectrum is 1 + cos(pi j / (N + 1)), j = 1..N.
    """

    __class_type__ = Header.ClassType.Bundle

    Mode = TridiagMode

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Separated Bessel sequence that is not a Riesz sequence",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    def __init__(self, mode: Union[TridiagMode, str] = TridiagMode.Interleaved, half_width: int = 499,
                 length: Optional[int] = None):
        super().__init__()
        self._mode = TridiagMode(mode)
        if half_width < 0:
            raise DimensionError(f"half width must be non-negative, got {half_width}")
        if length is not None and not 1 <= length <= 2 * half_width + 1:
            raise DimensionError(f"length must lie in [1, {2 * half_width + 1}] for half width {half_width}, got {length}")
        if length is not None and self._mode is not TridiagMode.Centered:
            raise ValueError("only the centered mode has a finite length")
        self._half_width = half_width
        self._length = 2 * half_width + 1 if length is None else length

    @property
    def mode(self) -> TridiagMode:
        return self._mode

    @property
    def half_width(self) -> int:
        return self._half_width

    @property
    def normalized(self) -> bool:
        return True

    @property
    def length(self) -> Optional[int]:
        if self._mode is TridiagMode.Centered:
            return self._length
        return None

    def index_image(self, n: int) -> int:
        """Integer index of the n-th vector."""
        self.check_index(n)
        if self._mode is TridiagMode.Centered:
            return n - 1 - self._half_width
        return n // 2 if n % 2 == 0 else -(n // 2)

    def entry(self, n: int, m: int) -> complex:
        d = abs(self.index_image(n) - self.index_image(m))
        if d == 0:
            return 1.0 + 0j
        if d == 1:
            return 0.5 + 0j
        return 0j

    def section_array(self, size: int) -> np.ndarray:
        self.check_size(size)
        images = np.array([self.index_image(n) for n in range(1, size + 1)])
        d = np.abs(images[:, None] - images[None, :])
        return np.where(d == 0, 1.0, np.where(d == 1, 0.5, 0.0)).astype(complex)

    @staticmethod
    def phi(t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        return 1.0 + np.cos(t)

    @staticmethod
    def phi_fourier_oracle(k: int, nodes: int = 512) -> float:
        """
        (1/2pi) * integral of phi(e^{it}) e^{ikt} dt by the trapezoidal rule.

        The rule is exact for trigonometric polynomials of degree below `nodes`.
        """
        if abs(k) > 64:
            raise ValueError(f"|k| must not exceed 64, got {k}")
        if nodes < 512:
            raise ValueError(f"at least 512 nodes are required, got {nodes}")
        t = 2.0 * np.pi * np.arange(nodes) / nodes
        value = np.mean(TridiagExampleProvider.phi(t) * np.exp(1j * k * t))
        return float(value.real)

    @staticmethod
    def closed_form_extremes(size: int) -> Tuple[float, float]:
        """(lambda_min, lambda_max) of any N-section: 1 -/+ cos(pi / (N + 1))."""
        c = math.cos(math.pi / (size + 1))
        return 1.0 - c, 1.0 + c


class MatrixGramian(GramianProvider):
    """Provider over an explicit finite Hermitian matrix (1-based)."""

    __class_type__ = Header.ClassType.Bundle

    def __init__(self, matrix: Union[HermitianMatrix, np.ndarray, Sequence[Sequence[complex]]]):
        super().__init__()
        self._matrix = matrix if isinstance(matrix, HermitianMatrix) else HermitianMatrix(matrix)

    @property
    def matrix(self) -> HermitianMatrix:
        return self._matrix

    @property
    def length(self) -> int:
        return self._matrix.n

    @property
    def normalized(self) -> bool:
        return bool(np.all(np.abs(np.diag(self._matrix.array) - 1.0) <= 1e-12))

    def entry(self, n: int, m: int) -> complex:
        self.check_index(n)
        self.check_index(m)
        return self._matrix.entry(n, m)

    def section_array(self, size: int) -> np.ndarray:
        self.check_size(size)
        return np.array(self._matrix.array[:size, :size])


class SubsequenceGramian(GramianProvider):
    """Gramian of (x_{i_1}, x_{i_2}, ...) for 1-based parent indices i_k."""

    __class_type__ = Header.ClassType.Bundle

    def __init__(self, parent: GramianProvider, indices: Sequence[int]):
        super().__init__()
        indices = [int(i) for i in indices]
        if not indices:
            raise DimensionError("a sub-sequence needs at least one index")
        for i in indices:
            parent.check_index(i)
        self._parent = parent
        self._indices = tuple(indices)

    @property
    def parent(self) -> GramianProvider:
        return self._parent

    @property
    def indices(self) -> Tuple[int, ...]:
        return self._indices

    @property
    def length(self) -> int:
        return len(self._indices)

    @property
    def normalized(self) -> bool:
        return self._parent.normalized

    @property
    def name(self) -> str:
        return f"{self._parent.name}[{len(self._indices)}]"

    def entry(self, n: int, m: int) -> complex:
        self.check_index(n)
        self.check_index(m)
        return self._parent.entry(self._indices[n - 1], self._indices[m - 1])

    def section_array(self, size: int) -> np.ndarray:
        self.check_size(size)
        top = max(self._indices[:size])
        if top > 4 * size:
            return super().section_array(size)
        idx = np.asarray(self._indices[:size]) - 1
        return np.array(self._parent.section_array(top)[np.ix_(idx, idx)])
