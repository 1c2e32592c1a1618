"""
Reproducing-kernel spaces on the unit disc.

Every space exposes kernel(lam, z) = k_lam(z), so that f(lam) = <f, k_lam> and
<k_lam, k_mu> = kernel(lam, mu). Normalized kernels of a point list form a
`KernelGramian`, which plugs into the partition and profile machinery like any
other Gramian provider.

Area measure is normalized to total mass 1 on the disc.
"""

from framelium import __project_manifest__ as __parent_manifest__
from framelium.core.header import Manifest, Header
from framelium.manifest.types.value import ComplexValue
from framelium.core.config import FrameliumSettings
from framelium.core.errors import DomainError, NonFiniteError
from framelium.sequences import GramianProvider
from framelium.spectral import HermitianMatrix

from abc import abstractmethod
import math
import threading
from typing import ClassVar, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import ConfigDict, Field, field_validator

import logging
logger = logging.getLogger(__name__)

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Hardy, Dirichlet D_alpha and D(mu) kernels; normalized-kernel Gramians; Pick diagnostics",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    dependencies=[
        Manifest.Dependency(name="numpy", version=">=1.26"),
        Manifest.Dependency(name="scipy", version=">=1.11"),
    ],
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 3),
                           notes=["Hardy and Dirichlet D_alpha kernels", "Normalized kernel Gramians"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025, 9, 8),
                           notes=["D(mu) for finite sums of point masses, truncated Gram inversion",
                                  "Quadrature oracles for the monomial weights and the D(mu) Gram matrix"]),
        Manifest.Changelog(version="0.1.2", date=Manifest.Date(2025, 9, 14),
                           notes=["Cancellation-free Hardy kernel near the circle",
                                  "Carleson masses and pseudo-hyperbolic separation"]),
    ]
)

PointLike = Union[complex, float, int]


def check_point(z: PointLike, margin: float) -> complex:
    """Return z as a complex number, or raise DomainError unless |z| < 1 - margin."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteError(f"point {z} is not finite")
    if abs(z) >= 1.0 - margin:
        raise DomainError(f"point {z} is not inside the disc |z| < 1 - {margin:g}", z)
    return z


def one_minus_conj_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    1 - conj(a) * b without cancellation for |a|, |b| close to 1.

    Uses 1 - |a||b| = (1 - |a|) + |a|(1 - |b|) and 1 - e^{i phi} = -2i sin(phi/2) e^{i phi/2}.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    ra, rb = np.abs(a), np.abs(b)
    phi = np.angle(b) - np.angle(a)
    radial = (1.0 - ra) + ra * (1.0 - rb)
    turn = -2j * np.sin(phi / 2.0) * np.exp(0.5j * phi)
    return radial + ra * rb * turn


def pseudo_hyperbolic_distance(a: PointLike, b: PointLike) -> float:
    """rho(a, b) = |(a - b) / (1 - conj(a) b)|."""
    a = check_point(a, 0.0)
    b = check_point(b, 0.0)
    if a == b:
        return 0.0
    return float(abs(a - b) / abs(one_minus_conj_product(a, b)))


def pseudo_hyperbolic_separation(points: Sequence[PointLike]) -> float:
    """Smallest pseudo-hyperbolic distance between two entries of `points`."""
    z = np.array([check_point(p, 0.0) for p in points], dtype=complex)
    if z.size < 2:
        raise ValueError("separation needs at least two points")
    num = np.abs(z[:, None] - z[None, :])
    den = np.abs(one_minus_conj_product(z[:, None], z[None, :]))
    rho = num / den
    np.fill_diagonal(rho, np.inf)
    return float(np.min(rho))


class PointMass(Manifest.XObject):
    """c * delta_zeta with |zeta| = 1 and c > 0."""
    model_config = ConfigDict(frozen=True)

    zeta: ComplexValue
    mass: float = Field(gt=0)

    @field_validator("zeta")
    @classmethod
    def _unimodular(cls, zeta: complex) -> complex:
        if abs(abs(zeta) - 1.0) > 1e-12:
            raise ValueError(f"point mass location {zeta} is not on the unit circle")
        return zeta / abs(zeta)


class PointMassMeasure(Manifest.XObject):
    """Finite positive combination of point masses on the unit circle."""
    model_config = ConfigDict(frozen=True)

    __style__ = Manifest.XObject.Style.TABLE

    masses: Tuple[PointMass, ...] = Field(min_length=1)

    @classmethod
    def delta(cls, zeta: complex = 1.0, mass: float = 1.0) -> "PointMassMeasure":
        return cls(masses=(PointMass(zeta=zeta, mass=mass),))

    @classmethod
    def of(cls, pairs: Sequence[Tuple[complex, float]]) -> "PointMassMeasure":
        return cls(masses=tuple(PointMass(zeta=z, mass=c) for z, c in pairs))

    @property
    def zetas(self) -> np.ndarray:
        return np.array([p.zeta for p in self.masses], dtype=complex)

    @property
    def weights(self) -> np.ndarray:
        return np.array([p.mass for p in self.masses], dtype=float)

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def moment(self, d: int) -> complex:
        """sum_j c_j zeta_j^d."""
        return complex(np.sum(self.weights * self.zetas ** d))

    def poisson_array(self, z: np.ndarray) -> np.ndarray:
        """Poisson extension at every entry of z (no domain check)."""
        z = np.asarray(z, dtype=complex)
        num = 1.0 - np.abs(z) ** 2
        total = np.zeros(z.shape, dtype=float)
        for zeta, c in zip(self.zetas, self.weights):
            total += c * num / np.abs(zeta - z) ** 2
        return total

    def poisson(self, z: PointLike) -> float:
        """P_mu(z) = sum_j c_j (1 - |z|^2) / |zeta_j - z|^2 for z in the open disc."""
        z = check_point(z, 0.0)
        return float(self.poisson_array(np.array([z]))[0])


class CNPDiagnostic(Manifest.XObject):
    """Smallest eigenvalue of the sampled Pick-type matrix at a base point."""
    __style__ = Manifest.XObject.Style.LINEAR

    space: str
    omega0: ComplexValue
    size: int
    lambda_min: float
    psd: bool
    certified: bool = Field(description="True only for spaces known to be complete Pick spaces and a PSD sample")


class KernelSpace(Header):
    """
    Reproducing-kernel Hilbert space of analytic functions on the disc.

    Subclasses implement `kernel_matrix`; everything else is derived from it.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Abstract kernel space on the unit disc",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    name: ClassVar[str] = "kernel"

    def __init__(self, margin: Optional[float] = None):
        super().__init__()
        self._margin = FrameliumSettings.default.boundary_margin if margin is None else margin

    @property
    def margin(self) -> float:
        """Points must satisfy |z| < 1 - margin."""
        return self._margin

    @property
    def is_cnp_certified(self) -> bool:
        """Whether a PSD Pick-type sample may be reported as a Pick-space verdict."""
        return False

    def check(self, z: PointLike) -> complex:
        return check_point(z, self._margin)

    def check_all(self, points: Sequence[PointLike]) -> np.ndarray:
        return np.array([self.check(p) for p in points], dtype=complex)

    @abstractmethod
    def kernel_matrix(self, lambdas: Sequence[PointLike], zs: Sequence[PointLike]) -> np.ndarray:
        """Matrix of kernel(lambdas[i], zs[j])."""

    def kernel(self, lam: PointLike, z: PointLike) -> complex:
        """k_lam(z)."""
        return complex(self.kernel_matrix([lam], [z])[0, 0])

    def kernel_norm_sq(self, lam: PointLike) -> float:
        """||k_lam||^2 = k_lam(lam)."""
        return float(self.kernel(lam, lam).real)

    def normalized_gram_matrix(self, points: Sequence[PointLike]) -> np.ndarray:
        """<k^_{p_i}, k^_{p_j}> for all pairs of `points`."""
        k = self.kernel_matrix(points, points)
        d = np.real(np.diag(k))
        if np.any(d <= 0):
            bad = int(np.flatnonzero(d <= 0)[0])
            raise DomainError(f"kernel diagonal is not positive at point {points[bad]}; the space is invalid", complex(points[bad]))
        s = np.sqrt(d)
        g = k / np.outer(s, s)
        np.fill_diagonal(g, 1.0)
        return g

    def normalized_gram(self, lam_n: PointLike, lam_m: PointLike) -> complex:
        """<k^_{lam_n}, k^_{lam_m}> = k(lam_n, lam_m) / sqrt(k(lam_n, lam_n) k(lam_m, lam_m))."""
        return complex(self.normalized_gram_matrix([lam_n, lam_m])[0, 1])

    def gramian(self, points: Sequence[PointLike]) -> "KernelGramian":
        """Gramian provider of the normalized kernels at `points`."""
        return KernelGramian(self, points)

    def carleson_masses(self, points: Sequence[PointLike]) -> List[float]:
        """Masses ||k_{lam_n}||^{-2} of the measure sum_n ||k_{lam_n}||^{-2} delta_{lam_n}."""
        k = self.kernel_matrix(points, points)
        return [float(1.0 / v) for v in np.real(np.diag(k))]

    @abstractmethod
    def cnp_matrix(self, omega0: PointLike, points: Sequence[PointLike]) -> HermitianMatrix:
        """F_ij = 1 - k(w0, z_j) k(l_i, w0) / (k(w0, w0) k(l_i, z_j)) with l = z = points."""

    @abstractmethod
    def cnp_diagnostic(self, omega0: PointLike, points: Sequence[PointLike]) -> CNPDiagnostic:
        """lambda_min of `cnp_matrix` with a PSD verdict."""


class HardySpace(KernelSpace):
    """H^2 of the disc, k_lam(z) = 1 / (1 - conj(lam) z)."""

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Hardy space H^2",
        status=Manifest.Status.Validated,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    name: ClassVar[str] = "hardy"

    def __init__(self, margin: Optional[float] = None):
        super().__init__(FrameliumSettings.default.hardy_boundary_margin if margin is None else margin)


class DirichletAlphaSpace(KernelSpace):
    """
    D_alpha, 0 <= alpha <= 1: ||f||^2 = |f(0)|^2 + int |f'|^2 (1 - |z|^2)^(1 - alpha) dA.

    Monomials are orthogonal with ||z^n||^2 = w_n, so k_lam(z) = sum_n (conj(lam) z)^n / w_n.
    alpha = 1 is the Dirichlet space, alpha = 0 a weighted Bergman-type norm equivalent to H^2.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Weighted Dirichlet spaces D_alpha",
        status=Manifest.Status.Validated,
        threadSafety=Manifest.ThreadSafety.Immutable,
    )

    name: ClassVar[str] = "dirichlet_alpha"

    def __init__(self, alpha: float, tol: Optional[float] = None, max_terms: Optional[int] = None,
                 margin: Optional[float] = None):
        super().__init__(margin)
        if not 0.0 <= alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
        settings = FrameliumSettings.default
        self._alpha = float(alpha)
        self._tol = settings.series_tol if tol is None else tol
        self._max_terms = settings.series_max_terms if max_terms is None else max_terms
        self._max_ratio = settings.series_max_ratio

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def tol(self) -> float:
        return self._tol

    @property
    def max_terms(self) -> int:
        return self._max_terms

    @staticmethod
    def dirichlet_weight(n: int, alpha: float) -> float:
        """w_n = ||z^n||^2; w_0 = 1, w_n = n^2 Gamma(n) Gamma(2 - alpha) / Gamma(n + 2 - alpha)."""
        from .__impl__ import dirichlet_weight
        return dirichlet_weight(n, alpha)

    @staticmethod
    def weight_quadrature_oracle(n: int, alpha: float) -> float:
        """w_n by adaptive radial quadrature of n^2 * 2 int_0^1 r^(2n-1) (1 - r^2)^(1 - alpha) dr."""
        from .__impl__ import weight_quadrature_oracle
        return weight_quadrature_oracle(n, alpha)


class DMuSpace(KernelSpace):
    """
    D(mu) for mu a finite sum of point masses on the circle, truncated to degree N.

    ||f||^2 = |f(0)|^2 + int |f'|^2 P_mu dA. Monomials are not orthogonal here;
    the kernel of the polynomials of degree <= N is e(lam)^H G^{-1} e(z) with
    G the monomial Gram matrix and e(z) = (1, z, ..., z^N).
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Harmonically weighted Dirichlet spaces D(mu), truncated",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.ThreadSafe,
    )

    name: ClassVar[str] = "dirichlet_mu"

    def __init__(self, measure: PointMassMeasure, truncation: Optional[int] = None, margin: Optional[float] = None):
        super().__init__(margin)
        settings = FrameliumSettings.default
        self._measure = measure
        self._truncation = settings.dmu_truncation if truncation is None else int(truncation)
        if self._truncation < 0:
            raise DomainError(f"truncation degree must be non-negative, got {self._truncation}")
        self._condition_limit = settings.condition_limit
        self._inverse: Optional[Tuple[np.ndarray, float]] = None
        self._inverse_lock = threading.Lock()

    @property
    def measure(self) -> PointMassMeasure:
        return self._measure

    @property
    def truncation(self) -> int:
        return self._truncation

    @staticmethod
    def dmu_gram_entry(n: int, m: int, measure: PointMassMeasure) -> complex:
        """<z^n, z^m> = [n = m = 0] + min(n, m) sum_j c_j zeta_j^(n - m)."""
        if n < 0 or m < 0:
            raise ValueError(f"monomial degrees must be non-negative, got ({n}, {m})")
        value = 1.0 + 0j if n == 0 and m == 0 else 0j
        k = min(n, m)
        if k:
            value += k * measure.moment(n - m)
        return value

    @staticmethod
    def dmu_gram_oracle(n: int, m: int, measure: PointMassMeasure) -> complex:
        """<z^n, z^m> by polar quadrature of n m int z^(n-1) conj(z)^(m-1) P_mu dA."""
        from .__impl__ import dmu_gram_oracle
        return dmu_gram_oracle(n, m, measure)

    @abstractmethod
    def gram_matrix(self) -> HermitianMatrix:
        """(N + 1) x (N + 1) monomial Gram matrix."""

    @property
    @abstractmethod
    def condition_number(self) -> float:
        """Spectral condition number of the Gram matrix."""

    @abstractmethod
    def coefficients(self, lam: PointLike) -> np.ndarray:
        """Monomial coefficients of k_lam in the truncated space."""

    @abstractmethod
    def inner(self, f: Sequence[complex], g: Sequence[complex]) -> complex:
        """<f, g> for polynomials given by their monomial coefficients (degree <= N)."""


class KernelGramian(GramianProvider):
    """Gramian of the normalized kernels k^_{lam_n} at a finite point list."""

    __class_type__ = Header.ClassType.Bundle

    def __init__(self, space: KernelSpace, points: Sequence[PointLike]):
        super().__init__()
        if len(points) == 0:
            raise DomainError("a kernel Gramian needs at least one point")
        self._space = space
        self._points = tuple(complex(p) for p in space.check_all(points))

    @property
    def space(self) -> KernelSpace:
        return self._space

    @property
    def points(self) -> Tuple[complex, ...]:
        return self._points

    @property
    def length(self) -> int:
        return len(self._points)

    @property
    def normalized(self) -> bool:
        return True

    @property
    def name(self) -> str:
        return f"{self._space.name}-kernels"

    def entry(self, n: int, m: int) -> complex:
        self.check_index(n)
        self.check_index(m)
        if n == m:
            return 1.0 + 0j
        return self._space.normalized_gram(self._points[n - 1], self._points[m - 1])

    def section_array(self, size: int) -> np.ndarray:
        self.check_size(size)
        return self._space.normalized_gram_matrix(self._points[:size])

    def restrict(self, indices: Sequence[int]) -> "KernelGramian":
        for i in indices:
            self.check_index(i)
        return KernelGramian(self._space, [self._points[i - 1] for i in indices])
