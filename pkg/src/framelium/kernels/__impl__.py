from .__header__ import (
    HardySpace, DirichletAlphaSpace, DMuSpace, PointMassMeasure, CNPDiagnostic,
    PointLike, one_minus_conj_product,
)

from framelium.core.config import FrameliumSettings
from framelium.core.errors import ConvergenceError, DimensionError, DomainError, IllConditionedError, KernelVanishingError
from framelium.core.header import dlock
from framelium.spectral import HermitianMatrix, SpectralCore

import functools
import math
from typing import Sequence, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate
from scipy.special import gammaln

import logging
logger = logging.getLogger(__name__)

# D(mu) quadrature oracle: radial Gauss-Legendre x uniform rings
_RADIAL_NODES = 200
_MIN_ANGULAR_NODES = 512
_MAX_SHIFT = 64


class _PickDiagnostics:
    """Pick-type matrix and its smallest eigenvalue, shared by every space."""

    def cnp_matrix(self, omega0: PointLike, points: Sequence[PointLike]) -> HermitianMatrix:
        w = np.array([self.check(omega0)], dtype=complex)
        z = self.check_all(points)
        k_zz = self.kernel_matrix(z, z)              # k(l_i, z_j)
        k_wz = self.kernel_matrix(w, z)[0]           # k(w0, z_j)
        k_zw = self.kernel_matrix(z, w)[:, 0]        # k(l_i, w0)
        k_ww = self.kernel_matrix(w, w)[0, 0].real

        diag = np.real(np.diag(k_zz))
        vanishing = np.abs(k_zz) <= 1e-14 * np.sqrt(np.outer(diag, diag))
        if np.any(vanishing):
            i, j = (int(v) for v in np.argwhere(vanishing)[0])
            raise KernelVanishingError(
                f"{self.name} kernel vanishes at ({z[i]}, {z[j]}); the nonvanishing condition fails",
                (complex(z[i]), complex(z[j])),
            )
        # one quotient per entry, so F vanishes exactly at l = z = w0
        denom = k_ww * k_zz
        f = (denom - np.outer(k_zw, k_wz)) / denom
        tol = FrameliumSettings.default.hermitian_tol * max(1.0, float(np.max(np.abs(f))))
        return HermitianMatrix(f, tol=tol)

    def cnp_diagnostic(self, omega0: PointLike, points: Sequence[PointLike]) -> CNPDiagnostic:
        f = self.cnp_matrix(omega0, points)
        lambda_min = SpectralCore.default.eig_hermitian(f)[0]
        psd = lambda_min >= -FrameliumSettings.default.psd_slack
        if not psd:
            logger.warning(f"{self.name}: Pick-type sample at omega0={complex(omega0)} has lambda_min {lambda_min:.3e}")
        return CNPDiagnostic(
            space=self.name,
            omega0=complex(omega0),
            size=f.n,
            lambda_min=lambda_min,
            psd=psd,
            certified=psd and self.is_cnp_certified,
        )


class HardySpaceImpl(_PickDiagnostics, HardySpace):
    """Kernel and normalized kernels in a form that stays accurate as |z| -> 1."""
    __class_type__ = HardySpace.ClassType.Impl

    @property
    def is_cnp_certified(self) -> bool:
        return True

    def kernel_matrix(self, lambdas, zs) -> np.ndarray:
        lam = self.check_all(lambdas)
        z = self.check_all(zs)
        return 1.0 / one_minus_conj_product(lam[:, None], z[None, :])

    def kernel_norm_sq(self, lam: PointLike) -> float:
        r = abs(self.check(lam))
        return 1.0 / ((1.0 - r) * (1.0 + r))

    def normalized_gram_matrix(self, points) -> np.ndarray:
        z = self.check_all(points)
        r = np.abs(z)
        s = np.sqrt((1.0 - r) * (1.0 + r))
        g = np.outer(s, s) / one_minus_conj_product(z[:, None], z[None, :])
        np.fill_diagonal(g, 1.0)
        return g


@functools.lru_cache(maxsize=16)
def _inverse_weights(alpha: float, count: int) -> np.ndarray:
    """1 / w_n for n = 0 .. count - 1."""
    n = np.arange(1, count, dtype=float)
    log_w = 2.0 * np.log(n) + gammaln(n) + gammaln(2.0 - alpha) - gammaln(n + 2.0 - alpha)
    inv = np.concatenate(([1.0], np.exp(-log_w)))
    inv.setflags(write=False)
    return inv


def dirichlet_weight(n: int, alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return 1.0
    return float(n * n * math.exp(gammaln(n) + gammaln(2.0 - alpha) - gammaln(n + 2.0 - alpha)))


def weight_quadrature_oracle(n: int, alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    if not 0 <= n <= 200:
        raise ValueError(f"n must lie in 0..200, got {n}")
    if n == 0:
        return 1.0
    # (1 - r^2)^(1 - alpha) = (1 - r)^(1 - alpha) (1 + r)^(1 - alpha); the first factor is the quad weight
    value, _ = integrate.quad(
        lambda r: r ** (2 * n - 1) * (1.0 + r) ** (1.0 - alpha),
        0.0, 1.0, weight="alg", wvar=(0.0, 1.0 - alpha),
        epsabs=1e-14, epsrel=1e-12, limit=200,
    )
    return float(n * n * 2.0 * value)


class DirichletAlphaSpaceImpl(_PickDiagnostics, DirichletAlphaSpace):
    """Power-series kernel summed by Horner's rule up to a geometric tail bound."""
    __class_type__ = DirichletAlphaSpace.ClassType.Impl

    def _terms_needed(self, radius: float) -> int:
        """Smallest n with |x|^(n+1) / (w_{n+1} (1 - |x|)) < tol."""
        if radius == 0.0:
            return 1
        inv = _inverse_weights(self._alpha, self._max_terms + 1)
        n = np.arange(self._max_terms)
        log_tail = (n + 1) * math.log(radius) + np.log(inv[n + 1]) - math.log1p(-radius)
        ok = np.flatnonzero(log_tail < math.log(self._tol))
        if ok.size == 0:
            raise ConvergenceError(
                f"D_alpha kernel series for |x| = {radius:.6f} needs more than {self._max_terms} terms"
            )
        return int(ok[0]) + 1

    def kernel_matrix(self, lambdas, zs) -> np.ndarray:
        lam = self.check_all(lambdas)
        z = self.check_all(zs)
        x = np.conj(lam)[:, None] * z[None, :]
        radius = float(np.max(np.abs(x)))
        if radius > self._max_ratio:
            raise DomainError(f"|conj(lambda) z| = {radius:.6f} exceeds {self._max_ratio}; points are too close to the circle")
        terms = self._terms_needed(radius)
        inv = _inverse_weights(self._alpha, self._max_terms + 1)
        acc = np.full(x.shape, inv[terms - 1], dtype=complex)
        for k in range(terms - 2, -1, -1):
            acc = acc * x + inv[k]
        logger.debug(f"D_alpha(alpha={self._alpha}) kernel: {terms} terms for |x| <= {radius:.4f}")
        return acc


@functools.lru_cache(maxsize=8)
def _ring_moments(measure: PointMassMeasure) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Radial nodes, weights and angular Fourier moments of P_mu.

    moments[i, d + _MAX_SHIFT] is the mean of P_mu(r_i e^{it}) e^{idt} over a ring whose
    node count grows like 1 / (1 - r_i), so the peak of the Poisson kernel is resolved.
    """
    x, w = leggauss(_RADIAL_NODES)
    radii = 0.5 * (x + 1.0)
    weights = 0.5 * w
    shifts = np.arange(-_MAX_SHIFT, _MAX_SHIFT + 1)
    moments = np.empty((radii.size, shifts.size), dtype=complex)
    for i, r in enumerate(radii):
        count = max(_MIN_ANGULAR_NODES, math.ceil(36.0 / (1.0 - r)))
        count = 1 << (count - 1).bit_length()
        theta = 2.0 * np.pi * np.arange(count) / count
        samples = measure.poisson_array(r * np.exp(1j * theta))
        moments[i] = np.fft.ifft(samples)[shifts % count]
    return radii, weights, moments


def dmu_gram_oracle(n: int, m: int, measure: PointMassMeasure) -> complex:
    if not (0 <= n <= 30 and 0 <= m <= 30):
        raise ValueError(f"oracle degrees must lie in 0..30, got ({n}, {m})")
    value = 1.0 + 0j if n == 0 and m == 0 else 0j
    if n == 0 or m == 0:
        return value
    radii, weights, moments = _ring_moments(measure)
    # dA / pi in polar form: the ring mean carries 2 pi, the area normalization 1 / pi
    radial = weights * 2.0 * radii ** (n + m - 1) * moments[:, n - m + _MAX_SHIFT]
    return value + n * m * complex(np.sum(radial))


class DMuSpaceImpl(_PickDiagnostics, DMuSpace):
    """Truncated kernel through the spectral inverse of the monomial Gram matrix."""
    __class_type__ = DMuSpace.ClassType.Impl

    def gram_matrix(self) -> HermitianMatrix:
        size = self._truncation + 1
        n = np.arange(size)
        shift = n[:, None] - n[None, :]
        moments = np.array([self._measure.moment(d) for d in range(-size + 1, size)], dtype=complex)
        g = np.minimum(n[:, None], n[None, :]) * moments[shift + size - 1]
        g[0, 0] += 1.0
        return HermitianMatrix(g)

    @dlock("_inverse_lock", "_inverse")
    def _gram_inverse(self) -> Tuple[np.ndarray, float]:
        values, vectors = SpectralCore.default.eigh(self.gram_matrix())
        lo, hi = float(values[0]), float(values[-1])
        condition = hi / lo if lo > 0 else math.inf
        logger.debug(f"D(mu) Gram N={self._truncation}: eigenvalues [{lo:.3e}, {hi:.3e}], condition {condition:.3e}")
        if condition > self._condition_limit:
            raise IllConditionedError(
                f"D(mu) Gram matrix of degree {self._truncation} has condition number {condition:.3e} "
                f"above {self._condition_limit:.1e}",
                condition,
            )
        inverse = (vectors / values) @ vectors.conj().T
        inverse = 0.5 * (inverse + inverse.conj().T)
        inverse.setflags(write=False)
        return inverse, condition

    @property
    def condition_number(self) -> float:
        return self._gram_inverse()[1]

    def _powers(self, points: np.ndarray) -> np.ndarray:
        return np.vander(points, self._truncation + 1, increasing=True)

    def coefficients(self, lam: PointLike) -> np.ndarray:
        e = self._powers(np.array([self.check(lam)]))[0]
        inverse, _ = self._gram_inverse()
        return np.conj(inverse @ e)

    def inner(self, f: Sequence[complex], g: Sequence[complex]) -> complex:
        size = self._truncation + 1
        a = np.asarray(f, dtype=complex).reshape(-1)
        b = np.asarray(g, dtype=complex).reshape(-1)
        if a.size > size or b.size > size:
            raise DimensionError(f"polynomials of degree above {self._truncation} are outside the truncated space")
        a = np.pad(a, (0, size - a.size))
        b = np.pad(b, (0, size - b.size))
        return complex(a @ self.gram_matrix().array @ np.conj(b))

    def kernel_matrix(self, lambdas, zs) -> np.ndarray:
        lam = self.check_all(lambdas)
        z = self.check_all(zs)
        inverse, _ = self._gram_inverse()
        return np.conj(self._powers(lam)) @ inverse @ self._powers(z).T
