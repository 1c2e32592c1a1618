from .__header__ import ExplicitSequence, TransferBounds

from framelium.core.config import FrameliumSettings
from framelium.core.errors import DimensionError, NonFiniteError, SingularOperatorError, ZeroVectorError
from framelium.spectral import HermitianMatrix, SpectralCore

from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

import logging
logger = logging.getLogger(__name__)


def _max_off_diagonal(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    return float(np.max(np.abs(a - np.diag(np.diag(a)))))


class ExplicitSequenceImpl(ExplicitSequence):
    __class_type__ = ExplicitSequence.ClassType.Impl

    def normalize(self) -> ExplicitSequence:
        tol = FrameliumSettings.default.zero_vector_tol
        norms = self.norms
        small = np.flatnonzero(norms < tol)
        if small.size:
            index = int(small[0])
            raise ZeroVectorError(index + 1, float(norms[index]))
        return ExplicitSequence(self._x / norms[:, None])

    def gram_entry(self, n: int, m: int) -> complex:
        self.check_index(n)
        self.check_index(m)
        # vdot conjugates its first argument
        return complex(np.vdot(self._x[m - 1], self._x[n - 1]))

    def section_array(self, size: int) -> np.ndarray:
        self.check_size(size)
        x = self._x[:size]
        return x @ x.conj().T

    def synthesis(self, coeffs: Sequence[complex]) -> np.ndarray:
        a = np.asarray(coeffs, dtype=complex).reshape(-1)
        if a.size > self.length:
            raise DimensionError(f"{a.size} coefficients for a sequence of length {self.length}")
        if not np.all(np.isfinite(a)):
            raise NonFiniteError("coefficients must be finite")
        return a @ self._x[:a.size]

    def analysis_coeffs(self, x: Sequence[complex]) -> List[complex]:
        v = np.asarray(x, dtype=complex).reshape(-1)
        if v.size != self.dimension:
            raise DimensionError(f"vector of dimension {v.size} given, sequence lives in dimension {self.dimension}")
        return [complex(c) for c in self._x.conj() @ v]

    def _checked_operator(self, a) -> Tuple[np.ndarray, float, float]:
        op = np.array(a, dtype=complex)
        if op.shape != (self.dimension, self.dimension):
            raise DimensionError(f"operator must be {self.dimension}x{self.dimension}, got shape {op.shape}")
        if not np.all(np.isfinite(op)):
            raise NonFiniteError("operator has non-finite entries")
        sigma_min, sigma_max = SpectralCore.default.singular_extremes(op)
        tol = FrameliumSettings.default.singular_tol
        if sigma_min <= tol:
            raise SingularOperatorError(f"operator is numerically singular (sigma_min {sigma_min:.3e} <= {tol:.1e})", sigma_min)
        return op, sigma_min, sigma_max

    def apply_invertible(self, a) -> ExplicitSequence:
        op, _, _ = self._checked_operator(a)
        # rows are vectors: (A x_n)^T = x_n^T A^T
        return ExplicitSequence(self._x @ op.T)

    def transfer_bounds(self, a, size: Optional[int] = None) -> TransferBounds:
        size = self.length if size is None else size
        self.check_size(size)
        op, sigma_min, sigma_max = self._checked_operator(a)
        kappa_sq = (sigma_max / sigma_min) ** 2

        solver = SpectralCore.default
        before = self.normalize().section_array(size)
        after = ExplicitSequence(self._x @ op.T).normalize().section_array(size)
        original = solver.summary(HermitianMatrix(before))
        image = solver.summary(HermitianMatrix(after))
        lo, hi = original.lambda_min, original.lambda_max

        bounds = TransferBounds(
            size=size,
            sigma_min=sigma_min,
            sigma_max=sigma_max,
            lambda_min=lo,
            lambda_max=hi,
            lower=lo / kappa_sq,
            upper=hi * kappa_sq,
            image_lambda_min=image.lambda_min,
            image_lambda_max=image.lambda_max,
            separation=_max_off_diagonal(before),
            image_separation=_max_off_diagonal(after),
        )
        logger.debug(f"transfer bounds N={size}: kappa^2={kappa_sq:.4g}, window [{bounds.lower:.4g}, {bounds.upper:.4g}]")
        return bounds

    def repeated_indices(self) -> List[Tuple[int, int]]:
        tol = FrameliumSettings.default.zero_vector_tol
        pairs = []
        for n in range(self.length):
            diff = np.max(np.abs(self._x[n + 1:] - self._x[n]), axis=1) if n + 1 < self.length else np.empty(0)
            for k in np.flatnonzero(diff <= tol):
                pairs.append((n + 1, n + 2 + int(k)))
        return pairs
