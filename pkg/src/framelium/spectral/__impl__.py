from .__header__ import SpectralCore, HermitianMatrix, ArrayLike, as_finite_square

from framelium.core.errors import ConvergenceError, DimensionError

import math
from typing import List, Optional, Tuple, Union

import numpy as np

import logging
logger = logging.getLogger(__name__)


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.sqrt(max(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2), 0.0)))


class SpectralCoreImpl(SpectralCore):
    """
    Cyclic Jacobi with complex Hermitian rotations.

    Each rotation first removes the phase of the pivot A[p,q] and then applies a
    real Givens rotation, so the pivot pair is zeroed exactly and the diagonal
    stays real. Sweeps run until the off-diagonal Frobenius norm drops below
    tol * ||A||_F.
    """
    __class_type__ = SpectralCore.ClassType.Impl

    def eig_hermitian(self, m: Union[HermitianMatrix, ArrayLike]) -> List[float]:
        values, _ = self._solve(self.as_hermitian(m), want_vectors=False)
        return [float(x) for x in values]

    def eigh(self, m: Union[HermitianMatrix, ArrayLike]) -> Tuple[np.ndarray, np.ndarray]:
        values, vectors = self._solve(self.as_hermitian(m), want_vectors=True)
        return values, vectors

    def schur_row_bound(self, m: Union[HermitianMatrix, ArrayLike]) -> float:
        h = self.as_hermitian(m)
        return float(np.max(np.sum(np.abs(h.array), axis=1)))

    def singular_extremes(self, a: ArrayLike) -> Tuple[float, float]:
        a = as_finite_square(a, "matrix")
        gram = HermitianMatrix(a.conj().T @ a, tol=np.inf)
        values, _ = self._solve(gram, want_vectors=False)
        lo, hi = max(float(values[0]), 0.0), max(float(values[-1]), 0.0)
        return math.sqrt(lo), math.sqrt(hi)

    def _solve(self, h: HermitianMatrix, want_vectors: bool) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        n = h.n
        if n > self._max_dimension:
            raise DimensionError(f"dimension {n} exceeds the configured maximum {self._max_dimension}")

        a = np.array(h.array, dtype=complex)
        v = np.eye(n, dtype=complex) if want_vectors else None
        threshold = self._tol * h.frobenius
        # pivots this small cannot move the off-diagonal norm across the threshold
        negligible = 1e-3 * threshold / n

        sweep = 0
        off = _off_diagonal_norm(a)
        while off > threshold:
            if sweep >= self._max_sweeps:
                raise ConvergenceError(
                    f"Jacobi did not converge in {self._max_sweeps} sweeps "
                    f"(off-diagonal norm {off:.3e}, target {threshold:.3e})"
                )
            for p in range(n - 1):
                for q in range(p + 1, n):
                    self._rotate(a, v, p, q, negligible)
            sweep += 1
            off = _off_diagonal_norm(a)
            logger.debug(f"sweep {sweep}: off-diagonal norm {off:.3e}")

        values = np.real(np.diag(a)).copy()
        order = np.argsort(values, kind="stable")
        values = values[order]
        if v is not None:
            v = v[:, order]
        logger.debug(f"Jacobi n={n} converged after {sweep} sweeps")
        return values, v

    @staticmethod
    def _rotate(a: np.ndarray, v: Optional[np.ndarray], p: int, q: int, negligible: float) -> None:
        apq = a[p, q]
        mag = abs(apq)
        if mag <= negligible:
            return
        g = apq / mag
        gc = g.conjugate()
        app = a[p, p].real
        aqq = a[q, q].real
        theta = (aqq - app) / (2.0 * mag)
        t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
        c = 1.0 / math.hypot(t, 1.0)
        s = t * c

        # A <- A U
        col_p = a[:, p].copy()
        col_q = a[:, q].copy()
        a[:, p] = c * col_p - (s * gc) * col_q
        a[:, q] = s * col_p + (c * gc) * col_q
        # A <- U^H A
        row_p = a[p, :].copy()
        row_q = a[q, :].copy()
        a[p, :] = c * row_p - (s * g) * row_q
        a[q, :] = s * row_p + (c * g) * row_q

        a[p, q] = 0.0
        a[q, p] = 0.0
        a[p, p] = app - t * mag
        a[q, q] = aqq + t * mag

        if v is not None:
            vp = v[:, p].copy()
            vq = v[:, q].copy()
            v[:, p] = c * vp - (s * gc) * vq
            v[:, q] = s * vp + (c * gc) * vq
