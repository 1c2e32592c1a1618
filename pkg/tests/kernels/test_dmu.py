import unittest
import logging
from pathlib import Path
import sys

import numpy as np
from pydantic import ValidationError

project_root = Path(__file__).resolve().parent.parent.parent
for path in (project_root, project_root / "src"):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from framelium.core.config import FrameliumSettings
from framelium.core.errors import DomainError, IllConditionedError
from framelium.kernels import DMuSpace, PointMass, PointMassMeasure

logging.basicConfig(level=logging.DEBUG, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

DELTA_ONE = PointMassMeasure.delta(1.0)
DELTA_I = PointMassMeasure.delta(1j)
SYMMETRIC = PointMassMeasure.of([(1.0, 0.5), (-1.0, 0.5)])


class TestPointMassMeasure(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(ValidationError):
            PointMass(zeta=0.9, mass=1.0)
        with self.assertRaises(ValidationError):
            PointMass(zeta=1.0, mass=0.0)
        with self.assertRaises(ValidationError):
            PointMassMeasure(masses=())
        self.assertEqual(PointMass(zeta=[0.0, 1.0], mass=2.0).zeta, 1j)

    def test_poisson(self):
        self.assertAlmostEqual(SYMMETRIC.poisson(0), 1.0, delta=1e-15)
        self.assertAlmostEqual(PointMassMeasure.of([(1j, 2.0), (-1, 0.5)]).poisson(0), 2.5, delta=1e-15)
        self.assertAlmostEqual(DELTA_ONE.poisson(0.5), 3.0, delta=1e-14)
        for r in (0.1, 0.5, 0.9):
            self.assertAlmostEqual(DELTA_ONE.poisson(r), (1 + r) / (1 - r), delta=1e-12 * (1 + r) / (1 - r))

    def test_moments(self):
        self.assertAlmostEqual(DELTA_ONE.moment(5), 1.0, delta=1e-15)
        self.assertAlmostEqual(DELTA_I.moment(-1), -1j, delta=1e-15)
        self.assertAlmostEqual(SYMMETRIC.moment(1), 0.0, delta=1e-15)
        self.assertAlmostEqual(SYMMETRIC.moment(2), 1.0, delta=1e-15)
        self.assertEqual(SYMMETRIC.total_mass, 1.0)


class TestDMuGram(unittest.TestCase):

    def test_entry_examples(self):
        self.assertEqual(DMuSpace.dmu_gram_entry(0, 0, DELTA_I), 1.0)
        self.assertEqual(DMuSpace.dmu_gram_entry(0, 3, DELTA_ONE), 0.0)
        self.assertAlmostEqual(DMuSpace.dmu_gram_entry(2, 3, DELTA_ONE), 2.0, delta=1e-15)
        self.assertAlmostEqual(DMuSpace.dmu_gram_entry(1, 2, DELTA_I), -1j, delta=1e-15)
        self.assertAlmostEqual(DMuSpace.dmu_gram_entry(2, 1, DELTA_I), 1j, delta=1e-15)
        with self.assertRaises(ValueError):
            DMuSpace.dmu_gram_entry(-1, 0, DELTA_ONE)

    def test_entries_against_oracle(self):
        for measure in (DELTA_ONE, DELTA_I, SYMMETRIC):
            for n in range(11):
                for m in range(11):
                    with self.subTest(measure=measure.zetas.tolist(), n=n, m=m):
                        self.assertAlmostEqual(DMuSpace.dmu_gram_entry(n, m, measure),
                                               DMuSpace.dmu_gram_oracle(n, m, measure), delta=1e-6)

    def test_oracle_range(self):
        with self.assertRaises(ValueError):
            DMuSpace.dmu_gram_oracle(31, 0, DELTA_ONE)
        self.assertEqual(DMuSpace.dmu_gram_oracle(0, 4, DELTA_I), 0.0)

    def test_gram_matrix(self):
        space = DMuSpace(DELTA_I, truncation=5)
        g = space.gram_matrix()
        self.assertEqual(g.n, 6)
        for n in range(6):
            for m in range(6):
                self.assertAlmostEqual(g.array[n, m], DMuSpace.dmu_gram_entry(n, m, DELTA_I), delta=1e-14)
        self.assertGreater(space.condition_number, 1.0)


class TestDMuKernel(unittest.TestCase):

    def test_constant_kernel_at_origin(self):
        for truncation in (1, 4, 12):
            space = DMuSpace(DELTA_ONE, truncation=truncation)
            for z in (0.0, 0.5, -0.3 + 0.4j):
                self.assertAlmostEqual(space.kernel(0, z), 1.0, delta=1e-12)

    def test_reproduces_polynomials(self):
        rng = np.random.default_rng(12)
        for measure in (DELTA_ONE, DELTA_I, SYMMETRIC):
            space = DMuSpace(measure, truncation=8)
            for _ in range(10):
                degree = int(rng.integers(0, 9))
                f = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
                lam = 0.8 * np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0, 2 * np.pi))
                expected = np.polynomial.polynomial.polyval(lam, f)
                self.assertAlmostEqual(space.inner(f, space.coefficients(lam)), expected, delta=1e-8 * max(1.0, abs(expected)))

    def test_kernel_is_the_coefficient_series(self):
        space = DMuSpace(DELTA_I, truncation=6)
        lam, z = 0.3 + 0.5j, -0.2 + 0.1j
        c = space.coefficients(lam)
        self.assertAlmostEqual(space.kernel(lam, z), np.polynomial.polynomial.polyval(z, c), delta=1e-12)
        self.assertAlmostEqual(space.kernel(z, lam), np.conj(space.kernel(lam, z)), delta=1e-12)
        self.assertAlmostEqual(space.kernel_norm_sq(lam), space.inner(c, c).real, delta=1e-10)

    def test_diagonal_grows_with_truncation(self):
        for measure in (DELTA_ONE, SYMMETRIC):
            for lam in (0.5, 0.3 + 0.4j, -0.6j):
                values = [DMuSpace(measure, truncation=n).kernel_norm_sq(lam) for n in range(0, 16)]
                for before, after in zip(values, values[1:]):
                    self.assertGreaterEqual(after, before - 1e-12)

    def test_inner_rejects_high_degree(self):
        space = DMuSpace(DELTA_ONE, truncation=2)
        with self.assertRaises(ValueError):
            space.inner([1, 2, 3, 4], [1])

    def test_ill_conditioned(self):
        FrameliumSettings.set_default(FrameliumSettings(condition_limit=2.0))
        try:
            space = DMuSpace(DELTA_ONE, truncation=3)
        finally:
            FrameliumSettings.reset_default()
        with self.assertRaises(IllConditionedError) as ctx:
            space.kernel(0.1, 0.2)
        self.assertGreater(ctx.exception.condition, 2.0)

    def test_domain(self):
        space = DMuSpace(DELTA_ONE, truncation=4)
        with self.assertRaises(DomainError):
            space.kernel(1 - 1e-10, 0)
        with self.assertRaises(DomainError):
            DMuSpace(DELTA_ONE, truncation=-1)

    def test_pick_diagnostic_runs(self):
        diag = DMuSpace(SYMMETRIC, truncation=10).cnp_diagnostic(0.0, [0.1, 0.3j, -0.2])
        self.assertEqual(diag.space, "dirichlet_mu")
        self.assertFalse(diag.certified)


if __name__ == '__main__':
    unittest.main()
