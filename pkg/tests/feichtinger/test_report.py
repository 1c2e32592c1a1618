import unittest
import logging
import math
from pathlib import Path
import sys

import numpy as np

project_root = Path(__file__).resolve().parent.parent.parent
for path in (project_root, project_root / "src"):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from framelium.core.errors import DegenerateSectionError, DimensionError
from framelium.feichtinger import FINITE_SECTION_CAVEAT, Feichtinger
from framelium.kernels import HardySpace
from framelium.sequences import ExplicitSequence, MatrixGramian, TridiagExampleProvider, TridiagMode
from framelium.spectral import SpectralCore
from framelium.manifest import Manifest

logging.basicConfig(level=logging.DEBUG, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

SIGNED = [[1, 0.5, -0.5], [0.5, 1, 0.5], [-0.5, 0.5, 1]]


class TestProfiles(unittest.TestCase):

    def setUp(self):
        self.service = Feichtinger(solver=SpectralCore(), max_workers=2)

    def test_orthonormal(self):
        basis = ExplicitSequence(np.eye(6))
        for summary in self.service.riesz_profile(basis, [2, 4, 6]):
            self.assertAlmostEqual(summary.lambda_min, 1.0, delta=1e-15)
            self.assertAlmostEqual(summary.lambda_max, 1.0, delta=1e-15)
        self.assertEqual(self.service.separation_constant(basis, 6), 0.0)

    def test_tridiagonal_closed_form(self):
        provider = TridiagExampleProvider(TridiagMode.Centered, half_width=60)
        profile = self.service.riesz_profile(provider, [10, 100])
        self.assertEqual([s.n for s in profile], [10, 100])
        for summary in profile:
            lo, hi = TridiagExampleProvider.closed_form_extremes(summary.n)
            self.assertAlmostEqual(summary.lambda_min, lo, delta=1e-9)
            self.assertAlmostEqual(summary.lambda_max, hi, delta=1e-9)
        self.assertLess(profile[-1].lambda_min, 5e-4)

    def test_extremes_monotone_in_section_size(self):
        rng = np.random.default_rng(77)
        raw = rng.normal(size=(24, 12)) + 1j * rng.normal(size=(24, 12))
        points = list(0.9 * np.sqrt(rng.uniform(size=20)) * np.exp(2j * np.pi * rng.uniform(size=20)))
        providers = [ExplicitSequence(raw).normalize(), HardySpace().gramian(points)]
        for provider in providers:
            with self.subTest(provider=provider.name):
                profile = self.service.riesz_profile(provider, list(range(1, provider.length + 1)))
                for smaller, larger in zip(profile, profile[1:]):
                    self.assertLessEqual(larger.lambda_min, smaller.lambda_min + 1e-12)
                    self.assertGreaterEqual(larger.lambda_max + 1e-12, smaller.lambda_max)

    def test_profile_sizes(self):
        provider = TridiagExampleProvider()
        with self.assertRaises(DimensionError):
            self.service.riesz_profile(provider, [20, 10])
        with self.assertRaises(DimensionError):
            self.service.riesz_profile(provider, [])
        with self.assertRaises(DimensionError):
            self.service.riesz_profile(ExplicitSequence(np.eye(3)), [2, 4])

    def test_worker_count_follows_solver_thread_safety(self):
        class SerialSolver:
            __manifest__ = Manifest(location=Manifest.Location(module="serial"),
                                    threadSafety=Manifest.ThreadSafety.Unsafe)

        self.assertEqual(self.service._workers(), 2)
        self.assertEqual(Feichtinger(solver=SerialSolver(), max_workers=8)._workers(), 1)

    def test_separation_examples(self):
        self.assertEqual(self.service.separation_constant(TridiagExampleProvider(), 20), 0.5)
        with self.assertRaises(DimensionError):
            self.service.separation_constant(TridiagExampleProvider(), 1)


class TestBesselEstimates(unittest.TestCase):

    def setUp(self):
        self.service = Feichtinger.default

    def test_identity(self):
        basis = ExplicitSequence(np.eye(4))
        self.assertEqual(self.service.bessel_estimate(basis, 4, Feichtinger.Mode.Schur), 1.0)
        self.assertAlmostEqual(self.service.bessel_estimate(basis, 4, Feichtinger.Mode.Spectral), 1.0, delta=1e-15)

    def test_tridiagonal(self):
        provider = TridiagExampleProvider()
        self.assertEqual(self.service.bessel_estimate(provider, 3), 2.0)
        self.assertAlmostEqual(self.service.bessel_estimate(provider, 100, Feichtinger.Mode.Spectral),
                               1 + math.cos(math.pi / 101), delta=1e-9)


class TestAbsGramRatio(unittest.TestCase):

    def setUp(self):
        self.service = Feichtinger.default

    def test_nonnegative_gramian(self):
        self.assertAlmostEqual(self.service.abs_gram_ratio(TridiagExampleProvider(), 20), 1.0, delta=1e-12)

    def test_signed_example(self):
        self.assertAlmostEqual(self.service.abs_gram_ratio(MatrixGramian(SIGNED), 3), 4 / 3, delta=1e-9)

    def test_unitary_phase(self):
        self.assertAlmostEqual(self.service.abs_gram_ratio(MatrixGramian([[1, 0.5j], [-0.5j, 1]]), 2), 1.0, delta=1e-12)

    def test_degenerate(self):
        with self.assertRaises(DegenerateSectionError):
            self.service.abs_gram_ratio(MatrixGramian(np.zeros((2, 2))), 2)


class TestPartitionReport(unittest.TestCase):

    def setUp(self):
        self.service = Feichtinger.default

    def test_tridiagonal_example(self):
        provider = TridiagExampleProvider(TridiagMode.Centered, half_width=50)
        report = self.service.separated_partition_report(provider, 101, 0.5, [10, 50])
        self.assertEqual(report.partition.class_count, 1)
        self.assertEqual(report.separation, 0.5)
        self.assertTrue(report.separated)
        self.assertEqual(report.max_degree, 0)
        self.assertEqual(report.bessel_schur, 2.0)
        self.assertEqual(report.degree_bound, 5)
        self.assertTrue(report.degree_bound_holds)
        self.assertTrue(report.class_count_bound_holds)
        self.assertEqual([s.n for s in report.profile], [10, 50, 101])
        self.assertEqual(report.caveat, FINITE_SECTION_CAVEAT)

        (only,) = report.classes
        self.assertEqual(only.indices, tuple(range(1, 102)))
        self.assertEqual(only.separation, 0.5)
        self.assertTrue(only.gamma_sq_below_tau)
        lo, _ = TridiagExampleProvider.closed_form_extremes(101)
        self.assertAlmostEqual(only.profile[-1].lambda_min, lo, delta=1e-9)
        self.assertLess(only.profile[-1].lambda_min, 5e-4)
        # lambda_min keeps falling with N: the sequence is Bessel but not Riesz
        self.assertFalse(report.stabilized)
        self.assertTrue(any(w.startswith("stabilization not reached") for w in report.warnings))

    def test_orthonormal(self):
        report = self.service.separated_partition_report(ExplicitSequence(np.eye(5)), 5, 0.5, [2, 5])
        self.assertEqual(report.partition.class_count, 1)
        self.assertEqual(report.separation, 0.0)
        self.assertEqual(report.classes[0].separation, 0.0)
        for summary in report.profile:
            self.assertAlmostEqual(summary.lambda_min, 1.0, delta=1e-15)
            self.assertAlmostEqual(summary.lambda_max, 1.0, delta=1e-15)
        self.assertTrue(report.stabilized)
        self.assertEqual(report.warnings, [])

    def test_not_separated_is_reported(self):
        seq = ExplicitSequence([[1, 0], [1, 0], [0, 1]])
        report = self.service.separated_partition_report(seq, 3, 0.5, [3])
        self.assertFalse(report.separated)
        self.assertEqual(report.partition.classes, ((1, 3), (2,)))
        self.assertTrue(any(w.startswith("not separated") for w in report.warnings))
        for report_class in report.classes:
            self.assertTrue(report_class.gamma_sq_below_tau)

    def test_random_sequences(self):
        rng = np.random.default_rng(77)
        for _ in range(20):
            d = int(rng.integers(2, 9))
            length = int(rng.integers(2, 40))
            raw = rng.normal(size=(length, d)) + 1j * rng.normal(size=(length, d))
            report = self.service.separated_partition_report(ExplicitSequence(raw).normalize(), length, 0.5, [5, 10])
            self.assertTrue(report.degree_bound_holds)
            self.assertTrue(report.class_count_bound_holds)
            self.assertTrue(all(c.gamma_sq_below_tau for c in report.classes))
            self.assertEqual(sorted(i for c in report.classes for i in c.indices), list(range(1, length + 1)))

    def test_json_round_trip(self):
        report = self.service.separated_partition_report(TridiagExampleProvider(), 12, 0.5, [4, 8])
        again = type(report).model_validate_json(report.model_dump_json())
        self.assertEqual(again, report)


if __name__ == '__main__':
    unittest.main()
