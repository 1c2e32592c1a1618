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

from framelium.core.errors import DimensionError, IndexRangeError, NonFiniteError, SingularOperatorError, ZeroVectorError
from framelium.sequences import ExplicitSequence, MatrixGramian, SubsequenceGramian
from framelium.spectral import SpectralCore

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def random_unit_sequence(rng: np.random.Generator, length: int, dimension: int) -> ExplicitSequence:
    raw = rng.normal(size=(length, dimension)) + 1j * rng.normal(size=(length, dimension))
    return ExplicitSequence(raw).normalize()


class TestExplicitSequence(unittest.TestCase):

    def test_normalize(self):
        unit = ExplicitSequence([[1, 0], [0, 1j]])
        np.testing.assert_array_equal(unit.normalize().vectors, unit.vectors)
        self.assertTrue(unit.normalized)

        seq = ExplicitSequence([[3, 4]]).normalize()
        np.testing.assert_allclose(seq.vector(1), [0.6, 0.8], atol=1e-15)
        self.assertTrue(seq.normalized)

        with self.assertRaises(ZeroVectorError) as ctx:
            ExplicitSequence([[1, 0], [0, 0], [0, 1e-15]]).normalize()
        self.assertEqual(ctx.exception.index, 2)

    def test_construction_errors(self):
        with self.assertRaises(NonFiniteError):
            ExplicitSequence([[1.0, np.inf]])
        with self.assertRaises(DimensionError):
            ExplicitSequence([1.0, 2.0])
        with self.assertRaises(DimensionError):
            ExplicitSequence(np.zeros((0, 3)))

    def test_gram_entry(self):
        basis = ExplicitSequence(np.eye(3))
        for n in range(1, 4):
            for m in range(1, 4):
                self.assertEqual(basis.gram_entry(n, m), 1.0 if n == m else 0.0)

        seq = ExplicitSequence([[1, 0], [1 / math.sqrt(2), 1 / math.sqrt(2)]])
        self.assertAlmostEqual(seq.gram_entry(1, 2), 1 / math.sqrt(2), delta=1e-15)
        with self.assertRaises(IndexRangeError):
            seq.gram_entry(0, 1)
        with self.assertRaises(IndexRangeError):
            seq.gram_entry(1, 3)

    def test_inner_product_convention(self):
        # linear in the first argument: <x_1, x_2> = sum x_1[k] conj(x_2[k])
        seq = ExplicitSequence([[1j, 0], [1, 0]])
        self.assertEqual(seq.gram_entry(1, 2), 1j)
        self.assertEqual(seq.gram_entry(2, 1), -1j)
        np.testing.assert_allclose(seq.section(2).array, [[1, 1j], [-1j, 1]])

    def test_synthesis_and_analysis(self):
        basis = ExplicitSequence(np.eye(3))
        np.testing.assert_array_equal(basis.synthesis([1]), [1, 0, 0])
        pair = ExplicitSequence([[1, 0, 0], [0, 1, 0]])
        self.assertAlmostEqual(np.linalg.norm(pair.synthesis([1, 1])), math.sqrt(2))

        self.assertEqual(basis.analysis_coeffs([1, 0, 0]), [1, 0, 0])
        self.assertEqual(pair.analysis_coeffs([0, 0, 5]), [0, 0])
        with self.assertRaises(DimensionError):
            pair.synthesis([1, 2, 3])
        with self.assertRaises(DimensionError):
            pair.analysis_coeffs([1, 2])

    def test_synthesis_gramian_identity(self):
        rng = np.random.default_rng(21)
        for _ in range(50):
            seq = random_unit_sequence(rng, int(rng.integers(2, 12)), int(rng.integers(1, 6)))
            a = rng.normal(size=seq.length) + 1j * rng.normal(size=seq.length)
            gram = seq.section(seq.length).array
            lhs = np.linalg.norm(seq.synthesis(a)) ** 2
            rhs = np.vdot(a, gram.T @ a).real
            self.assertAlmostEqual(lhs, rhs, delta=1e-10 * max(1.0, lhs))

    def test_analysis_is_adjoint_of_synthesis(self):
        rng = np.random.default_rng(4)
        seq = random_unit_sequence(rng, 7, 4)
        a = rng.normal(size=7) + 1j * rng.normal(size=7)
        x = rng.normal(size=4) + 1j * rng.normal(size=4)
        # <J a, x> = <a, J* x>
        left = np.vdot(x, seq.synthesis(a))
        right = np.vdot(seq.analysis_coeffs(x), a)
        self.assertAlmostEqual(left, right, delta=1e-12)

    def test_section_is_psd_with_unit_diagonal(self):
        rng = np.random.default_rng(8)
        seq = random_unit_sequence(rng, 20, 5)
        values = SpectralCore.default.eig_hermitian(seq.section(20))
        self.assertGreaterEqual(values[0], -1e-12)
        np.testing.assert_allclose(np.diag(seq.section(20).array).real, 1.0, atol=1e-14)

    def test_repeated_indices(self):
        seq = ExplicitSequence([[1, 0], [0, 1], [1, 0], [1, 0]])
        self.assertEqual(seq.repeated_indices(), [(1, 3), (1, 4), (3, 4)])
        self.assertEqual(ExplicitSequence(np.eye(2)).repeated_indices(), [])


class TestInvertibleImages(unittest.TestCase):

    def test_identity_operator(self):
        seq = ExplicitSequence([[1, 2], [3, 4j]])
        np.testing.assert_array_equal(seq.apply_invertible(np.eye(2)).vectors, seq.vectors)

    def test_operator_applied_to_each_vector(self):
        seq = ExplicitSequence([[1, 0], [0, 1], [1, 1]])
        a = np.array([[2, 1], [0, 1j]])
        image = seq.apply_invertible(a)
        for n in range(1, 4):
            np.testing.assert_allclose(image.vector(n), a @ seq.vector(n))

    def test_scalar_operator_keeps_normalized_gramian(self):
        rng = np.random.default_rng(21)
        seq = random_unit_sequence(rng, 6, 3)
        unit = seq.normalize()
        gram = seq.section_array(6)
        doubled = seq.apply_invertible(2 * np.eye(3)).normalize()
        # scaling by a power of two is exact in floating point
        np.testing.assert_array_equal(doubled.vectors, unit.vectors)
        np.testing.assert_array_equal(doubled.section_array(6), unit.section_array(6))
        rotated = seq.apply_invertible(-0.5j * np.eye(3)).normalize()
        np.testing.assert_allclose(rotated.section_array(6), gram, atol=1e-15)
        tripled = seq.apply_invertible(3 * np.eye(3)).normalize()
        np.testing.assert_allclose(tripled.section_array(6), gram, atol=1e-14)

    def test_diagonal_operator_on_orthonormal_basis(self):
        basis = ExplicitSequence(np.eye(2))
        image = basis.apply_invertible(np.diag([2.0, 1.0]))
        np.testing.assert_array_equal(image.vectors, np.diag([2.0, 1.0]))
        np.testing.assert_array_equal(image.normalize().section_array(2), np.eye(2))

    def test_operator_errors(self):
        seq = ExplicitSequence(np.eye(2))
        with self.assertRaises(SingularOperatorError):
            seq.apply_invertible([[1, 1], [1, 1]])
        with self.assertRaises(DimensionError):
            seq.apply_invertible(np.eye(3))
        with self.assertRaises(NonFiniteError):
            seq.apply_invertible([[1, np.nan], [0, 1]])

    def test_transfer_window(self):
        rng = np.random.default_rng(1)
        for trial in range(200):
            d = int(rng.integers(1, 9))
            length = int(rng.integers(1, d + 1))
            seq = random_unit_sequence(rng, length, d)
            a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)) + 2 * np.eye(d)
            bounds = seq.transfer_bounds(a)
            self.assertTrue(bounds.holds, f"trial {trial}: {bounds}")
            self.assertGreaterEqual(bounds.kappa, 1.0)
            self.assertLessEqual(bounds.image_lambda_min, bounds.image_lambda_max)

    def test_separated_stays_separated(self):
        rng = np.random.default_rng(13)
        seq = random_unit_sequence(rng, 4, 6)
        bounds = seq.transfer_bounds(np.diag([1.0, 2.0, 3.0, 1.0, 0.5, 1.5]))
        self.assertLess(bounds.separation, 1.0)
        self.assertLess(bounds.image_separation, 1.0)


class TestProviders(unittest.TestCase):

    def test_matrix_gramian(self):
        m = MatrixGramian([[1, 0.5j], [-0.5j, 1]])
        self.assertEqual(m.length, 2)
        self.assertTrue(m.normalized)
        self.assertEqual(m.entry(1, 2), 0.5j)
        with self.assertRaises(IndexRangeError):
            m.entry(3, 1)
        self.assertFalse(MatrixGramian(np.diag([1.0, 2.0])).normalized)

    def test_restrict(self):
        seq = ExplicitSequence(np.eye(4) + 0.1).normalize()
        sub = seq.restrict([2, 4])
        self.assertIsInstance(sub, SubsequenceGramian)
        self.assertEqual(sub.length, 2)
        self.assertEqual(sub.entry(1, 2), seq.entry(2, 4))
        np.testing.assert_allclose(sub.section(2).array, seq.section(4).principal([2, 4]).array)
        with self.assertRaises(IndexRangeError):
            seq.restrict([5])
        with self.assertRaises(DimensionError):
            sub.section(3)

    def test_generic_section_uses_entries(self):
        m = MatrixGramian(np.eye(3))
        np.testing.assert_array_equal(super(MatrixGramian, m).section_array(2), np.eye(2))


if __name__ == '__main__':
    unittest.main()
