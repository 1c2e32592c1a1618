import unittest
import logging
import json
import os
from pathlib import Path
import sys
import tempfile

import numpy as np

project_root = Path(__file__).resolve().parent.parent.parent
for path in (project_root, project_root / "src"):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from framelium.cli import pipeline
from framelium.cli.runconfig import parse_config
from framelium.core.config import FrameliumSettings
from framelium.core.errors import IllConditionedError
from framelium.feichtinger import Feichtinger
from framelium.sequences import TridiagExampleProvider

logging.basicConfig(level=logging.DEBUG, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

HARDY = {
    "space": "hardy",
    "points": {"type": "radial_exponential", "q": 0.5, "count": 12},
    "analysis": {"section_sizes": [4, 8], "tau": 0.5, "cnp_omega0": 0.0},
}


def config_of(document: dict):
    return parse_config(json.dumps(document))


class TestRun(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_outputs_written(self):
        report = pipeline.run(config_of(HARDY), self.tmp / "out")
        for name in ("report.json", "gramian.csv", "profile.csv"):
            self.assertTrue((self.tmp / "out" / name).is_file())
        self.assertEqual(report.version, pipeline.REPORT_VERSION)
        self.assertEqual(report.partition.size, 12)
        self.assertEqual([s.n for s in report.partition.profile], [4, 8, 12])
        self.assertIsNotNone(report.cnp)
        self.assertTrue(report.cnp.psd)
        self.assertEqual(len(report.kernel.carleson_masses), 12)
        self.assertGreater(report.kernel.pseudo_hyperbolic_separation, 0.0)
        self.assertEqual([p for p in os.listdir(self.tmp / "out") if p.startswith(".")], [])

        profile = (self.tmp / "out" / "profile.csv").read_text().splitlines()
        self.assertEqual(profile[0], "N,lambda_min,lambda_max")
        self.assertEqual(len(profile), 4)

    def test_deterministic(self):
        pipeline.run(config_of(HARDY), self.tmp / "a")
        pipeline.run(config_of(HARDY), self.tmp / "b")
        first = json.loads((self.tmp / "a" / "report.json").read_text())
        second = json.loads((self.tmp / "b" / "report.json").read_text())
        first.pop("generated_at")
        second.pop("generated_at")
        self.assertEqual(first, second)
        for name in ("gramian.csv", "profile.csv"):
            self.assertEqual((self.tmp / "a" / name).read_bytes(), (self.tmp / "b" / name).read_bytes())

    def test_gramian_csv_round_trip(self):
        config = config_of(HARDY)
        report, section = pipeline.analyse(config)
        pipeline.write_outputs(report, section, self.tmp)
        restored = pipeline.read_gramian_csv(self.tmp / "gramian.csv")
        np.testing.assert_array_equal(restored.section(12).array, section.array)

        resolved = Feichtinger.default.riesz_profile(restored, [4, 8, 12])
        for got, expected in zip(resolved, report.partition.profile):
            self.assertEqual(got.n, expected.n)
            self.assertAlmostEqual(got.lambda_min, expected.lambda_min, delta=1e-13)
            self.assertAlmostEqual(got.lambda_max, expected.lambda_max, delta=1e-13)

    def test_explicit_orthonormal(self):
        config = config_of({"space": {"type": "explicit_vectors", "vectors": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
                            "analysis": {"section_sizes": [2, 3]}})
        report, _ = pipeline.analyse(config)
        self.assertEqual(report.partition.separation, 0.0)
        self.assertEqual(report.partition.partition.class_count, 1)
        self.assertAlmostEqual(report.abs_gram_ratio, 1.0, delta=1e-15)
        self.assertIsNone(report.kernel)
        self.assertIsNone(report.cnp)

    def test_tridiagonal(self):
        report, section = pipeline.analyse(config_of({"space": {"type": "tridiag_example", "mode": "centered"},
                                                      "analysis": {"section_sizes": [10, 20, 40]}}))
        self.assertEqual(report.partition.size, 40)
        self.assertEqual(section.n, 40)
        self.assertEqual(report.partition.separation, 0.5)
        self.assertEqual(report.partition.partition.class_count, 1)
        self.assertAlmostEqual(report.abs_gram_ratio, 1.0, delta=1e-12)
        self.assertEqual(report.warnings, report.partition.warnings)

        report, section = pipeline.analyse(config_of({"space": "tridiag_example", "analysis": {"section_sizes": [5, 15]}}))
        self.assertEqual(section.n, 15)

    def test_tridiagonal_sized_to_largest_section(self):
        report, section = pipeline.analyse(config_of({"space": {"type": "tridiag_example", "mode": "centered"},
                                                      "analysis": {"section_sizes": [10, 100]}}))
        self.assertEqual(section.n, 100)
        self.assertEqual([s.n for s in report.partition.profile], [10, 100])
        lo, hi = TridiagExampleProvider.closed_form_extremes(100)
        self.assertAlmostEqual(report.partition.profile[-1].lambda_min, lo, delta=1e-9)
        self.assertAlmostEqual(report.partition.profile[-1].lambda_max, hi, delta=1e-9)

        report, section = pipeline.analyse(config_of({"space": {"type": "tridiag_example", "mode": "centered", "half_width": 6},
                                                      "analysis": {"section_sizes": [5]}}))
        self.assertEqual(section.n, 13)

    def test_tolerance_override(self):
        before = FrameliumSettings.default
        config = config_of({
            "space": {"type": "dirichlet_mu", "masses": [{"zeta": 1.0, "mass": 1.0}], "truncation": 10},
            "points": [0.1, 0.3],
            "analysis": {"section_sizes": [2], "tolerances": {"condition_limit": 2.0}},
        })
        with self.assertRaises(IllConditionedError):
            pipeline.analyse(config)
        self.assertIs(FrameliumSettings.default, before)

    def test_settings_override(self):
        before = FrameliumSettings.default
        with pipeline.settings_override({"series_tol": 1e-12}) as settings:
            self.assertEqual(settings.series_tol, 1e-12)
            self.assertIs(FrameliumSettings.default, settings)
        self.assertIs(FrameliumSettings.default, before)
        with pipeline.settings_override({}) as settings:
            self.assertIs(settings, before)


class TestAtomicWrite(unittest.TestCase):

    def test_write_and_replace(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "nested" / "file.txt"
            pipeline.atomic_write(target, "first\n")
            pipeline.atomic_write(target, "second\n")
            self.assertEqual(target.read_text(), "second\n")
            self.assertEqual(os.listdir(target.parent), ["file.txt"])

    def test_failed_write_leaves_no_temp_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "file.txt"
            with self.assertRaises(TypeError):
                pipeline.atomic_write(target, b"bytes are not text")
            self.assertEqual(os.listdir(tmp), [])


if __name__ == '__main__':
    unittest.main()
