"""
The partition-and-profile pipeline behind `framelium run`.

run() builds the provider named by a RunConfig, analyses its leading section
and writes report.json, gramian.csv and profile.csv. Files are written to a
temporary name in the output directory and renamed into place.
"""

from .runconfig import RunConfig

from framelium import __version__
from framelium.core.config import FrameliumSettings
from framelium.core.errors import ConfigError, DimensionError, DomainError, FrameliumError, NumericalError
from framelium.feichtinger import Feichtinger, PartitionReport
from framelium.kernels import (
    CNPDiagnostic, DirichletAlphaSpace, DMuSpace, HardySpace, KernelSpace, pseudo_hyperbolic_separation,
)
from framelium.manifest import Manifest
from framelium.manifest.types.value import ComplexValue
from framelium.sequences import ExplicitSequence, GramianProvider, MatrixGramian, TridiagExampleProvider, TridiagMode
from framelium.spectral import HermitianMatrix, SpectralCore, SpectralSummary

import contextlib
import csv
import datetime
import io
import os
import pathlib
import tempfile
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np

import logging
logger = logging.getLogger(__name__)

REPORT_VERSION = "1"


class KernelSection(Manifest.XObject):
    """Point-set diagnostics for kernel spaces."""
    space: str
    points: List[ComplexValue]
    carleson_masses: List[float]
    pseudo_hyperbolic_separation: Optional[float] = None
    gram_condition_number: Optional[float] = None


class ReportDocument(Manifest.XObject):
    """Everything a run produced; `generated_at` is the only field that varies between identical runs."""
    __style__ = Manifest.XObject.Style.TREE

    version: str = REPORT_VERSION
    framelium_version: str = __version__
    generated_at: str
    config: RunConfig
    partition: PartitionReport
    abs_gram_ratio: float
    cnp: Optional[CNPDiagnostic] = None
    kernel: Optional[KernelSection] = None
    warnings: List[str]


@contextlib.contextmanager
def settings_override(tolerances: dict) -> Iterator[FrameliumSettings]:
    """Install modified default settings for the duration of a run."""
    previous = FrameliumSettings.default
    if not tolerances:
        yield previous
        return
    FrameliumSettings.set_default(FrameliumSettings(**{**previous.model_dump(), **tolerances}))
    SpectralCore.reset_default()
    Feichtinger.reset_default()
    try:
        yield FrameliumSettings.default
    finally:
        FrameliumSettings.set_default(previous)
        SpectralCore.reset_default()
        Feichtinger.reset_default()


def build_space(config: RunConfig) -> Optional[KernelSpace]:
    spec = config.space
    if spec.type == "hardy":
        return HardySpace()
    if spec.type == "dirichlet_alpha":
        return DirichletAlphaSpace(spec.alpha)
    if spec.type == "dirichlet_mu":
        return DMuSpace(spec.measure, spec.truncation)
    return None


def _input_path(error: Exception) -> str:
    if isinstance(error, DomainError):
        return "points"
    if isinstance(error, DimensionError):
        return "analysis"
    return "space"


def build_provider(config: RunConfig) -> Tuple[GramianProvider, Optional[KernelSpace], int]:
    """The provider, its kernel space (if any) and the section size to analyse.

    Nothing is evaluated here, so every failure is an input error and is
    raised as ConfigError.
    """
    try:
        return _build_provider(config)
    except (ConfigError, NumericalError):
        raise
    except (FrameliumError, ValueError) as e:
        raise ConfigError(str(e), _input_path(e)) from e


def _build_provider(config: RunConfig) -> Tuple[GramianProvider, Optional[KernelSpace], int]:
    spec = config.space
    analysis = config.analysis
    wanted = analysis.size or analysis.section_sizes[-1]

    space = build_space(config)
    if space is not None and analysis.cnp_omega0 is not None:
        try:
            space.check(analysis.cnp_omega0)
        except DomainError as e:
            raise ConfigError(str(e), "analysis.cnp_omega0") from e
    if space is not None:
        provider: GramianProvider = space.gramian(config.resolved_points())
    elif spec.type == "explicit_vectors":
        provider = ExplicitSequence(spec.vectors).normalize()
        repeats = provider.repeated_indices()
        if repeats:
            logger.info(f"explicit vectors contain repeated entries {repeats[:5]}")
    elif spec.half_width is not None:
        provider = TridiagExampleProvider(spec.mode, half_width=spec.half_width)
    elif spec.mode is TridiagMode.Centered:
        # exactly the largest requested section, indices -(wanted // 2) upwards
        provider = TridiagExampleProvider(spec.mode, half_width=wanted // 2, length=wanted)
    else:
        provider = TridiagExampleProvider(spec.mode)

    size = analysis.size or provider.length or analysis.section_sizes[-1]
    provider.check_size(size)
    return provider, space, size


def _kernel_section(space: KernelSpace, points: List[complex]) -> KernelSection:
    separation = pseudo_hyperbolic_separation(points) if len(points) > 1 else None
    condition = space.condition_number if isinstance(space, DMuSpace) else None
    return KernelSection(
        space=space.name,
        points=points,
        carleson_masses=space.carleson_masses(points),
        pseudo_hyperbolic_separation=separation,
        gram_condition_number=condition,
    )


def analyse(config: RunConfig) -> Tuple[ReportDocument, HermitianMatrix]:
    """Run the analysis without touching the filesystem."""
    with settings_override(config.analysis.tolerances):
        provider, space, size = build_provider(config)
        service = Feichtinger.default
        analysis = config.analysis

        partition = service.separated_partition_report(provider, size, analysis.tau, analysis.section_sizes)
        ratio = service.abs_gram_ratio(provider, size)
        warnings = list(partition.warnings)

        cnp = kernel = None
        if space is not None:
            points = list(provider.points[:size])
            kernel = _kernel_section(space, points)
            if analysis.cnp_omega0 is not None:
                cnp = space.cnp_diagnostic(analysis.cnp_omega0, points)
                if not cnp.psd:
                    warnings.append(f"CNP diagnostic negative: lambda_min = {cnp.lambda_min:.6g} at omega0 = {cnp.omega0}")

        report = ReportDocument(
            generated_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
            config=config,
            partition=partition,
            abs_gram_ratio=ratio,
            cnp=cnp,
            kernel=kernel,
            warnings=warnings,
        )
        return report, provider.section(size)


def atomic_write(path: Union[str, pathlib.Path], text: str) -> None:
    """Write `text` to a temporary file next to `path`, then rename it over `path`."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(FileNotFoundError):
            os.unlink(tmp)
        raise


def gramian_csv(section: HermitianMatrix) -> str:
    """Rows (i, j, re, im) with 1-based indices; floats in shortest round-trip form."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i", "j", "re", "im"])
    a = section.array
    for i in range(section.n):
        for j in range(section.n):
            writer.writerow([i + 1, j + 1, repr(float(a[i, j].real)), repr(float(a[i, j].imag))])
    return out.getvalue()


def profile_csv(profile: List[SpectralSummary]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["N", "lambda_min", "lambda_max"])
    for summary in profile:
        writer.writerow([summary.n, repr(float(summary.lambda_min)), repr(float(summary.lambda_max))])
    return out.getvalue()


def read_gramian_csv(path: Union[str, pathlib.Path]) -> MatrixGramian:
    """Inverse of `gramian_csv`."""
    with open(path, newline="", encoding="utf-8") as handle:
        rows = list(csv.DictReader(handle))
    n = max(int(r["i"]) for r in rows)
    a = np.zeros((n, n), dtype=complex)
    for r in rows:
        a[int(r["i"]) - 1, int(r["j"]) - 1] = complex(float(r["re"]), float(r["im"]))
    return MatrixGramian(a)


def write_outputs(report: ReportDocument, section: HermitianMatrix, out_dir: Union[str, pathlib.Path]) -> List[pathlib.Path]:
    """Write the three output files sequentially; returns their paths."""
    names = report.config.output
    out_dir = pathlib.Path(out_dir)
    files = [
        (out_dir / names.report, report.model_dump_json(indent=2) + "\n"),
        (out_dir / names.gramian, gramian_csv(section)),
        (out_dir / names.profile, profile_csv(report.partition.profile)),
    ]
    for path, text in files:
        atomic_write(path, text)
        logger.debug(f"wrote {path}")
    return [path for path, _ in files]


def run(config: RunConfig, out_dir: Optional[Union[str, pathlib.Path]] = None) -> ReportDocument:
    """Analyse `config` and write the report files to `out_dir` (default: the configured directory)."""
    report, section = analyse(config)
    write_outputs(report, section, out_dir if out_dir is not None else config.output.dir)
    return report
