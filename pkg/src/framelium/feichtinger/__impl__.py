from .__header__ import (
    Feichtinger, BesselMode, EnemyGraph, Partition, ClassReport, PartitionReport,
)

from framelium.core.errors import DegenerateSectionError, DimensionError
from framelium.sequences import GramianProvider
from framelium.spectral import HermitianMatrix, SpectralSummary

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

import logging
logger = logging.getLogger(__name__)

DEFAULT_SECTION_SIZES = (10, 20, 40)


def _max_off_diagonal(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    m = np.abs(a)
    np.fill_diagonal(m, 0.0)
    return float(np.max(m))


def _profile_sizes(requested: Sequence[int], size: int) -> List[int]:
    """Requested sizes below `size`, followed by `size` itself."""
    return sorted({s for s in requested if 1 <= s < size} | {size})


class FeichtingerImpl(Feichtinger):
    __class_type__ = Feichtinger.ClassType.Impl

    def _workers(self) -> int:
        """Pool size for per-section work; a solver not marked shareable gets a single worker."""
        manifest = getattr(type(self._solver), "__manifest__", None)
        if manifest is not None and not manifest.threadSafety.shareable:
            return 1
        return self._max_workers

    def _require_normalized(self, provider: GramianProvider) -> None:
        if not provider.normalized:
            raise ValueError(f"{provider.name} is not normalized; normalize the sequence first")

    def _check_tau(self, tau: float) -> None:
        if not 0.0 < tau <= 1.0:
            raise ValueError(f"tau must lie in (0, 1], got {tau}")

    def separation_constant(self, provider: GramianProvider, size: int) -> float:
        if size < 2:
            raise DimensionError(f"separation needs at least two vectors, got N={size}")
        self._require_normalized(provider)
        gamma = _max_off_diagonal(provider.section_array(size))
        if not self.is_separated(gamma):
            logger.warning(f"{provider.name}: not separated at N={size} (gamma = {gamma:.15f})")
        return gamma

    def _graph_from_array(self, a: np.ndarray, tau: float) -> EnemyGraph:
        squared = np.abs(a) ** 2
        # only entries that round to 1 are snapped, so coinciding vectors stay enemies at tau = 1
        squared[squared >= 1.0 - self._settings.coincidence_tol] = 1.0
        enemies = squared >= tau
        np.fill_diagonal(enemies, False)
        enemies = enemies & enemies.T
        rows = tuple(tuple(int(j) + 1 for j in np.flatnonzero(row)) for row in enemies)
        return EnemyGraph(n=a.shape[0], tau=tau, neighbors=rows)

    def enemy_graph(self, provider: GramianProvider, size: int, tau: float = 0.5) -> EnemyGraph:
        self._check_tau(tau)
        self._require_normalized(provider)
        return self._graph_from_array(provider.section_array(size), tau)

    def greedy_partition(self, graph: EnemyGraph) -> Partition:
        assignment = [0] * graph.n
        classes: List[List[int]] = []
        for i in range(1, graph.n + 1):
            taken = {assignment[j - 1] for j in graph.neighbors[i - 1] if j < i}
            cid = next((c for c in range(1, len(classes) + 1) if c not in taken), len(classes) + 1)
            if cid > len(classes):
                classes.append([])
            classes[cid - 1].append(i)
            assignment[i - 1] = cid
        return Partition(n=graph.n, classes=tuple(tuple(c) for c in classes))

    def _profile(self, section: HermitianMatrix, sizes: Sequence[int]) -> List[SpectralSummary]:
        return [self._solver.summary(section if k == section.n else section.leading(k)) for k in sizes]

    def riesz_profile(self, provider: GramianProvider, section_sizes: Sequence[int]) -> List[SpectralSummary]:
        sizes = [int(s) for s in section_sizes]
        if not sizes:
            raise DimensionError("at least one section size is required")
        if any(b <= a for a, b in zip(sizes, sizes[1:])) or sizes[0] < 1:
            raise DimensionError(f"section sizes must be positive and strictly ascending, got {sizes}")
        section = provider.section(sizes[-1])
        with ThreadPoolExecutor(max_workers=self._workers()) as pool:
            return list(pool.map(lambda k: self._profile(section, [k])[0], sizes))

    def bessel_estimate(self, provider: GramianProvider, size: int, mode: BesselMode = BesselMode.Schur) -> float:
        section = provider.section(size)
        if BesselMode(mode) is BesselMode.Schur:
            return self._solver.schur_row_bound(section)
        return self._solver.eig_hermitian(section)[-1]

    def abs_gram_ratio(self, provider: GramianProvider, size: int) -> float:
        section = provider.section(size)
        norm = self._solver.eig_hermitian(section)[-1]
        if norm <= self._settings.zero_vector_tol:
            raise DegenerateSectionError(f"{provider.name}: N={size} section has zero norm")
        return self._solver.eig_hermitian(section.entrywise_modulus())[-1] / norm

    def _stabilized(self, profile: List[SpectralSummary]) -> Optional[bool]:
        if len(profile) < 2:
            return None
        before, last = profile[-2].lambda_min, profile[-1].lambda_min
        return abs(last - before) <= self._settings.stabilization_atol + self._settings.stabilization_rtol * abs(before)

    def _class_report(self, provider: GramianProvider, tau: float, sizes: Sequence[int],
                      cid: int, members: Tuple[int, ...]) -> ClassReport:
        sub = provider.restrict(members)
        gamma = self.separation_constant(sub, len(members)) if len(members) > 1 else 0.0
        profile = self._profile(sub.section(len(members)), _profile_sizes(sizes, len(members)))
        return ClassReport(
            class_id=cid,
            indices=members,
            separation=gamma,
            gamma_sq_below_tau=gamma * gamma < tau,
            profile=profile,
            stabilized=self._stabilized(profile),
        )

    def separated_partition_report(self, provider: GramianProvider, size: int, tau: float = 0.5,
                                   section_sizes: Optional[Sequence[int]] = None) -> PartitionReport:
        self._check_tau(tau)
        self._require_normalized(provider)
        sizes = list(DEFAULT_SECTION_SIZES if section_sizes is None else section_sizes)
        warnings: List[str] = []

        section = provider.section(size)
        gamma = _max_off_diagonal(section.array)
        separated = self.is_separated(gamma)
        if not separated:
            warnings.append(f"not separated: gamma = {gamma:.15f} at N={size}")

        graph = self._graph_from_array(np.array(section.array), tau)
        partition = self.greedy_partition(graph)
        max_degree = self.max_degree(graph)

        schur = self._solver.schur_row_bound(section)
        bound = self.degree_bound(max(schur, 1.0))
        profile = self._profile(section, _profile_sizes(sizes, size))
        stabilized = self._stabilized(profile)
        if stabilized is False:
            before, last = profile[-2], profile[-1]
            warnings.append(
                f"stabilization not reached: lambda_min {before.lambda_min:.6g} at N={before.n} "
                f"vs {last.lambda_min:.6g} at N={last.n}"
            )

        with ThreadPoolExecutor(max_workers=self._workers()) as pool:
            classes = list(pool.map(
                lambda item: self._class_report(provider, tau, sizes, item[0], item[1]),
                enumerate(partition.classes, start=1),
            ))

        for message in warnings:
            logger.warning(f"{provider.name}: {message}")
        logger.debug(f"{provider.name}: {partition.class_count} classes, max degree {max_degree}, "
                     f"Schur bound {schur:.6g}, degree bound {bound}")

        return PartitionReport(
            provider=provider.name,
            size=size,
            tau=tau,
            separation=gamma,
            separated=separated,
            max_degree=max_degree,
            degree_histogram=graph.degree_histogram(),
            partition=partition,
            classes=classes,
            bessel_schur=schur,
            bessel_spectral=profile[-1].lambda_max,
            degree_bound=bound,
            degree_bound_holds=max_degree <= bound,
            class_count_bound_holds=partition.class_count <= max_degree + 1,
            profile=profile,
            stabilized=stabilized,
            warnings=warnings,
        )
