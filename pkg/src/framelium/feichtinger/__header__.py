"""
Partitions of unit-vector sequences into separated Bessel pieces.

Indices i, j are enemies when |<x_i, x_j>|^2 >= tau. A first-fit pass over the
enemy graph puts every index into the lowest class holding none of its
enemies, so there are at most max_degree + 1 classes and each class is
separated with gamma^2 < tau. For a Bessel sequence with bound C no index has
more than floor(2C) + 1 enemies at tau = 1/2.

All spectral numbers here come from finite sections; they estimate the
properties of an infinite sequence but never certify them.
"""

from framelium import __project_manifest__ as __parent_manifest__
from framelium.core.header import Manifest, Header, classProperty, dlock
from framelium.core.config import FrameliumSettings
from framelium.sequences import GramianProvider
from framelium.spectral import SpectralCore, SpectralSummary

from abc import abstractmethod
import enum
import threading
from typing import ClassVar, Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import ConfigDict, Field, model_validator

import logging
logger = logging.getLogger(__name__)

__manifest__ : Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__),
    description="Enemy graphs, greedy partitions, degree bounds and finite-section Riesz profiles",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.ThreadSafe,
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 4),
                           notes=["Enemy graph, first-fit partition, degree bound"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025, 9, 11),
                           notes=["Per-class profiles run on a thread pool", "Stabilization warnings"]),
    ]
)

FINITE_SECTION_CAVEAT = (
    "Finite-section values estimate, but do not certify, the Bessel and Riesz bounds "
    "of the infinite sequence; compare the last two section sizes to judge stabilization."
)


class BesselMode(str, enum.Enum):
    Schur = "schur"         # certified upper bound for the section norm
    Spectral = "spectral"   # section norm itself, a lower bound for the Bessel constant


class EnemyGraph(Manifest.XObject):
    """Symmetric, loop-free adjacency on indices 1..n; neighbors[i - 1] lists the enemies of i."""
    model_config = ConfigDict(frozen=True)

    __style__ = Manifest.XObject.Style.TABLE

    n: int = Field(ge=0)
    tau: float = Field(default=0.5, gt=0, le=1)
    neighbors: Tuple[Tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def _check(self) -> "EnemyGraph":
        if len(self.neighbors) != self.n:
            raise ValueError(f"expected {self.n} neighbor lists, got {len(self.neighbors)}")
        rows = [set(row) for row in self.neighbors]
        for i, row in enumerate(rows, start=1):
            for j in row:
                if not 1 <= j <= self.n:
                    raise ValueError(f"neighbor {j} of {i} outside 1..{self.n}")
                if j == i:
                    raise ValueError(f"self-loop at {i}")
                if i not in rows[j - 1]:
                    raise ValueError(f"edge ({i},{j}) is not symmetric")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], tau: float = 0.5) -> "EnemyGraph":
        rows: List[set] = [set() for _ in range(n)]
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            rows[i - 1].add(j)
            rows[j - 1].add(i)
        return cls(n=n, tau=tau, neighbors=tuple(tuple(sorted(r)) for r in rows))

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.neighbors, start=1) for j in row if i < j]

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors[i - 1]

    def degree(self, i: int) -> int:
        return len(self.neighbors[i - 1])

    @property
    def degrees(self) -> List[int]:
        return [len(row) for row in self.neighbors]

    def degree_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for d in self.degrees:
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))


class Partition(Manifest.XObject):
    """Classes of 1-based indices, numbered 1..K in order of opening."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    classes: Tuple[Tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def _check(self) -> "Partition":
        seen = sorted(i for c in self.classes for i in c)
        if seen != list(range(1, self.n + 1)):
            raise ValueError(f"classes must cover 1..{self.n} exactly once")
        if any(len(c) == 0 for c in self.classes):
            raise ValueError("empty class")
        return self

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def assignment(self) -> List[int]:
        """assignment[i - 1] is the class id of index i."""
        out = [0] * self.n
        for cid, members in enumerate(self.classes, start=1):
            for i in members:
                out[i - 1] = cid
        return out

    def class_of(self, i: int) -> int:
        return self.assignment[i - 1]


class ClassReport(Manifest.XObject):
    class_id: int
    indices: Tuple[int, ...]
    separation: float = Field(description="gamma: largest |<x_i, x_j>| inside the class")
    gamma_sq_below_tau: bool
    profile: List[SpectralSummary]
    stabilized: Optional[bool] = None


class PartitionReport(Manifest.XObject):
    """Outcome of the partition-and-profile pipeline on one leading section."""
    __style__ = Manifest.XObject.Style.TREE

    provider: str
    size: int
    tau: float
    separation: float
    separated: bool
    max_degree: int
    degree_histogram: Dict[int, int]
    partition: Partition
    classes: List[ClassReport]
    bessel_schur: float
    bessel_spectral: float
    degree_bound: int
    degree_bound_holds: bool
    class_count_bound_holds: bool
    profile: List[SpectralSummary]
    stabilized: Optional[bool] = None
    caveat: str = FINITE_SECTION_CAVEAT
    warnings: List[str] = Field(default_factory=list)


class Feichtinger(Header):
    """
    Partition-and-profile service over Gramian providers.

    Every operation takes a provider and a section size N and only reads the
    leading N x N section.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="Separated Bessel partitions of normalized sequences",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.ThreadSafe,
    )

    Mode = BesselMode

    _default_instance: ClassVar[Optional["Feichtinger"]] = None
    _default_lock: ClassVar[threading.Lock] = threading.Lock()

    @classProperty
    @dlock("_default_lock", "_default_instance")
    def default(cls) -> "Feichtinger":
        """
        The default, shared instance.
        """
        return Feichtinger()

    @classmethod
    def reset_default(cls) -> None:
        with Feichtinger._default_lock:
            Feichtinger._default_instance = None

    def __init__(self, solver: Optional[SpectralCore] = None, max_workers: Optional[int] = None):
        super().__init__()
        settings = FrameliumSettings.default
        self._solver = SpectralCore.default if solver is None else solver
        self._max_workers = settings.max_workers if max_workers is None else max_workers
        self._settings = settings

    @property
    def solver(self) -> SpectralCore:
        return self._solver

    @abstractmethod
    def separation_constant(self, provider: GramianProvider, size: int) -> float:
        """gamma = max over n != m <= N of |<x_n, x_m>|."""

    def is_separated(self, gamma: float) -> bool:
        return gamma < 1.0 - self._settings.not_separated_tol

    @abstractmethod
    def enemy_graph(self, provider: GramianProvider, size: int, tau: float = 0.5) -> EnemyGraph:
        """Edge (i, j) iff |<x_i, x_j>|^2 >= tau."""

    @abstractmethod
    def greedy_partition(self, graph: EnemyGraph) -> Partition:
        """First-fit: each index joins the lowest class free of its enemies."""

    @staticmethod
    def max_degree(graph: EnemyGraph) -> int:
        return max(graph.degrees, default=0)

    @staticmethod
    def degree_bound(c: float) -> int:
        """floor(2C) + 1 for a Bessel bound C >= 1 of a normalized sequence."""
        if c < 1.0:
            raise ValueError(f"a Bessel bound of a normalized sequence is at least 1, got {c}")
        return int(2.0 * c) + 1

    @abstractmethod
    def riesz_profile(self, provider: GramianProvider, section_sizes: Sequence[int]) -> List[SpectralSummary]:
        """Extreme eigenvalues of the leading sections, in the order of `section_sizes`."""

    @abstractmethod
    def bessel_estimate(self, provider: GramianProvider, size: int, mode: BesselMode = BesselMode.Schur) -> float:
        """Schur row-sum bound or lambda_max of the N-section."""

    @abstractmethod
    def abs_gram_ratio(self, provider: GramianProvider, size: int) -> float:
        """lambda_max(|Gamma_N|) / lambda_max(Gamma_N), entrywise modulus in the numerator."""

    @abstractmethod
    def separated_partition_report(self, provider: GramianProvider, size: int, tau: float = 0.5,
                                   section_sizes: Optional[Sequence[int]] = None) -> PartitionReport:
        """Enemy graph, partition, per-class separation and profiles, Bessel estimates and degree bound."""
