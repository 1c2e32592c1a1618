from framelium import __project_manifest__ as __parent_manifest__
from framelium.core.header import Manifest, Header

from abc import abstractmethod
from typing import List, Optional, Tuple, Union
import pathlib

__manifest__: Manifest = Manifest(
    parent=__parent_manifest__,
    location=Manifest.Location(module=__name__, classname=None),
    description="Command-line front end: run, demo, info",
    status=Manifest.Status.Development,
    threadSafety=Manifest.ThreadSafety.Unsafe,
    dependencies=[
        Manifest.Dependency(name="fire", version=">=0.7.0"),
        Manifest.Dependency(name="rich", version=">=14.0.0"),
    ],
    changelog=[
        Manifest.Changelog(version="0.1.0", date=Manifest.Date(2025, 9, 5),
                           notes=["`run` command with JSON configuration and exit codes 0/1/2"]),
        Manifest.Changelog(version="0.1.1", date=Manifest.Date(2025, 9, 12),
                           notes=["Atomic report, Gramian and profile writes"]),
        Manifest.Changelog(version="0.1.2", date=Manifest.Date(2025, 9, 20),
                           notes=["`demo` command for the enemy-degree bound on random frames",
                                  "`info` renders the manifest tree"]),
    ]
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2


class RunSummary(Manifest.XObject):
    """Console summary of a run; the full document is in report.json."""
    __style__ = Manifest.XObject.Style.TABLE

    provider: str
    size: int
    separation: float
    classes: int
    max_degree: int
    degree_bound: int
    bessel_schur: float
    lambda_min: float
    lambda_max: float
    warnings: int
    out_dir: str


class DemoRow(Manifest.XObject):
    """One random frame of `framelium demo`."""
    __style__ = Manifest.XObject.Style.TABLE

    trial: int
    length: int
    dimension: int
    schur: float
    max_degree: int
    degree_bound: int
    classes: int
    holds: bool


class CLI(Header):
    """
    Command-line interface.

    `framelium run CONFIG [--out-dir DIR] [--quiet]` runs the partition-and-profile
    pipeline; `framelium demo [--seed S] [--count K]` checks the enemy-degree bound on
    random unit-vector frames; `framelium info` prints the manifest tree or
    the dependency table of one package.
    """

    __manifest__ : Manifest = Manifest(
        parent=__manifest__,
        location=Manifest.Location(module=__name__, classname=__qualname__),
        description="fire-based command dispatcher",
        status=Manifest.Status.Development,
        threadSafety=Manifest.ThreadSafety.Unsafe,
    )

    @abstractmethod
    def start(self, argv: Optional[List[str]] = None) -> None:
        """Configure logging and dispatch `argv` (default: sys.argv[1:])."""

    @abstractmethod
    def execute(self, config: Union[str, pathlib.Path], out_dir: Optional[str] = None) -> Tuple[int, Optional["ReportDocument"]]:
        """Run one configuration file; returns the exit code and, on success, the report."""

    @abstractmethod
    def run(self, config: str, out_dir: Optional[str] = None, quiet: bool = False) -> Optional[RunSummary]:
        """`framelium run`: exits with code 1 on configuration errors and 2 on numerical failures."""

    @abstractmethod
    def demo(self, seed: int = 0, count: int = 20) -> List[DemoRow]:
        """`framelium demo`: max enemy degree vs floor(2C) + 1 on random frames."""

    @abstractmethod
    def info(self, package: Optional[str] = None, deps: bool = False) -> None:
        """
        `framelium info [PACKAGE] [--deps]`: manifest tree of all packages, or of
        PACKAGE given by its short dotted name (e.g. framelium.kernels). With
        --deps, the third-party dependencies of that subtree as a table.
        """


def main(argv: Optional[List[str]] = None) -> None:
    CLI().start(argv)
