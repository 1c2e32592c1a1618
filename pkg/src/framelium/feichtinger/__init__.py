from .__header__ import (
    __manifest__,
    FINITE_SECTION_CAVEAT,
    BesselMode,
    EnemyGraph,
    Partition,
    ClassReport,
    PartitionReport,
    Feichtinger,
)

__all__ = [
    "__manifest__",
    "FINITE_SECTION_CAVEAT",
    "BesselMode",
    "EnemyGraph",
    "Partition",
    "ClassReport",
    "PartitionReport",
    "Feichtinger",
]
