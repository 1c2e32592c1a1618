from .__header__ import (
    __manifest__,
    GramianProvider,
    ExplicitSequence,
    TransferBounds,
    TridiagMode,
    TridiagExampleProvider,
    MatrixGramian,
    SubsequenceGramian,
)

__all__ = [
    "__manifest__",
    "GramianProvider",
    "ExplicitSequence",
    "TransferBounds",
    "TridiagMode",
    "TridiagExampleProvider",
    "MatrixGramian",
    "SubsequenceGramian",
]
