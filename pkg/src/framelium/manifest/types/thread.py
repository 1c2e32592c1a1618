"""
Thread safety levels for manifest entries.
"""

# Standard library imports
from enum import Enum


class ManifestThreadSafety(str, Enum):
    Unsafe     = "unsafe"
    Reentrant  = "reentrant"
    ThreadSafe = "thread-safe"
    Immutable  = "immutable"

    def __str__(self):
        return self.value

    @property
    def shareable(self) -> bool:
        """True when one instance may serve the worker pool of a partition report."""
        return self in (ManifestThreadSafety.ThreadSafe, ManifestThreadSafety.Immutable)

