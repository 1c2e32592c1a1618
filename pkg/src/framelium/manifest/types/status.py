"""
Maturity of a package or class.
"""

# Standard library imports
from enum import Enum


class ManifestStatus(str, Enum):
    Experimental = "Experimental"   # numbers not yet cross-checked
    Development = "Development"
    Validated = "Validated"         # results agree with an independent oracle in the test suite
    Deprecated = "Deprecated"

    def __str__(self):
        return self.value

    @property
    def usable(self) -> bool:
        """False for statuses whose output should not feed a report."""
        return self not in (ManifestStatus.Experimental, ManifestStatus.Deprecated)
