"""
Location type for the manifest.
"""

# Framelium imports
from .value import ManifestValue

# Standard library imports
from typing import Optional

# External imports
from pydantic import Field


class ManifestLocation(ManifestValue):
    """Where a manifest lives: a module, or a class inside a module."""

    module: str = Field(description="Dotted module name")
    classname: Optional[str] = Field(default=None, description="Qualified class name, if any")

    @property
    def fqn(self) -> str:
        return f"{self.module}.{self.classname}" if self.classname else self.module

    @property
    def fqnShort(self) -> str:
        """Module name with the header/impl file component removed."""
        parts = [p for p in self.module.split(".") if p not in ("__header__", "__impl__", "__init__")]
        if self.classname:
            parts.append(self.classname)
        return ".".join(parts)
