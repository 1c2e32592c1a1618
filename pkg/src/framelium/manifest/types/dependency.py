"""
Dependency type for the manifest.
"""

# Framelium imports
from .value import ManifestValue
from .xobject import XObject

# External imports
from packaging.specifiers import SpecifierSet, InvalidSpecifier
from pydantic import Field, field_validator


class ManifestDependency(ManifestValue):
    """A third-party package a framelium package relies on."""
    __style__ = XObject.Style.TABLE

    name: str = Field(description="Distribution name")
    version: str = Field(default="", description="Version specifier, e.g. '>=1.26'")

    @field_validator("version")
    @classmethod
    def _check_specifier(cls, value: str) -> str:
        try:
            return str(SpecifierSet(value))
        except InvalidSpecifier as e:
            raise ValueError(f"Invalid version specifier '{value}': {e}")

    def __str__(self) -> str:
        return f"{self.name}{self.version}"
