"""
Changelog type for the manifest.
"""

# Framelium imports
from .value import ManifestValue

# Standard library imports
from typing import List

# External imports
from packaging.version import Version, InvalidVersion
from pydantic import Field, field_validator


class ManifestChangelog(ManifestValue):
    """
    Changelog entry for a manifest.
    Contains version, date and notes.
    """
    version: str = Field(description="Version number for this changelog entry")
    date: ManifestValue.Date = Field(description="Date of this changelog entry")
    notes: List[str] = Field(default_factory=list, description="List of changes in this entry")

    @field_validator("version")
    @classmethod
    def _check_version(cls, value: str) -> str:
        try:
            return str(Version(value))
        except InvalidVersion as e:
            raise ValueError(f"Invalid changelog version '{value}': {e}")

    @property
    def parsedVersion(self) -> Version:
        return Version(self.version)

    def __str__(self) -> str:
        return f"{self.version} ({self.date}): {', '.join(self.notes)}"
