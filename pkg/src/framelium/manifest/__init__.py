"""
Manifest system for framelium.
"""

from .__header__ import __manifest__, __root_manifest__, Manifest

__all__ = ["__manifest__", "__root_manifest__", "Manifest"]
