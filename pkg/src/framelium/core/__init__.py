from .__header__ import __manifest__

__all__ = ["__manifest__"]
