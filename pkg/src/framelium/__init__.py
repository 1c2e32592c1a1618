from .__header__ import __manifest__, __project_manifest__, __version__

__all__ = ["__manifest__", "__project_manifest__", "__version__"]
