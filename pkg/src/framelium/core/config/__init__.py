from .__header__ import __manifest__, FrameliumSettings

__all__ = ["__manifest__", "FrameliumSettings"]
