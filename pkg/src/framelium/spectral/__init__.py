from .__header__ import __manifest__, HermitianMatrix, SpectralSummary, SpectralCore, as_finite_square

__all__ = ["__manifest__", "HermitianMatrix", "SpectralSummary", "SpectralCore", "as_finite_square"]
