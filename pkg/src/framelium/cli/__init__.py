from .__header__ import __manifest__, CLI, RunSummary, DemoRow, EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, main

__all__ = ["__manifest__", "CLI", "RunSummary", "DemoRow", "EXIT_OK", "EXIT_CONFIG", "EXIT_NUMERICAL", "main"]
