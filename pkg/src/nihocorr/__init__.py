"""Cross-correlation distribution of the Niho decimation d = 3(p^m - 1) + 1."""

__version__ = "0.1.0"
