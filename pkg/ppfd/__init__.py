"""ppfd - peak prediction via Fourier decomposition."""

__version__ = "0.1.0"
