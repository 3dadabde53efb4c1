"""
Infrastructure Layer - Clean Architecture

Implementations of the application ports.

Structure:
- forecasters/: ANN, ARIMA, Fourier-sum and PPFD models plus their factory
- persistence/: CSV and JSON repositories, pydantic document schemas, mappers
- container.py: Dependency wiring
"""
