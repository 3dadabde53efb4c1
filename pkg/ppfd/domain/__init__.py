"""
Domain Layer - Clean Architecture

Series, spectra, scaling, metrics and fold planning. Depends on numpy, scipy and
loguru; no file or network I/O.

Structure:
- entities/: Dataclasses (TimeSeries, Spectrum, ScalingState, MetricReport, ...)
- services/: Stateless numerical services (spectral, scaling, peaks, metrics, ...)
- exceptions.py: Domain-specific exceptions
"""
