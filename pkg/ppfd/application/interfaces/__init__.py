"""
Application Interfaces (Ports)

Abstract interfaces for forecasters and file repositories.
"""

from ppfd.application.interfaces.forecasters import (
    FittedModel,
    ForecasterFactory,
    ForecastModel,
)
from ppfd.application.interfaces.repositories import (
    ModelRepository,
    ReportRepository,
    SeriesRepository,
    TableWriter,
)

__all__ = [
    # Forecasters
    "ForecastModel",
    "ForecasterFactory",
    "FittedModel",
    # Repositories
    "SeriesRepository",
    "ReportRepository",
    "ModelRepository",
    "TableWriter",
]
