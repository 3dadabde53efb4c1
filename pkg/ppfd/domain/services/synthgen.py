"""
Synthetic Generator - Noise-free linear trend plus sine seasonalities.
"""

from typing import Optional

import numpy as np

from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.entities.synth import SynthSpec


def generate(spec: Optional[SynthSpec] = None, seed: Optional[int] = None) -> TimeSeries:
    """
    Sample the series at t = 0..n-1.

    The default generator draws no random numbers, so seed does not change
    the output.
    """
    spec = spec or SynthSpec()
    t = np.arange(spec.n, dtype=np.float64)
    values = spec.slope * t + spec.intercept
    for component in spec.components:
        values = values + component.amplitude * np.sin(2.0 * np.pi * t / component.period)
    return TimeSeries(values=values, origin=spec.origin, step=spec.step)
