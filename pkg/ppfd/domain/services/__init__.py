"""
Domain Services

Pure functions over domain entities: preprocessing, spectral decomposition,
scaling, peak detection, metrics, fold planning and synthetic generation.
"""
