"""Wavelet and tensor-train feature extraction for 1-D spectral data."""

__version__ = "0.1.0"

from . import dataio, dwt, features, grids, harness, metrics, models, numerics, preprocess, synth, wtt  # noqa: F401
