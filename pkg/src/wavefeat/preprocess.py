"""Spectrum containers and the initial preprocessing steps.

Operations here are stateless per-spectrum transforms (derivatives,
power-of-two resampling, absolute value) plus dataset-level centering and
scaling.  All of them work on the intensity axis; wavenumber grids may run
in either direction as long as they are strictly monotone.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import InvalidInputError

DERIVATIVE_ORDERS = (0, 1, 2)
SCALE_AXES = ("feature", "sample")


@dataclass(frozen=True)
class Spectrum:
    """A sampled 1-D signal on a strictly monotone wavenumber grid."""

    wavenumbers: np.ndarray
    intensities: np.ndarray

    def __post_init__(self):
        wn = np.asarray(self.wavenumbers, dtype=float)
        y = np.asarray(self.intensities, dtype=float)
        object.__setattr__(self, "wavenumbers", wn)
        object.__setattr__(self, "intensities", y)
        if wn.ndim != 1 or y.ndim != 1 or wn.size != y.size:
            raise InvalidInputError("wavenumbers and intensities must be 1-D and equal length")
        if wn.size < 4:
            raise InvalidInputError("spectrum needs at least 4 points")
        if not (np.all(np.isfinite(wn)) and np.all(np.isfinite(y))):
            raise InvalidInputError("spectrum contains non-finite values")
        d = np.diff(wn)
        if not (np.all(d > 0) or np.all(d < 0)):
            raise InvalidInputError("wavenumber grid must be strictly monotone")

    def __len__(self) -> int:
        return self.wavenumbers.size


@dataclass
class LabeledDataset:
    """Spectra sharing one wavenumber grid, with one class label per sample."""

    wavenumbers: np.ndarray
    intensities: np.ndarray  # shape (n_samples, n_points)
    labels: list = field(default_factory=list)

    def __post_init__(self):
        self.wavenumbers = np.asarray(self.wavenumbers, dtype=float)
        self.intensities = np.asarray(self.intensities, dtype=float)
        self.labels = list(self.labels)
        if self.intensities.ndim != 2:
            raise InvalidInputError("intensities must be (n_samples, n_points)")
        if self.intensities.shape[0] < 2:
            raise InvalidInputError("dataset needs at least 2 samples")
        if self.intensities.shape[1] != self.wavenumbers.size:
            raise InvalidInputError("grid length does not match sample length")
        if len(self.labels) != self.intensities.shape[0]:
            raise InvalidInputError("one label per sample required")
        if len(set(self.labels)) < 1:
            raise InvalidInputError("at least one class required")

    @property
    def n_samples(self) -> int:
        return self.intensities.shape[0]

    @property
    def classes(self) -> list:
        return sorted(set(self.labels))

    def spectrum(self, i: int) -> Spectrum:
        return Spectrum(self.wavenumbers, self.intensities[i])

    def subset(self, indices) -> "LabeledDataset":
        idx = np.asarray(indices, dtype=int)
        return LabeledDataset(
            self.wavenumbers,
            self.intensities[idx],
            [self.labels[i] for i in idx],
        )

    @classmethod
    def from_spectra(cls, samples: list[Spectrum], labels: list) -> "LabeledDataset":
        if not samples:
            raise InvalidInputError("empty sample list")
        grid = samples[0].wavenumbers
        for s in samples[1:]:
            if s.wavenumbers.shape != grid.shape or not np.array_equal(s.wavenumbers, grid):
                raise InvalidInputError("samples do not share one wavenumber grid")
        return cls(grid, np.stack([s.intensities for s in samples]), labels)


@dataclass(frozen=True)
class PreprocessConfig:
    derivative_order: int = 0
    center: bool = False
    scale: bool = False
    axis: str = "feature"
    take_abs: bool = False

    def __post_init__(self):
        if self.derivative_order not in DERIVATIVE_ORDERS:
            raise InvalidInputError(f"derivative_order must be one of {DERIVATIVE_ORDERS}")
        if self.axis not in SCALE_AXES:
            raise InvalidInputError(f"axis must be one of {SCALE_AXES}")


def _uniform_spacing(wn: np.ndarray) -> float:
    d = np.diff(wn)
    h = d.mean()
    if np.max(np.abs(d - h)) > 1e-6 * abs(h):
        raise InvalidInputError("derivative requires a uniform wavenumber grid")
    return float(h)


def derivative(x: Spectrum, order: int) -> Spectrum:
    """Finite-difference derivative of a spectrum, second-order accurate.

    Central stencils on interior points, one-sided second-order stencils at
    the two endpoints; output has the same length and grid as the input.
    """
    if order not in (1, 2):
        raise InvalidInputError("order must be 1 or 2")
    if len(x) < 5:
        raise InvalidInputError("derivative needs at least 5 points")
    h = _uniform_spacing(x.wavenumbers)
    y = x.intensities
    out = np.empty_like(y)
    if order == 1:
        out[1:-1] = (y[2:] - y[:-2]) / (2.0 * h)
        out[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h)
        out[-1] = (3.0 * y[-1] - 4.0 * y[-2] + y[-3]) / (2.0 * h)
    else:
        h2 = h * h
        out[1:-1] = (y[2:] - 2.0 * y[1:-1] + y[:-2]) / h2
        out[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / h2
        out[-1] = (2.0 * y[-1] - 5.0 * y[-2] + 4.0 * y[-3] - y[-4]) / h2
    return Spectrum(x.wavenumbers, out)


def derivative_matrix(wavenumbers: np.ndarray, y: np.ndarray, order: int) -> np.ndarray:
    """Row-wise version of :func:`derivative` for an (n_samples, n_points) block."""
    if order == 0:
        return y
    if order not in (1, 2):
        raise InvalidInputError("order must be 1 or 2")
    if y.shape[-1] < 5:
        raise InvalidInputError("derivative needs at least 5 points")
    h = _uniform_spacing(np.asarray(wavenumbers, dtype=float))
    out = np.empty_like(y)
    if order == 1:
        out[..., 1:-1] = (y[..., 2:] - y[..., :-2]) / (2.0 * h)
        out[..., 0] = (-3.0 * y[..., 0] + 4.0 * y[..., 1] - y[..., 2]) / (2.0 * h)
        out[..., -1] = (3.0 * y[..., -1] - 4.0 * y[..., -2] + y[..., -3]) / (2.0 * h)
    else:
        h2 = h * h
        out[..., 1:-1] = (y[..., 2:] - 2.0 * y[..., 1:-1] + y[..., :-2]) / h2
        out[..., 0] = (2.0 * y[..., 0] - 5.0 * y[..., 1] + 4.0 * y[..., 2] - y[..., 3]) / h2
        out[..., -1] = (2.0 * y[..., -1] - 5.0 * y[..., -2] + 4.0 * y[..., -3] - y[..., -4]) / h2
    return out


@dataclass(frozen=True)
class ScalerStats:
    """Feature-axis statistics learned on a training block."""

    mean: np.ndarray
    std: np.ndarray  # zero-variance positions carry std = 0 and are never divided


def fit_scaler(y: np.ndarray, cfg: PreprocessConfig) -> ScalerStats | None:
    """Learn feature-axis mean/std on a training block; None if stateless."""
    if cfg.axis != "feature" or not (cfg.center or cfg.scale):
        return None
    if y.shape[0] < 2:
        raise InvalidInputError("feature-axis scaling needs at least 2 samples")
    mean = y.mean(axis=0)
    std = y.std(axis=0)  # population (divisor N)
    return ScalerStats(mean=mean, std=std)


def apply_scaler(y: np.ndarray, cfg: PreprocessConfig, stats: ScalerStats | None) -> np.ndarray:
    """Center and/or scale a block along the configured axis.

    Feature axis uses the fitted stats; sample axis is per-row and stateless.
    Zero-variance positions are centered but never divided.
    """
    if not (cfg.center or cfg.scale):
        return y
    if cfg.axis == "feature":
        if stats is None:
            raise InvalidInputError("feature-axis scaling requires fitted stats")
        mean, std = stats.mean, stats.std
    else:
        mean = y.mean(axis=-1, keepdims=True)
        std = y.std(axis=-1, keepdims=True)
    out = y
    if cfg.center:
        out = out - mean
    if cfg.scale:
        out = out / np.where(std > 0, std, 1.0)
    return out


def standard_scale(data: LabeledDataset, cfg: PreprocessConfig) -> LabeledDataset:
    """Center/scale a whole dataset (fit and apply on the same block)."""
    stats = fit_scaler(data.intensities, cfg)
    scaled = apply_scaler(data.intensities, cfg, stats)
    return LabeledDataset(data.wavenumbers, scaled, data.labels)


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _is_uniform(wn: np.ndarray) -> bool:
    d = np.diff(wn)
    h = d.mean()
    return bool(np.max(np.abs(d - h)) <= 1e-9 * abs(h))


def pow2_grid(wavenumbers: np.ndarray) -> np.ndarray:
    """Uniform grid of 2^ceil(log2 n) points spanning the input range."""
    wn = np.asarray(wavenumbers, dtype=float)
    n = wn.size
    target = 1 << int(np.ceil(np.log2(n)))
    return np.linspace(wn[0], wn[-1], target)


def resample_pow2(x: Spectrum) -> Spectrum:
    """Resample to a power-of-two length with a natural cubic spline.

    The spline interpolates the original samples exactly; the output grid is
    uniform over the original wavenumber range.  Inputs that are already
    uniform with power-of-two length are returned unchanged.
    """
    n = len(x)
    if _is_pow2(n) and _is_uniform(x.wavenumbers):
        return x
    new_wn = pow2_grid(x.wavenumbers)
    new_y = resample_matrix(x.wavenumbers, x.intensities[None, :], new_wn)[0]
    return Spectrum(new_wn, new_y)


def resample_matrix(wavenumbers: np.ndarray, y: np.ndarray, new_wn: np.ndarray) -> np.ndarray:
    """Natural cubic spline resample of an (n_samples, n_points) block."""
    wn = np.asarray(wavenumbers, dtype=float)
    if wn[0] > wn[-1]:  # CubicSpline wants increasing x
        wn = wn[::-1]
        y = y[..., ::-1]
    spline = CubicSpline(wn, y, axis=-1, bc_type="natural")
    return spline(np.asarray(new_wn, dtype=float))


def take_abs(x: Spectrum) -> Spectrum:
    return Spectrum(x.wavenumbers, np.abs(x.intensities))
