"""Two-channel wavelet filter banks: registry, padding, multilevel transform.

Convention (fixed once, validated by the round-trip and energy tests):
analysis filters the border-extended signal by plain convolution
``v[t] = sum_j f[j] x[t - j]`` and keeps the odd phase, ``c[k] = v[2k+1]``;
synthesis upsamples by two, convolves with the reconstruction pair, sums the
branches, and drops ``len(filter) - 2`` leading samples.  The ``periodization``
mode replaces border extension with circular indexing and stores exactly
``ceil(n/2)`` coefficients per branch.

All transforms operate along the last axis, so a whole (n_samples, n_points)
block can be decomposed in one call.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._wavelet_tables import FILTERS
from .errors import InvalidInputError, UnsupportedWaveletError

PADDING_MODES = ("zero", "constant", "symmetric", "reflect", "periodic",
                 "smooth", "periodization")

FAMILIES = {
    "daubechies": "db",
    "symlet": "sym",
    "coiflet": "coif",
    "biorthogonal": "bior",
    "reverse_biorthogonal": "rbio",
}
_ORTHOGONAL_FAMILIES = ("daubechies", "symlet", "coiflet")

SUPPORTED_ORDERS = {
    "daubechies": tuple(str(i) for i in range(1, 9)),
    "symlet": tuple(str(i) for i in range(2, 9)),
    "coiflet": tuple(str(i) for i in range(1, 6)),
    "biorthogonal": ("1.1", "1.3", "1.5", "2.2", "2.4", "2.6", "2.8",
                     "3.1", "3.3", "3.5", "3.7"),
    "reverse_biorthogonal": ("1.1", "1.3", "1.5", "2.2", "2.4", "2.6", "2.8",
                             "3.1", "3.3", "3.5", "3.7"),
}


@dataclass(frozen=True)
class WaveletSpec:
    """Decomposition/reconstruction filter quadruple for one wavelet."""

    family: str
    order: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray

    @property
    def name(self) -> str:
        return f"{FAMILIES[self.family]}{self.order}"

    @property
    def filter_length(self) -> int:
        return self.dec_lo.size

    @property
    def is_orthogonal(self) -> bool:
        return self.family in _ORTHOGONAL_FAMILIES


def _normalize_order(order) -> str:
    if isinstance(order, float) and order == int(order):
        return str(int(order))
    return str(order)


def lookup_wavelet(family: str, order) -> WaveletSpec:
    """Fetch the embedded filter quadruple for (family, order)."""
    if family not in FAMILIES:
        raise UnsupportedWaveletError(
            f"unknown family {family!r}; supported: {sorted(FAMILIES)}")
    order_s = _normalize_order(order)
    if order_s not in SUPPORTED_ORDERS[family]:
        raise UnsupportedWaveletError(
            f"unsupported order {order!r} for {family}; "
            f"supported: {SUPPORTED_ORDERS[family]}")
    key = f"{FAMILIES[family]}{order_s}"
    dec_lo, dec_hi, rec_lo, rec_hi = (np.asarray(f, dtype=float) for f in FILTERS[key])
    return WaveletSpec(family, order_s, dec_lo, dec_hi, rec_lo, rec_hi)


def iter_registry():
    for family, orders in SUPPORTED_ORDERS.items():
        for order in orders:
            yield lookup_wavelet(family, order)


def dump_registry() -> str:
    """Delimited table of every embedded filter (for auditing)."""
    lines = ["family\torder\tfilter\ttaps"]
    for w in iter_registry():
        for role in ("dec_lo", "dec_hi", "rec_lo", "rec_hi"):
            taps = ",".join(repr(float(v)) for v in getattr(w, role))
            lines.append(f"{w.family}\t{w.order}\t{role}\t{taps}")
    return "\n".join(lines) + "\n"


def pad(x: np.ndarray, mode: str, left: int, right: int) -> np.ndarray:
    """Extend a signal (last axis) by the named boundary rule."""
    if mode not in PADDING_MODES:
        raise InvalidInputError(f"unknown padding mode {mode!r}")
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    if left < 0 or right < 0:
        raise InvalidInputError("pad lengths must be non-negative")
    if mode in ("periodization", "periodic", "symmetric", "reflect"):
        if max(left, right) > n:
            raise InvalidInputError(
                f"pad length {max(left, right)} exceeds signal length {n} for mode {mode!r}")
    width = [(0, 0)] * (x.ndim - 1) + [(left, right)]
    if mode == "zero":
        return np.pad(x, width, mode="constant")
    if mode == "constant":
        return np.pad(x, width, mode="edge")
    if mode == "symmetric":
        return np.pad(x, width, mode="symmetric")
    if mode == "reflect":
        return np.pad(x, width, mode="reflect")
    if mode == "periodic":
        return np.pad(x, width, mode="wrap")
    if mode == "smooth":
        out = np.pad(x, width, mode="constant")
        lslope = x[..., 0] - x[..., 1]
        rslope = x[..., -1] - x[..., -2]
        if left:
            steps = np.arange(left, 0, -1)
            out[..., :left] = x[..., :1] + lslope[..., None] * steps
        if right:
            steps = np.arange(1, right + 1)
            out[..., -right:] = x[..., -1:] + rslope[..., None] * steps
        return out
    # periodization: extend to even length by edge repeat, then wrap
    if n % 2 == 1:
        x = np.concatenate([x, x[..., -1:]], axis=-1)
    return np.pad(x, width, mode="wrap")


def _even_extend(x: np.ndarray) -> np.ndarray:
    if x.shape[-1] % 2 == 1:
        return np.concatenate([x, x[..., -1:]], axis=-1)
    return x


def _analysis_lengths(n: int, filter_length: int, mode: str) -> int:
    if mode == "periodization":
        return (n + 1) // 2
    return (n + filter_length - 1) // 2


def dwt_single(x: np.ndarray, w: WaveletSpec, mode: str) -> tuple[np.ndarray, np.ndarray]:
    """One analysis step: filter + downsample along the last axis."""
    if mode not in PADDING_MODES:
        raise InvalidInputError(f"unknown padding mode {mode!r}")
    x = np.asarray(x, dtype=float)
    L = w.filter_length
    n = x.shape[-1]
    if n < L:
        raise InvalidInputError(f"signal length {n} shorter than filter length {L}")
    if mode == "periodization":
        xe = _even_extend(x)
        ne = xe.shape[-1]
        k = ne // 2
        idx = (2 * np.arange(k)[:, None] + 1 - np.arange(L)[None, :]) % ne
        win = xe[..., idx]
        approx = win @ w.dec_lo
        detail = win @ w.dec_hi
        return approx, detail
    ext = pad(x, mode, L - 1, L - 1)
    win = np.lib.stride_tricks.sliding_window_view(ext, L, axis=-1)
    approx = (win @ w.dec_lo[::-1])[..., 1::2]
    detail = (win @ w.dec_hi[::-1])[..., 1::2]
    return approx, detail


def idwt_single(approx: np.ndarray, detail: np.ndarray, w: WaveletSpec,
                mode: str, out_length: int) -> np.ndarray:
    """One synthesis step, trimming to the stored input length."""
    a = np.asarray(approx, dtype=float)
    d = np.asarray(detail, dtype=float)
    if a.shape != d.shape:
        raise InvalidInputError("approx/detail shapes differ")
    L = w.filter_length
    k = a.shape[-1]
    if mode == "periodization":
        ne = 2 * k
        if not out_length <= ne:
            raise InvalidInputError("inconsistent bookkeeping lengths")
        out = np.zeros(a.shape[:-1] + (ne,))
        base = (2 * np.arange(k) + 2 - L) % ne
        for j in range(L):
            pos = (base + j) % ne
            out[..., pos] += a * w.rec_lo[j] + d * w.rec_hi[j]
        return out[..., :out_length]
    full = 2 * k + L - 1
    if not (L - 2 + out_length) <= full:
        raise InvalidInputError("inconsistent bookkeeping lengths")
    out = np.zeros(a.shape[:-1] + (full,))
    for j in range(L):
        out[..., j:j + 2 * k:2] += a * w.rec_lo[j] + d * w.rec_hi[j]
    start = L - 2
    return out[..., start:start + out_length]


def max_level(n: int, w: WaveletSpec) -> int:
    """Deepest usable decomposition level for a length-n signal."""
    denom = w.filter_length - 1
    if n < w.filter_length:
        return 0
    return int(math.floor(math.log2(n / denom)))


@dataclass
class DwtCoeffs:
    """Multilevel transform output with bookkeeping for exact inversion.

    ``details`` are coarsest-first; ``level_lengths[i]`` is the length the
    i-th synthesis step must restore (so the last entry is original_length).
    """

    approx: np.ndarray
    details: list = field(default_factory=list)
    level_lengths: list = field(default_factory=list)
    wavelet: WaveletSpec | None = None
    mode: str = "symmetric"
    original_length: int = 0

    def block_sizes(self) -> list[int]:
        return [self.approx.shape[-1]] + [d.shape[-1] for d in self.details]

    @property
    def total_length(self) -> int:
        return sum(self.block_sizes())


def wavedec(x: np.ndarray, w: WaveletSpec, mode: str, level: int) -> DwtCoeffs:
    """Recursive analysis of the approximation branch down to ``level``."""
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    lmax = max_level(n, w)
    if level < 1 or level > lmax:
        raise InvalidInputError(
            f"level {level} out of range 1..{lmax} for n={n}, filter {w.name}")
    details_fine_first = []
    lengths = []
    cur = x
    for _ in range(level):
        lengths.append(cur.shape[-1])
        cur, det = dwt_single(cur, w, mode)
        details_fine_first.append(det)
    return DwtCoeffs(
        approx=cur,
        details=details_fine_first[::-1],
        level_lengths=lengths[::-1],
        wavelet=w,
        mode=mode,
        original_length=n,
    )


def waverec(c: DwtCoeffs) -> np.ndarray:
    """Invert :func:`wavedec`, restoring exactly ``original_length`` samples."""
    if c.wavelet is None:
        raise InvalidInputError("coefficients carry no wavelet")
    if len(c.details) != len(c.level_lengths):
        raise InvalidInputError("inconsistent bookkeeping lengths")
    cur = c.approx
    for det, out_len in zip(c.details, c.level_lengths):
        if det.shape[-1] != cur.shape[-1]:
            raise InvalidInputError("inconsistent detail block length")
        cur = idwt_single(cur, det, c.wavelet, c.mode, out_len)
    if cur.shape[-1] != c.original_length:
        raise InvalidInputError("bookkeeping does not restore the original length")
    return cur


def flatten(c: DwtCoeffs) -> np.ndarray:
    """Concatenate approx then details coarsest-to-finest (last axis)."""
    return np.concatenate([c.approx] + list(c.details), axis=-1)


def unflatten(vec: np.ndarray, template: DwtCoeffs) -> DwtCoeffs:
    """Rebuild a coefficient set from a flat vector using a template's shape."""
    vec = np.asarray(vec, dtype=float)
    sizes = template.block_sizes()
    if vec.shape[-1] != sum(sizes):
        raise InvalidInputError(
            f"flat length {vec.shape[-1]} does not match blocks {sizes}")
    splits = np.cumsum(sizes)[:-1]
    parts = np.split(vec, splits, axis=-1)
    return DwtCoeffs(
        approx=parts[0],
        details=list(parts[1:]),
        level_lengths=list(template.level_lengths),
        wavelet=template.wavelet,
        mode=template.mode,
        original_length=template.original_length,
    )
