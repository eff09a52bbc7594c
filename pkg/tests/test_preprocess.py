"""Tests for spectrum containers and preprocessing steps."""
import numpy as np
import pytest

from wavefeat.errors import InvalidInputError
from wavefeat.preprocess import (LabeledDataset, PreprocessConfig, Spectrum,
                                 apply_scaler, derivative, derivative_matrix,
                                 fit_scaler, pow2_grid, resample_pow2,
                                 standard_scale, take_abs)


def _spec(y, wn=None):
    y = np.asarray(y, dtype=float)
    if wn is None:
        wn = np.arange(y.size, dtype=float)
    return Spectrum(wn, y)


class TestSpectrumValidation:
    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            Spectrum(np.arange(5.0), np.arange(4.0))

    def test_non_monotone(self):
        with pytest.raises(InvalidInputError):
            Spectrum(np.array([0.0, 1.0, 1.0, 2.0]), np.zeros(4))

    def test_descending_grid_ok(self):
        s = Spectrum(np.array([4.0, 3.0, 2.0, 1.0]), np.ones(4))
        assert len(s) == 4

    def test_non_finite(self):
        with pytest.raises(InvalidInputError):
            Spectrum(np.arange(4.0), np.array([0.0, np.nan, 0.0, 0.0]))


class TestDerivative:
    def test_constant_first(self):
        out = derivative(_spec(np.full(9, 5.0)), 1)
        assert np.max(np.abs(out.intensities)) <= 1e-12

    def test_linear_ramp(self):
        wn = np.arange(10.0)
        out = derivative(Spectrum(wn, 3.0 * wn), 1)
        assert np.allclose(out.intensities, 3.0, atol=1e-10)

    def test_quadratic_second(self):
        wn = np.arange(12.0)
        out = derivative(Spectrum(wn, wn ** 2), 2)
        assert np.allclose(out.intensities[1:-1], 2.0, atol=1e-9)

    def test_endpoint_stencils_second_order(self):
        # second-order one-sided stencils are exact for quadratics
        wn = np.arange(8.0)
        out = derivative(Spectrum(wn, wn ** 2), 1)
        assert np.allclose(out.intensities, 2.0 * wn, atol=1e-9)
        out2 = derivative(Spectrum(wn, wn ** 2), 2)
        assert np.allclose(out2.intensities, 2.0, atol=1e-9)

    def test_non_uniform_grid_rejected(self):
        wn = np.array([0.0, 1.0, 2.5, 3.0, 4.0, 5.0])
        with pytest.raises(InvalidInputError):
            derivative(Spectrum(wn, np.zeros(6)), 1)

    def test_descending_grid_sign(self):
        wn = np.linspace(10.0, 1.0, 10)
        out = derivative(Spectrum(wn, 2.0 * wn), 1)
        assert np.allclose(out.intensities, 2.0, atol=1e-10)

    def test_matrix_matches_single(self):
        rng = np.random.default_rng(0)
        wn = np.arange(16.0)
        block = rng.standard_normal((3, 16))
        out = derivative_matrix(wn, block, 2)
        for i in range(3):
            single = derivative(Spectrum(wn, block[i]), 2)
            assert np.allclose(out[i], single.intensities)

    def test_bad_order(self):
        with pytest.raises(InvalidInputError):
            derivative(_spec(np.arange(6.0)), 3)


class TestStandardScale:
    def _dataset(self, arr):
        arr = np.asarray(arr, dtype=float)
        return LabeledDataset(np.arange(arr.shape[1], dtype=float), arr,
                              ["a"] * arr.shape[0])

    def test_feature_axis_stats(self):
        rng = np.random.default_rng(1)
        data = self._dataset(rng.standard_normal((12, 6)) * 3 + 1)
        cfg = PreprocessConfig(center=True, scale=True, axis="feature")
        out = standard_scale(data, cfg)
        assert np.max(np.abs(out.intensities.mean(axis=0))) <= 1e-12
        assert np.max(np.abs(out.intensities.std(axis=0) - 1)) <= 1e-12

    def test_constant_feature_column_zeroed(self):
        arr = np.array([[1.0, 2.0], [1.0, 4.0], [1.0, 9.0]])
        cfg = PreprocessConfig(center=True, scale=True, axis="feature")
        out = standard_scale(self._dataset(arr), cfg)
        assert np.allclose(out.intensities[:, 0], 0.0)

    def test_sample_axis_hand_computed(self):
        arr = np.array([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]])
        cfg = PreprocessConfig(center=True, scale=True, axis="sample")
        out = standard_scale(self._dataset(arr), cfg)
        expect = np.array([-1.2247448713915890, 0.0, 1.2247448713915890])
        assert np.allclose(out.intensities[0], expect, atol=1e-12)

    def test_identity_when_disabled(self):
        rng = np.random.default_rng(2)
        arr = rng.standard_normal((4, 5))
        cfg = PreprocessConfig(center=False, scale=False)
        out = standard_scale(self._dataset(arr), cfg)
        assert np.array_equal(out.intensities, arr)

    def test_feature_axis_needs_two_samples(self):
        cfg = PreprocessConfig(center=True, axis="feature")
        with pytest.raises(InvalidInputError):
            fit_scaler(np.ones((1, 4)), cfg)

    def test_apply_scaler_requires_stats(self):
        cfg = PreprocessConfig(center=True, axis="feature")
        with pytest.raises(InvalidInputError):
            apply_scaler(np.ones((2, 3)), cfg, None)


class TestResamplePow2:
    def test_pow2_uniform_unchanged(self):
        wn = np.linspace(0, 1, 1024)
        s = Spectrum(wn, np.sin(wn))
        out = resample_pow2(s)
        assert out is s

    def test_linear_reproduction(self):
        wn = np.linspace(2000.0, 400.0, 1000)
        s = Spectrum(wn, 0.5 * wn + 3.0)
        out = resample_pow2(s)
        assert len(out) == 1024
        assert np.allclose(out.intensities, 0.5 * out.wavenumbers + 3.0, atol=1e-9)

    def test_sine_interpolation_error(self):
        n = 1000
        wn = np.linspace(0.0, 50.0, n)  # 20 samples per period of sin(2 pi x / 1)
        s = Spectrum(wn, np.sin(2 * np.pi * wn / 2.5))
        out = resample_pow2(s)
        assert len(out) == 1024
        err = np.max(np.abs(out.intensities - np.sin(2 * np.pi * out.wavenumbers / 2.5)))
        assert err <= 1e-4

    def test_output_grid_uniform_pow2(self):
        rng = np.random.default_rng(3)
        wn = np.sort(rng.uniform(0, 10, 100))
        s = Spectrum(wn, rng.standard_normal(100))
        out = resample_pow2(s)
        n = len(out)
        assert n == 128 and (n & (n - 1)) == 0
        assert np.allclose(np.diff(out.wavenumbers), np.diff(out.wavenumbers)[0])

    def test_knot_passthrough(self):
        # resampling a descending grid keeps the endpoints exactly
        wn = np.linspace(100.0, 10.0, 37)
        y = np.cos(wn / 7.0)
        out = resample_pow2(Spectrum(wn, y))
        assert out.wavenumbers[0] == wn[0] and out.wavenumbers[-1] == wn[-1]
        assert abs(out.intensities[0] - y[0]) <= 1e-12
        assert abs(out.intensities[-1] - y[-1]) <= 1e-12

    def test_pow2_grid_helper(self):
        assert pow2_grid(np.linspace(0, 1, 1000)).size == 1024


class TestTakeAbs:
    def test_examples(self):
        s = _spec([-1.0, 2.0, -3.0, 4.0])
        assert np.array_equal(take_abs(s).intensities, [1.0, 2.0, 3.0, 4.0])
        pos = _spec([1.0, 2.0, 3.0, 4.0])
        assert np.array_equal(take_abs(pos).intensities, pos.intensities)

    def test_idempotent(self):
        s = _spec([-1.0, 2.0, -3.0, 0.0, 5.0])
        once = take_abs(s)
        assert np.array_equal(take_abs(once).intensities, once.intensities)


class TestLabeledDataset:
    def test_grid_consistency_enforced(self):
        a = Spectrum(np.arange(4.0), np.ones(4))
        b = Spectrum(np.arange(1.0, 5.0), np.ones(4))
        with pytest.raises(InvalidInputError):
            LabeledDataset.from_spectra([a, b], ["x", "y"])

    def test_label_count(self):
        with pytest.raises(InvalidInputError):
            LabeledDataset(np.arange(4.0), np.ones((2, 4)), ["only-one"])

    def test_subset(self):
        data = LabeledDataset(np.arange(4.0), np.arange(12.0).reshape(3, 4),
                              ["a", "b", "c"])
        sub = data.subset([2, 0])
        assert sub.labels == ["c", "a"]
        assert np.array_equal(sub.intensities[0], data.intensities[2])
