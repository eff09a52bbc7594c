"""Tests for the wavelet filter banks."""
import numpy as np
import pytest

from wavefeat import dwt
from wavefeat.errors import InvalidInputError, UnsupportedWaveletError

SQ2 = np.sqrt(2.0)


class TestRegistry:
    def test_haar_taps(self):
        w = dwt.lookup_wavelet("daubechies", 1)
        assert np.allclose(w.dec_lo, [1 / SQ2, 1 / SQ2], atol=1e-12)

    def test_admissibility_sweep(self):
        for w in dwt.iter_registry():
            if w.is_orthogonal:
                assert abs(w.dec_lo.sum() - SQ2) <= 1e-10, w.name
                assert abs(w.dec_lo @ w.dec_lo - 1.0) <= 1e-10, w.name
                assert abs(w.dec_lo @ w.dec_hi) <= 1e-10, w.name

    def test_unknown_order(self):
        with pytest.raises(UnsupportedWaveletError):
            dwt.lookup_wavelet("coiflet", 99)
        with pytest.raises(UnsupportedWaveletError):
            dwt.lookup_wavelet("haarish", 1)

    def test_bior_order_forms(self):
        a = dwt.lookup_wavelet("biorthogonal", "2.4")
        b = dwt.lookup_wavelet("biorthogonal", 2.4)
        assert np.array_equal(a.dec_lo, b.dec_lo)

    def test_registry_size(self):
        assert sum(1 for _ in dwt.iter_registry()) == 42

    def test_dump_registry_shape(self):
        text = dwt.dump_registry()
        lines = text.strip().split("\n")
        assert lines[0] == "family\torder\tfilter\ttaps"
        assert len(lines) == 1 + 42 * 4


class TestPad:
    def test_zero(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "zero", 2, 2)
        assert np.array_equal(out, [0, 0, 1, 2, 3, 0, 0])

    def test_symmetric(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "symmetric", 2, 2)
        assert np.array_equal(out, [2, 1, 1, 2, 3, 3, 2])

    def test_periodic(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "periodic", 2, 2)
        assert np.array_equal(out, [2, 3, 1, 2, 3, 1, 2])

    def test_reflect(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "reflect", 2, 2)
        assert np.array_equal(out, [3, 2, 1, 2, 3, 2, 1])

    def test_constant(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "constant", 2, 1)
        assert np.array_equal(out, [1, 1, 1, 2, 3, 3])

    def test_smooth(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "smooth", 2, 2)
        assert np.array_equal(out, [-1, 0, 1, 2, 3, 4, 5])

    def test_periodization_odd(self):
        out = dwt.pad(np.array([1.0, 2, 3]), "periodization", 1, 1)
        assert np.array_equal(out, [3, 1, 2, 3, 3, 1])

    def test_pad_too_large(self):
        with pytest.raises(InvalidInputError):
            dwt.pad(np.array([1.0, 2, 3]), "periodic", 4, 0)

    def test_unknown_mode(self):
        with pytest.raises(InvalidInputError):
            dwt.pad(np.array([1.0, 2, 3]), "wrap around", 1, 1)


class TestDwtSingle:
    def test_constant_haar_periodization(self):
        w = dwt.lookup_wavelet("daubechies", 1)
        a, d = dwt.dwt_single(np.full(4, 2.0), w, "periodization")
        assert np.allclose(a, [2 * SQ2, 2 * SQ2])
        assert np.allclose(d, 0.0, atol=1e-12)

    def test_haar_1234(self):
        w = dwt.lookup_wavelet("daubechies", 1)
        a, d = dwt.dwt_single(np.array([1.0, 2, 3, 4]), w, "periodization")
        assert np.allclose(a, [3 / SQ2, 7 / SQ2])
        assert np.allclose(np.abs(d), [1 / SQ2, 1 / SQ2])

    def test_haar_energy(self):
        rng = np.random.default_rng(0)
        w = dwt.lookup_wavelet("daubechies", 1)
        x = rng.standard_normal(32)
        a, d = dwt.dwt_single(x, w, "periodization")
        assert abs(np.sum(a ** 2) + np.sum(d ** 2) - np.sum(x ** 2)) <= 1e-10

    def test_output_lengths(self):
        for name, order in (("daubechies", 4), ("coiflet", 2), ("biorthogonal", "3.5")):
            w = dwt.lookup_wavelet(name, order)
            n = 45
            x = np.zeros(n)
            for mode in dwt.PADDING_MODES:
                a, d = dwt.dwt_single(x, w, mode)
                expect = (n + 1) // 2 if mode == "periodization" \
                    else (n + w.filter_length - 1) // 2
                assert a.shape[-1] == d.shape[-1] == expect, (name, mode)

    def test_too_short(self):
        w = dwt.lookup_wavelet("coiflet", 5)
        with pytest.raises(InvalidInputError):
            dwt.dwt_single(np.zeros(10), w, "symmetric")


class TestMultilevel:
    def test_level1_equals_single(self):
        rng = np.random.default_rng(1)
        w = dwt.lookup_wavelet("symlet", 4)
        x = rng.standard_normal(64)
        c = dwt.wavedec(x, w, "symmetric", 1)
        a, d = dwt.dwt_single(x, w, "symmetric")
        assert np.array_equal(c.approx, a)
        assert np.array_equal(c.details[0], d)

    def test_max_level_haar_1024(self):
        w = dwt.lookup_wavelet("daubechies", 1)
        assert dwt.max_level(1024, w) == 10

    def test_level_out_of_range(self):
        w = dwt.lookup_wavelet("daubechies", 4)
        x = np.zeros(64)
        with pytest.raises(InvalidInputError):
            dwt.wavedec(x, w, "symmetric", 0)
        with pytest.raises(InvalidInputError):
            dwt.wavedec(x, w, "symmetric", dwt.max_level(64, w) + 1)

    def test_round_trip_db4_symmetric(self):
        rng = np.random.default_rng(2)
        w = dwt.lookup_wavelet("daubechies", 4)
        x = rng.standard_normal(64)
        c = dwt.wavedec(x, w, "symmetric", 3)
        assert np.max(np.abs(dwt.waverec(c) - x)) <= 1e-10

    @pytest.mark.parametrize("mode", dwt.PADDING_MODES)
    def test_round_trip_modes_sample(self, mode):
        # a light sweep; the full registry x mode x level sweep runs in the
        # acceptance suite
        rng = np.random.default_rng(3)
        for name, order in (("daubechies", 2), ("symlet", 5), ("coiflet", 1),
                            ("biorthogonal", "3.3"), ("reverse_biorthogonal", "1.5")):
            w = dwt.lookup_wavelet(name, order)
            for n in (37, 64):
                lmax = dwt.max_level(n, w)
                if lmax < 1:
                    continue
                x = rng.standard_normal((3, n))
                c = dwt.wavedec(x, w, mode, lmax)
                assert np.max(np.abs(dwt.waverec(c) - x)) <= 1e-8, (name, mode, n)

    def test_zero_coeffs_zero_signal(self):
        w = dwt.lookup_wavelet("daubechies", 2)
        c = dwt.wavedec(np.zeros(32), w, "periodic", 2)
        assert np.max(np.abs(dwt.waverec(c))) == 0.0

    def test_energy_conservation_orthogonal_periodization(self):
        rng = np.random.default_rng(4)
        x = rng.standard_normal(128)
        e0 = np.sum(x ** 2)
        for w in dwt.iter_registry():
            if not w.is_orthogonal:
                continue
            lmax = dwt.max_level(128, w)
            c = dwt.wavedec(x, w, "periodization", lmax)
            e = np.sum(dwt.flatten(c) ** 2)
            assert abs(e - e0) / e0 <= 1e-9, w.name

    def test_constant_kills_details(self):
        x = np.full(128, 3.7)
        for w in dwt.iter_registry():
            if not w.is_orthogonal:
                continue
            c = dwt.wavedec(x, w, "periodization", dwt.max_level(128, w))
            for det in c.details:
                assert np.max(np.abs(det)) <= 1e-10, w.name

    def test_linearity(self):
        rng = np.random.default_rng(5)
        w = dwt.lookup_wavelet("coiflet", 2)
        x, y = rng.standard_normal((2, 50))
        ca = dwt.flatten(dwt.wavedec(2.0 * x + 3.0 * y, w, "reflect", 2))
        cb = 2.0 * dwt.flatten(dwt.wavedec(x, w, "reflect", 2)) + \
            3.0 * dwt.flatten(dwt.wavedec(y, w, "reflect", 2))
        assert np.max(np.abs(ca - cb)) <= 1e-10


class TestFlatten:
    def test_level1_haar_layout(self):
        w = dwt.lookup_wavelet("daubechies", 1)
        c = dwt.wavedec(np.array([1.0, 2, 3, 4]), w, "periodization", 1)
        flat = dwt.flatten(c)
        assert flat.shape == (4,)
        assert np.array_equal(flat[:2], c.approx)
        assert np.array_equal(flat[2:], c.details[0])

    def test_unflatten_round_trip(self):
        rng = np.random.default_rng(6)
        w = dwt.lookup_wavelet("symlet", 3)
        x = rng.standard_normal(96)
        c = dwt.wavedec(x, w, "smooth", 3)
        flat = dwt.flatten(c)
        assert flat.shape[-1] == c.total_length
        c2 = dwt.unflatten(flat, c)
        assert np.max(np.abs(dwt.waverec(c2) - x)) <= 1e-8

    def test_unflatten_length_check(self):
        w = dwt.lookup_wavelet("daubechies", 2)
        c = dwt.wavedec(np.zeros(32), w, "zero", 2)
        with pytest.raises(InvalidInputError):
            dwt.unflatten(np.zeros(c.total_length + 1), c)
