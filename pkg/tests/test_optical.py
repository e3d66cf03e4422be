import math

import numpy as np
import pytest

from aucasimir import (ColumnFormat, DataFormatError, DrudeParameters,
                       OpticalDataset, OpticalSample, fill_gap,
                       generate_synthetic_dataset, interpolate_eps2,
                       load_dataset, merge_datasets)

# 0.1 eV * e / hbar, evaluated by hand from CODATA values
OMEGA_01EV = 1.519267e14


def write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestLoadDataset:
    def test_ev_unit_conversion(self, tmp_path):
        path = write(tmp_path, "# unit=eV source=test\n0.1 5.0\n0.2 2.0\n")
        ds = load_dataset(path)
        assert ds.samples[0].omega == pytest.approx(OMEGA_01EV, rel=1e-6)
        assert ds.samples[1].omega == pytest.approx(2 * OMEGA_01EV, rel=1e-6)
        assert ds.samples[0].eps2 == 5.0
        assert ds.samples[0].source_label == "test"

    def test_single_row(self, tmp_path):
        ds = load_dataset(write(tmp_path, "# unit=rad_s\n1e15 3.0\n"))
        assert ds.omega_min == ds.omega_max == 1e15

    def test_out_of_order_rows_sorted(self, tmp_path):
        ds = load_dataset(write(tmp_path, "# unit=rad_s\n2e15 1.0\n1e15 2.0\n"))
        assert [s.omega for s in ds.samples] == [1e15, 2e15]

    def test_comma_separated(self, tmp_path):
        ds = load_dataset(write(tmp_path, "# unit=rad_s\n1e15,3.0\n"))
        assert ds.samples[0].eps2 == 3.0

    def test_malformed_row_reports_line(self, tmp_path):
        path = write(tmp_path, "# unit=rad_s\n1e15 2.0\n1e16 oops\n")
        with pytest.raises(DataFormatError, match=":3"):
            load_dataset(path)

    def test_wrong_column_count_reports_line(self, tmp_path):
        path = write(tmp_path, "# unit=rad_s\n1e15 2.0 7.0\n")
        with pytest.raises(DataFormatError, match=":2"):
            load_dataset(path)

    def test_non_positive_value_rejected(self, tmp_path):
        with pytest.raises(DataFormatError, match="positive"):
            load_dataset(write(tmp_path, "# unit=rad_s\n1e15 -2.0\n"))

    def test_empty_file_rejected(self, tmp_path):
        with pytest.raises(DataFormatError, match="no data"):
            load_dataset(write(tmp_path, "# unit=rad_s\n"))

    def test_missing_unit_rejected(self, tmp_path):
        with pytest.raises(DataFormatError, match="unit"):
            load_dataset(write(tmp_path, "1e15 2.0\n"))

    def test_explicit_format_overrides_header(self, tmp_path):
        path = write(tmp_path, "# unit=eV\n1e15 2.0\n")
        ds = load_dataset(path, fmt=ColumnFormat("rad_s", "forced"))
        assert ds.samples[0].omega == 1e15
        assert ds.samples[0].source_label == "forced"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="nope.csv"):
            load_dataset(tmp_path / "nope.csv")


class TestMergeDatasets:
    def a_and_b(self):
        a = OpticalDataset.from_arrays([1e14, 5e14, 1e15], [10, 5, 2], "a")
        b = OpticalDataset.from_arrays([8e14, 9e14, 2e15, 1e16], [4, 3, 1, 0.5], "b")
        return a, b

    def test_precedence_drops_overlapping_loser_samples(self):
        a, b = self.a_and_b()
        merged = merge_datasets(a, b, precedence="a")
        omegas = [s.omega for s in merged.samples]
        assert omegas == [1e14, 5e14, 1e15, 2e15, 1e16]
        # b's 8e14 and 9e14 fall inside a's span and are gone
        assert all(s.source_label == "a" for s in merged.samples[:3])

    def test_disjoint_ranges_concatenate(self):
        a = OpticalDataset.from_arrays([1e14, 2e14], [1, 2], "a")
        b = OpticalDataset.from_arrays([1e15, 2e15], [3, 4], "b")
        merged = merge_datasets(a, b, precedence="a")
        assert [s.omega for s in merged.samples] == [1e14, 2e14, 1e15, 2e15]

    def test_idempotent(self):
        a, _ = self.a_and_b()
        assert merge_datasets(a, a, precedence="a").samples == a.samples
        assert merge_datasets(a, a, precedence="equal").samples == a.samples

    def test_equal_precedence_conflict(self):
        a = OpticalDataset.from_arrays([1e14], [1.0], "a")
        b = OpticalDataset.from_arrays([1e14], [2.0], "b")
        with pytest.raises(DataFormatError, match="conflict"):
            merge_datasets(a, b, precedence="equal")

    def test_output_satisfies_invariants(self):
        a, b = self.a_and_b()
        merged = merge_datasets(b, a, precedence="b")
        omega = [s.omega for s in merged.samples]
        assert omega == sorted(omega)
        assert len(set(omega)) == len(omega)

    def test_unknown_precedence(self):
        a, b = self.a_and_b()
        with pytest.raises(ValueError, match="precedence"):
            merge_datasets(a, b, precedence="c")


class TestInterpolate:
    def test_exact_at_nodes(self):
        ds = OpticalDataset.from_arrays([1e14, 1e15, 1e16], [10, 1, 0.3])
        for s in ds.samples:
            assert interpolate_eps2(ds, s.omega) == s.eps2

    def test_loglog_midpoint(self):
        ds = OpticalDataset.from_arrays([1e14, 1e15], [10.0, 1.0])
        # hand value: half a decade along the chord, 10^0.5
        assert interpolate_eps2(ds, 10**14.5) == pytest.approx(
            3.1622776601683795, rel=1e-12)

    def test_constant_segment(self):
        ds = OpticalDataset.from_arrays([1e14, 1e15], [5.0, 5.0])
        assert interpolate_eps2(ds, 3e14) == pytest.approx(5.0, rel=1e-12)

    def test_out_of_range(self):
        ds = OpticalDataset.from_arrays([1e14, 1e15], [5.0, 5.0])
        with pytest.raises(ValueError, match="outside"):
            interpolate_eps2(ds, 9e13)
        with pytest.raises(ValueError, match="outside"):
            interpolate_eps2(ds, 1.1e15)

    def test_array_input(self):
        ds = OpticalDataset.from_arrays([1e14, 1e15], [10.0, 1.0])
        out = interpolate_eps2(ds, np.array([1e14, 10**14.5, 1e15]))
        assert out[0] == 10.0 and out[2] == 1.0

    @pytest.mark.parametrize("slope", [-2.5, -1.0, 0.7])
    def test_colinear_property(self, slope):
        # three samples on one log-log line: interior interpolation stays
        # on that line to 1e-12 relative
        omega = np.array([2e14, 7e14, 3e15])
        eps2 = 4.0 * (omega / 1e15) ** slope
        ds = OpticalDataset.from_arrays(omega, eps2)
        for w in np.geomspace(2.2e14, 2.8e15, 7):
            expected = 4.0 * (w / 1e15) ** slope
            assert interpolate_eps2(ds, float(w)) == pytest.approx(
                expected, rel=1e-12)


class TestFillGap:
    def gapped(self):
        return OpticalDataset.from_arrays(
            [1e14, 3e14, 6.3e14, 3.2e15, 6e15], [40, 12, 6.0, 1.5, 2.0], "data")

    def test_inserted_points_on_chord(self):
        ds = self.gapped()
        filled = fill_gap(ds, 6.3e14, 3.2e15, points_per_decade=20)
        new = [s for s in filled.samples if s.source_label == "gapfill"]
        assert new
        ln_slope = math.log(1.5 / 6.0) / math.log(3.2e15 / 6.3e14)
        for s in new:
            assert 6.3e14 < s.omega < 3.2e15
            chord = 6.0 * (s.omega / 6.3e14) ** ln_slope
            assert s.eps2 == pytest.approx(chord, rel=1e-12)

    def test_zero_points_unchanged(self):
        ds = self.gapped()
        assert fill_gap(ds, 6.3e14, 3.2e15, points_per_decade=0).samples == ds.samples

    def test_bracketing_samples_preserved(self):
        filled = fill_gap(self.gapped(), 6.3e14, 3.2e15)
        assert interpolate_eps2(filled, 6.3e14) == 6.0
        assert interpolate_eps2(filled, 3.2e15) == 1.5

    def test_reinterpolation_matches_chord(self):
        filled = fill_gap(self.gapped(), 6.3e14, 3.2e15)
        ln_slope = math.log(1.5 / 6.0) / math.log(3.2e15 / 6.3e14)
        for w in np.geomspace(7e14, 3e15, 9):
            chord = 6.0 * (w / 6.3e14) ** ln_slope
            assert interpolate_eps2(filled, float(w)) == pytest.approx(
                chord, rel=1e-12)

    def test_endpoints_outside_range(self):
        with pytest.raises(ValueError, match="inside"):
            fill_gap(self.gapped(), 1e13, 3.2e15)

    def test_nonempty_gap_rejected(self):
        ds = OpticalDataset.from_arrays([1e14, 5e14, 1e15], [3, 2, 1])
        with pytest.raises(ValueError, match="not empty"):
            fill_gap(ds, 2e14, 1e15)


class TestGenerateSynthetic:
    def test_drude_value_at_relaxation_frequency(self):
        # hand value: eps''(omega_tau) = omega_p^2 / (2 omega_tau^2)
        p = DrudeParameters(1.37e16, 4.06e13)
        ds = generate_synthetic_dataset(
            p, omega_range=(4.06e11, 4.06e15), points_per_decade=25)
        assert interpolate_eps2(ds, 4.06e13) == pytest.approx(5.692967e4, rel=1e-4)

    def test_zero_plasma_frequency_rejected(self):
        with pytest.raises(ValueError):
            generate_synthetic_dataset(DrudeParameters(0.0, 1e13))

    def test_oscillator_decays_far_above_center(self):
        p = DrudeParameters(1.37e16, 4.06e13)
        with_osc = generate_synthetic_dataset(
            p, oscillators=[(1.0, 1e15, 2e14)],
            omega_range=(1e14, 1e18), points_per_decade=20)
        at_center = interpolate_eps2(with_osc, 1e15)
        far_above = interpolate_eps2(with_osc, 1e18)
        assert far_above < 1e-3 * at_center

    def test_bad_oscillator_rejected(self):
        p = DrudeParameters(1.37e16, 4.06e13)
        with pytest.raises(ValueError, match="oscillator"):
            generate_synthetic_dataset(p, oscillators=[(1.0, -1e15, 2e14)])


class TestInvariants:
    def test_sample_validation(self):
        with pytest.raises(ValueError):
            OpticalSample(-1e14, 1.0)
        with pytest.raises(ValueError):
            OpticalSample(1e14, 0.0)

    def test_dataset_requires_strictly_ascending(self):
        with pytest.raises(ValueError, match="ascending"):
            OpticalDataset((OpticalSample(1e14, 1.0), OpticalSample(1e14, 2.0)))

    def test_dataset_requires_samples(self):
        with pytest.raises(ValueError):
            OpticalDataset(())
