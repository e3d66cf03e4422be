import mpmath as mp
import numpy as np
import pytest
from scipy.constants import c, epsilon_0

from aucasimir import (DielectricModel, DrudeParameters,
                       FrequencyBoundaries, drude_eps_imag_axis,
                       drude_eps_real_axis, epsilon1_analytic, fit_drude,
                       generate_synthetic_dataset, kk_epsilon, resistivity)
from aucasimir.optical import OMEGA0_DEFAULT


class TestDrudeRealAxis:
    def test_hand_values(self, single_crystal):
        eps = drude_eps_real_axis(single_crystal, 1e15)
        assert eps.real == pytest.approx(-186.4334, rel=1e-5)
        assert eps.imag == pytest.approx(6.935036, rel=1e-5)

    def test_high_frequency_limit(self, single_crystal):
        assert drude_eps_real_axis(single_crystal, 1e22) == pytest.approx(1.0, abs=1e-10)

    def test_plasma_edge(self):
        p = DrudeParameters(1e16, 1e10)  # omega_tau << omega_p
        assert drude_eps_real_axis(p, 1e16).real == pytest.approx(0.0, abs=1e-9)

    def test_zero_frequency_rejected(self, single_crystal):
        with pytest.raises(ValueError):
            drude_eps_real_axis(single_crystal, 0.0)


class TestDrudeImagAxis:
    def test_hand_value(self, row1):
        assert drude_eps_imag_axis(row1, 2.379e15) == pytest.approx(33.90465, rel=1e-5)

    def test_above_one_and_decreasing(self, row1):
        grid = np.logspace(11, 18, 30)
        values = [drude_eps_imag_axis(row1, z) for z in grid]
        assert all(v > 1.0 for v in values)
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_high_frequency_limit(self, row1):
        assert drude_eps_imag_axis(row1, 1e22) == pytest.approx(1.0, abs=1e-9)

    def test_static_limit_resistivity(self, row1):
        # zeta (eps - 1) eps0 rho -> 1 as zeta -> 0
        rho_si = resistivity(row1) / 1e8
        zeta = 1e10
        product = zeta * (drude_eps_imag_axis(row1, zeta) - 1.0) * epsilon_0 * rho_si
        assert product == pytest.approx(1.0, rel=1e-3)

    def test_zero_rejected(self, row1):
        with pytest.raises(ValueError):
            drude_eps_imag_axis(row1, 0.0)


class TestResistivity:
    @pytest.mark.parametrize("params,expected", [
        ((1.38e16, 5.38e13), 3.19),
        ((1.37e16, 4.06e13), 2.44),
        ((1.28e16, 3.29e13), 2.27),
    ])
    def test_table_rows(self, params, expected):
        assert resistivity(DrudeParameters(*params)) == pytest.approx(expected, rel=1e-2)

    def test_from_resistivity_roundtrip(self):
        p = DrudeParameters.from_resistivity(1.37e16, 2.3)
        assert resistivity(p) == pytest.approx(2.3, rel=1e-12)


def eps1_mpmath(p, omega0, zeta=None, rel_offset=None, dps=50):
    """High-precision reference for the analytic low-frequency part.

    Either an absolute zeta or a relative offset from omega_tau; offsets
    are applied at working precision so arbitrarily small ones survive.
    """
    with mp.workdps(dps):
        wp, wt = mp.mpf(p.omega_p), mp.mpf(p.omega_tau)
        w0 = mp.mpf(omega0)
        z = wt * (1 + mp.mpf(rel_offset)) if zeta is None else mp.mpf(zeta)
        bracket = mp.atan(w0 / wt) - (wt / z) * mp.atan(w0 / z)
        return float(2 / mp.pi * wp**2 / (z**2 - wt**2) * bracket)


class TestEpsilon1Analytic:
    def test_anchor_value(self, row1):
        zeta = c / (2 * 63e-9)
        eps1 = epsilon1_analytic(row1, OMEGA0_DEFAULT, zeta)
        assert eps1 == pytest.approx(26.6, abs=0.5)
        # frozen regression of the exact formula value
        assert eps1 == pytest.approx(26.334, rel=1e-3)

    def test_zero_interval(self, row1):
        assert epsilon1_analytic(row1, 0.0, 1e15) == 0.0

    @pytest.mark.parametrize("zeta", [1e14, 1e15, 2.4e15])
    def test_wide_interval_recovers_drude(self, row1, zeta):
        eps1 = epsilon1_analytic(row1, 1e25, zeta)
        assert eps1 == pytest.approx(drude_eps_imag_axis(row1, zeta) - 1.0, rel=1e-6)

    @pytest.mark.parametrize("offset", [0.0, 1e-7, -1e-7, 1e-5, -1e-5,
                                        5e-5, 2e-4, 1e-3])
    def test_removable_singularity(self, row1, offset):
        # series path near zeta = omega_tau against a 50-digit evaluation
        zeta = row1.omega_tau * (1.0 + offset)
        if offset == 0.0:
            reference = eps1_mpmath(row1, OMEGA0_DEFAULT, rel_offset="1e-30")
        else:
            reference = eps1_mpmath(row1, OMEGA0_DEFAULT, zeta)
        assert epsilon1_analytic(row1, OMEGA0_DEFAULT, zeta) == pytest.approx(
            reference, rel=1e-6)

    def test_invalid_zeta(self, row1):
        with pytest.raises(ValueError):
            epsilon1_analytic(row1, OMEGA0_DEFAULT, -1.0)


class TestFitDrude:
    def test_recovers_exact_parameters(self, pure_drude_dataset, row2):
        fit = fit_drude(pure_drude_dataset, (2e14, 2e15))
        assert fit.parameters.omega_p == pytest.approx(row2.omega_p, rel=1e-6)
        assert fit.parameters.omega_tau == pytest.approx(row2.omega_tau, rel=1e-6)
        assert fit.rms_log_residual < 1e-9

    def test_fixed_omega_p_compensates(self, pure_drude_dataset):
        fit = fit_drude(pure_drude_dataset, (2e14, 2e15), omega_p_fixed=1.38e16)
        assert fit.parameters.omega_p == 1.38e16
        # omega_tau shifts to track omega_p^2 omega_tau, curve still close
        assert fit.rms_log_residual < 0.05

    def test_too_few_points(self, row2):
        ds = generate_synthetic_dataset(row2, omega_range=(1e14, 1e16),
                                        points_per_decade=1)
        with pytest.raises(ValueError, match="3 samples"):
            fit_drude(ds, (9e14, 2e15))

    def test_range_outside_coverage(self, pure_drude_dataset):
        with pytest.raises(ValueError, match="coverage"):
            fit_drude(pure_drude_dataset, (1e12, 1e13))


class TestKKEpsilon:
    def test_drude_identity_at_1e15(self, pure_drude_dataset, row2):
        model = DielectricModel(row2, pure_drude_dataset)
        closed = 1.0 + row2.omega_p**2 / (1e15 * (1e15 + row2.omega_tau))
        assert model.epsilon(1e15) == pytest.approx(closed, rel=1e-3)

    def test_far_above_data(self, pure_drude_dataset, row2):
        dec = kk_epsilon(DielectricModel(row2, pure_drude_dataset), 1e18)
        assert dec.eps1 < 1e-2
        assert dec.eps2_part < 1e-2
        assert dec.eps3_part < 1e-2
        assert dec.total == pytest.approx(1.0, abs=3e-2)

    def test_parts_positive_and_total_consistent(self, pure_drude_dataset, row2):
        dec = kk_epsilon(DielectricModel(row2, pure_drude_dataset), 2.4e15)
        assert dec.eps1 > 0 and dec.eps2_part > 0 and dec.eps3_part > 0
        assert dec.total == 1.0 + dec.eps1 + dec.eps2_part + dec.eps3_part

    def test_total_decreasing(self, pure_drude_dataset, row2):
        model = DielectricModel(row2, pure_drude_dataset)
        values = [model.epsilon(z) for z in np.logspace(13.5, 16.5, 7)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(v > 1 for v in values)

    def test_invalid_zeta(self, pure_drude_dataset, row2):
        with pytest.raises(ValueError):
            kk_epsilon(DielectricModel(row2, pure_drude_dataset), 0.0)

    def test_tail_exponent_insensitive_with_wide_data(self, pure_drude_dataset, row2):
        # data reach 1e18 rad/s, so the tail choice moves eps by < 1e-4
        base = DielectricModel(row2, pure_drude_dataset, tail_exponent=3.0)
        for q in (2.0, 4.0):
            varied = DielectricModel(row2, pure_drude_dataset, tail_exponent=q)
            assert varied.epsilon(2.4e15) == pytest.approx(
                base.epsilon(2.4e15), rel=1e-4)

    def test_model_validation(self, pure_drude_dataset, row2):
        with pytest.raises(ValueError, match="tail_exponent"):
            DielectricModel(row2, pure_drude_dataset, tail_exponent=0.9)
        short = generate_synthetic_dataset(row2, omega_range=(1e15, 1e18),
                                           points_per_decade=10)
        with pytest.raises(ValueError, match="omega0"):
            DielectricModel(row2, short)
        low = generate_synthetic_dataset(row2, omega_range=(1e14, 1e15),
                                         points_per_decade=10)
        with pytest.raises(ValueError, match="omega1"):
            DielectricModel(row2, low)

    def test_boundaries_validation(self):
        with pytest.raises(ValueError):
            FrequencyBoundaries(3.2e15, 1.5e14)


class TestDrudeParameters:
    def test_validation(self):
        with pytest.raises(ValueError):
            DrudeParameters(-1e16, 1e13)
        with pytest.raises(ValueError):
            DrudeParameters(1e16, 2e16)  # omega_tau above omega_p
