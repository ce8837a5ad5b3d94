import math

import numpy as np
import pytest

from physlimits.parallelism import (
    SWEEP_CSV_HEADER,
    GeometrySpec,
    bekenstein_ratio,
    blackbody_bit_flux,
    compression_sweep,
    energy_throughput,
    landauer_cost,
    max_error_rate,
    parallelization_ratio,
    stefan_boltzmann_sigma,
    sweep_to_csv,
    t_com,
    t_flip,
)
from physlimits.radiation import ops_per_bit_per_second

INV_2PI = 1.0 / (2.0 * math.pi)


@pytest.fixture(scope="module")
def bh_inputs(const):
    """Horizon-limit R, E, S for one kilogram (entropy from the area law)."""
    energy = const.c**2
    radius = 2 * const.G / const.c**2
    entropy = 4 * math.pi * const.k_B * const.G / (const.hbar * const.c)
    return radius, energy, entropy


class TestGeometry:
    def test_cube_convention(self):
        geo = GeometrySpec.from_volume(1e-3)
        assert geo.half_size == pytest.approx(1e-3 ** (1 / 3) / 2, rel=1e-12)
        assert geo.surface_area == pytest.approx(6 * 1e-3 ** (2 / 3), rel=1e-12)

    def test_round_trip(self):
        geo = GeometrySpec.from_half_size(0.05)
        assert GeometrySpec.from_volume(geo.volume).half_size == pytest.approx(0.05, rel=1e-12)

    def test_invalid(self):
        with pytest.raises(ValueError):
            GeometrySpec.from_volume(0.0)


class TestTimescales:
    def test_t_com_reference(self, const):
        assert t_com(0.05, const) == pytest.approx(3.34e-10, rel=2e-3)

    def test_t_com_unit_case(self, const):
        assert t_com(const.c / 2, const) == pytest.approx(1.0, rel=1e-12)

    def test_t_com_linear(self, const):
        assert t_com(0.2, const) == pytest.approx(2 * t_com(0.1, const), rel=1e-12)

    def test_t_flip_is_reciprocal_rate(self, laptop, const):
        flip = t_flip(const.c**2, laptop.entropy_J_per_K, const)
        assert flip == pytest.approx(3.93e-20, rel=1e-2)
        rate = ops_per_bit_per_second(const.c**2, laptop.entropy_J_per_K, const)
        assert flip * rate == pytest.approx(1.0, rel=1e-12)

    def test_t_flip_unit_inversion(self, const):
        entropy = 2 * math.log(2) * const.k_B * 5.0 / (math.pi * const.hbar)
        assert t_flip(5.0, entropy, const) == pytest.approx(1.0, rel=1e-12)

    def test_domain_errors(self, const):
        with pytest.raises(ValueError):
            t_com(0.0, const)
        with pytest.raises(ValueError):
            t_flip(0.0, 1.0, const)


class TestRatios:
    def test_laptop_band(self, laptop, const):
        ratio = parallelization_ratio(0.05, const.c**2, laptop.entropy_J_per_K, const)
        assert 1e9 <= ratio <= 1e10

    def test_equals_time_quotient(self, const):
        r, e, s = 0.37, 2.2e13, 8.1e5
        assert parallelization_ratio(r, e, s, const) == pytest.approx(
            t_com(r, const) / t_flip(e, s, const), rel=1e-12
        )

    def test_linear_in_radius(self, const):
        assert parallelization_ratio(2.0, 1e3, 1.0, const) == pytest.approx(
            2 * parallelization_ratio(1.0, 1e3, 1.0, const), rel=1e-12
        )

    def test_horizon_inputs_with_diameter_convention(self, bh_inputs, const):
        # With the 2R/c crossing convention this is 2*ln2/pi^2; the
        # around-the-horizon value ln2/pi lives in the blackhole module.
        ratio = parallelization_ratio(*bh_inputs, const)
        assert ratio == pytest.approx(2 * math.log(2) / math.pi**2, rel=1e-9)

    def test_bekenstein_laptop_far_above_bound(self, laptop, const):
        value = bekenstein_ratio(0.05, const.c**2, laptop.entropy_J_per_K, const)
        assert value > 1e9 * INV_2PI

    def test_bekenstein_saturated_at_horizon(self, bh_inputs, const):
        assert bekenstein_ratio(*bh_inputs, const) == pytest.approx(INV_2PI, rel=1e-9)

    def test_bekenstein_scale_invariance(self, const):
        a = bekenstein_ratio(0.3, 1e10, 1e2, const)
        b = bekenstein_ratio(0.3, 7e10, 7e2, const)
        assert a == pytest.approx(b, rel=1e-12)


class TestErrorBudget:
    def test_bit_flux_formula_value(self, laptop, const):
        flux = blackbody_bit_flux(laptop.temperature_K, const)
        assert flux == pytest.approx(1.198e42, rel=5e-3)
        assert 6 * flux == pytest.approx(7.195e42, rel=1e-2)

    def test_bit_flux_cubic_scaling(self, const):
        assert blackbody_bit_flux(2e8, const) == pytest.approx(
            8 * blackbody_bit_flux(1e8, const), rel=1e-12
        )

    def test_sigma_value(self, const):
        assert stefan_boltzmann_sigma(const) == pytest.approx(5.67e-8, rel=1e-3)

    def test_throughput_reference(self, laptop, const):
        power = energy_throughput(laptop.temperature_K, 0.06, const)
        assert power == pytest.approx(4.04e26, rel=1e-2)

    def test_throughput_is_sigma_t4(self, const):
        area = 0.3
        assert energy_throughput(1e6, area, const) / area == pytest.approx(
            stefan_boltzmann_sigma(const) * 1e6**4, rel=1e-12
        )

    def test_throughput_rejects_zero_area(self, const):
        with pytest.raises(ValueError):
            energy_throughput(1e6, 0.0, const)

    def test_max_error_rate_laptop(self, laptop, const):
        rate = max_error_rate(const.c**2, laptop.entropy_J_per_K, 0.05, const)
        assert 1e-10 <= rate <= 1e-9

    def test_max_error_rate_is_two_over_ratio(self, const):
        r, e, s = 0.6, 9e9, 3e3
        assert max_error_rate(e, s, r, const) * parallelization_ratio(r, e, s, const) == (
            pytest.approx(2.0, rel=1e-12)
        )

    def test_fully_serial_machine_tolerates_everything(self, bh_inputs, const):
        r, e, s = bh_inputs
        assert max_error_rate(e, s, r, const) == pytest.approx(math.pi**2 / math.log(2), rel=1e-9)

    def test_landauer_room_temperature(self, const):
        assert landauer_cost(300.0, const) == pytest.approx(2.87e-21, rel=1e-3)

    def test_landauer_unit_inversion(self, const):
        assert landauer_cost(1.0 / (const.k_B * math.log(2)), const) == pytest.approx(1.0, rel=1e-12)

    def test_landauer_linear(self, const):
        assert landauer_cost(600.0, const) == pytest.approx(2 * landauer_cost(300.0, const), rel=1e-12)


class TestCompressionSweep:
    @pytest.fixture(scope="class")
    def rows(self, const):
        return compression_sweep(1.0, 0.05, 1e-27, 50, constants=const)

    def test_ratio_decreases_with_radius(self, rows):
        ratios = [row.ratio for row in rows]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))

    def test_black_hole_flag_at_the_end(self, rows, const):
        r_s = 2 * const.G / const.c**2
        assert not rows[0].black_hole
        assert rows[-1].black_hole
        for row in rows:
            assert row.black_hole == (row.half_size <= r_s)

    def test_bekenstein_bound_holds_outside_horizon(self, rows):
        for row in rows:
            assert row.black_hole or row.bekenstein >= INV_2PI * (1 - 1e-9)

    def test_power_law_slopes(self, rows):
        log_r = np.log([row.half_size for row in rows])
        bits_slope = np.polyfit(log_r, np.log([row.bits for row in rows]), 1)[0]
        ratio_slope = np.polyfit(log_r, np.log([row.ratio for row in rows]), 1)[0]
        assert bits_slope == pytest.approx(0.75, abs=1e-6)
        assert ratio_slope == pytest.approx(0.25, abs=1e-6)

    def test_two_points_are_exact_endpoints(self, const):
        rows = compression_sweep(1.0, 0.05, 1e-20, 2, constants=const)
        assert [row.half_size for row in rows] == [0.05, 1e-20]

    def test_invalid_ranges(self, const):
        with pytest.raises(ValueError):
            compression_sweep(1.0, 1e-27, 0.05, 10, constants=const)
        with pytest.raises(ValueError):
            compression_sweep(1.0, 0.05, 1e-27, 1, constants=const)
        with pytest.raises(ValueError):
            compression_sweep(0.0, 0.05, 1e-27, 10, constants=const)

    def test_csv_layout(self, rows):
        text = sweep_to_csv(rows)
        lines = text.strip().split("\n")
        assert lines[0] == SWEEP_CSV_HEADER
        assert len(lines) == len(rows) + 1
        first = lines[1].split(",")
        assert float(first[0]) == rows[0].half_size
        assert first[-1] == "false"
        assert lines[-1].split(",")[-1] == "true"
