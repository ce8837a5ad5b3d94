"""Top-level report: all limits for one computer specification."""

from __future__ import annotations

from dataclasses import dataclass

from .blackhole import schwarzschild_radius
from .constants import PhysicalConstants, default_constants
from .parallelism import (
    GeometrySpec,
    bekenstein_ratio,
    blackbody_bit_flux,
    energy_throughput,
    max_error_rate,
    parallelization_ratio,
    t_com,
    t_flip,
)
from .radiation import SpeciesTable, default_species_table, ops_per_bit_per_second, solve_thermal_state
from .speed import max_ops_per_second

BIT_FLUX_PAPER_FACTOR = 6.0


@dataclass(frozen=True)
class ComputerSpec:
    """Input to all limit computations: mass, volume, particle content."""

    mass_kg: float
    volume_m3: float
    species: SpeciesTable

    def __post_init__(self):
        if self.mass_kg <= 0:
            raise ValueError(f"mass must be > 0, got {self.mass_kg}")
        if self.volume_m3 <= 0:
            raise ValueError(f"volume must be > 0, got {self.volume_m3}")


@dataclass(frozen=True)
class LimitsReport:
    """Every derived limit for one :class:`ComputerSpec`."""

    mass_kg: float
    volume_m3: float
    half_size_m: float
    surface_area_m2: float
    ops_per_second: float
    temperature_K: float
    entropy_J_per_K: float
    bits: float
    ops_per_bit_per_second: float
    thermal_wavelength_m: float
    included_species: tuple[str, ...]
    t_com_s: float
    t_flip_s: float
    ratio: float
    bekenstein_ratio: float
    max_error_rate: float
    bit_flux_formula: float
    bit_flux_paper: float
    throughput_W: float
    black_hole_regime: bool

    def to_json_dict(self) -> dict:
        """Nested structure with the stable field names used by the CLI."""
        return {
            "input": {
                "mass_kg": self.mass_kg,
                "volume_m3": self.volume_m3,
                "half_size_m": self.half_size_m,
                "surface_area_m2": self.surface_area_m2,
            },
            "speed": {"ops_per_second": self.ops_per_second},
            "memory": {
                "temperature_K": self.temperature_K,
                "entropy_J_per_K": self.entropy_J_per_K,
                "bits": self.bits,
                "ops_per_bit_per_second": self.ops_per_bit_per_second,
                "thermal_wavelength_m": self.thermal_wavelength_m,
                "included_species": list(self.included_species),
            },
            "parallelism": {
                "t_com_s": self.t_com_s,
                "t_flip_s": self.t_flip_s,
                "ratio": self.ratio,
                "bekenstein_ratio": self.bekenstein_ratio,
                "max_error_rate": self.max_error_rate,
                "bit_flux_formula": self.bit_flux_formula,
                "bit_flux_paper": self.bit_flux_paper,
                "throughput_W": self.throughput_W,
            },
            "flags": {"black_hole_regime": self.black_hole_regime},
        }


def compute_limits(
    spec: ComputerSpec, constants: PhysicalConstants | None = None
) -> LimitsReport:
    """Compose the speed, memory and parallelization limits for one machine.

    All rest energy is assumed available (E = m*c^2) and the radiation
    state is solved in the cube of the given volume.  The black-hole flag
    is set when the half-size is at or inside the Schwarzschild radius,
    where the radiation model no longer applies.
    """
    constants = constants or default_constants()
    energy = spec.mass_kg * constants.c**2
    geometry = GeometrySpec.from_volume(spec.volume_m3)
    state = solve_thermal_state(energy, spec.volume_m3, spec.species, constants)
    flux = blackbody_bit_flux(state.temperature, constants)
    return LimitsReport(
        mass_kg=spec.mass_kg,
        volume_m3=spec.volume_m3,
        half_size_m=geometry.half_size,
        surface_area_m2=geometry.surface_area,
        ops_per_second=max_ops_per_second(energy, constants),
        temperature_K=state.temperature,
        entropy_J_per_K=state.entropy,
        bits=state.bits,
        ops_per_bit_per_second=ops_per_bit_per_second(energy, state.entropy, constants),
        thermal_wavelength_m=state.thermal_wavelength,
        included_species=state.included_species,
        t_com_s=t_com(geometry.half_size, constants),
        t_flip_s=t_flip(energy, state.entropy, constants),
        ratio=parallelization_ratio(geometry.half_size, energy, state.entropy, constants),
        bekenstein_ratio=bekenstein_ratio(geometry.half_size, energy, state.entropy, constants),
        max_error_rate=max_error_rate(energy, state.entropy, geometry.half_size, constants),
        bit_flux_formula=flux,
        bit_flux_paper=BIT_FLUX_PAPER_FACTOR * flux,
        throughput_W=energy_throughput(state.temperature, geometry.surface_area, constants),
        black_hole_regime=geometry.half_size <= schwarzschild_radius(spec.mass_kg, constants),
    )


def default_spec(mass_kg: float = 1.0, volume_m3: float = 1e-3) -> ComputerSpec:
    """The reference machine: one kilogram in one liter, photon radiation only."""
    return ComputerSpec(mass_kg=mass_kg, volume_m3=volume_m3, species=default_species_table())
