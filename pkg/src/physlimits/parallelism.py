"""Geometry-dependent limits: communication vs flip time, error budgets.

The geometry convention is a cube of side V^(1/3): half-size R is half
the side and the radiating surface is all six faces.  That convention
reproduces the reference throughput figure exactly, where a literal
10^-2 m^2 surface does not.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

from .blackhole import schwarzschild_radius
from .constants import PhysicalConstants, default_constants
from .radiation import SpeciesTable, ops_per_bit_per_second, solve_thermal_state


@dataclass(frozen=True)
class GeometrySpec:
    """Cube geometry: half-size R (m), surface area (m^2), volume (m^3)."""

    half_size: float
    surface_area: float
    volume: float

    @classmethod
    def from_volume(cls, volume_m3: float) -> "GeometrySpec":
        if volume_m3 <= 0:
            raise ValueError(f"volume must be > 0, got {volume_m3}")
        side = volume_m3 ** (1.0 / 3.0)
        return cls(half_size=side / 2.0, surface_area=6.0 * side**2, volume=volume_m3)

    @classmethod
    def from_half_size(cls, half_size_m: float) -> "GeometrySpec":
        if half_size_m <= 0:
            raise ValueError(f"half size must be > 0, got {half_size_m}")
        side = 2.0 * half_size_m
        return cls(half_size=half_size_m, surface_area=6.0 * side**2, volume=side**3)


def t_com(half_size_m: float, constants: PhysicalConstants | None = None) -> float:
    """Light-crossing time 2R/c from one side of the machine to the other."""
    constants = constants or default_constants()
    if half_size_m <= 0:
        raise ValueError(f"half size must be > 0, got {half_size_m}")
    return 2.0 * half_size_m / constants.c


def t_flip(
    energy_j: float, entropy_j_per_k: float, constants: PhysicalConstants | None = None
) -> float:
    """Mean time to flip one bit; the reciprocal of the per-bit operation rate."""
    constants = constants or default_constants()
    if energy_j <= 0 or entropy_j_per_k <= 0:
        raise ValueError("energy and entropy must be > 0")
    return (
        math.pi
        * constants.hbar
        * entropy_j_per_k
        / (2.0 * math.log(2.0) * constants.k_B * energy_j)
    )


def parallelization_ratio(
    half_size_m: float,
    energy_j: float,
    entropy_j_per_k: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Degree of parallelization t_com/t_flip = 4*ln2*k_B*R*E / (pi*hbar*c*S).

    Large values mean many bits flip during one light crossing (parallel
    machine); values near one mean essentially serial operation.
    """
    constants = constants or default_constants()
    if half_size_m <= 0 or energy_j <= 0 or entropy_j_per_k <= 0:
        raise ValueError("half size, energy and entropy must be > 0")
    return (
        4.0
        * math.log(2.0)
        * constants.k_B
        * half_size_m
        * energy_j
        / (math.pi * constants.hbar * constants.c * entropy_j_per_k)
    )


def bekenstein_ratio(
    half_size_m: float,
    energy_j: float,
    entropy_j_per_k: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """k_B*R*E/(hbar*c*S); ordinary matter stays above 1/(2*pi), black holes sit on it."""
    constants = constants or default_constants()
    if half_size_m <= 0 or energy_j <= 0 or entropy_j_per_k <= 0:
        raise ValueError("half size, energy and entropy must be > 0")
    return (
        constants.k_B
        * half_size_m
        * energy_j
        / (constants.hbar * constants.c * entropy_j_per_k)
    )


def blackbody_bit_flux(temperature_k: float, constants: PhysicalConstants | None = None) -> float:
    """Bits radiated per m^2 per second by a black body at the given temperature.

    Implements pi^2 k_B^3 T^3 / (60 ln2 hbar^3 c^2) literally.  The
    reference figure of 7.195e42 at the 1 kg / 1 L temperature is 6.005x
    this formula; both numbers are surfaced side by side in reports
    rather than silently reconciled (six cube faces is the suspected but
    unconfirmed origin of the factor).
    """
    constants = constants or default_constants()
    if temperature_k <= 0:
        raise ValueError(f"temperature must be > 0, got {temperature_k}")
    return (
        math.pi**2
        * constants.k_B**3
        * temperature_k**3
        / (60.0 * math.log(2.0) * constants.hbar**3 * constants.c**2)
    )


def stefan_boltzmann_sigma(constants: PhysicalConstants | None = None) -> float:
    """Radiated power density constant pi^2 k_B^4 / (60 hbar^3 c^2), W m^-2 K^-4."""
    constants = constants or default_constants()
    return math.pi**2 * constants.k_B**4 / (60.0 * constants.hbar**3 * constants.c**2)


def energy_throughput(
    temperature_k: float, area_m2: float, constants: PhysicalConstants | None = None
) -> float:
    """Radiated power sigma*T^4*area: free energy in, thermal energy out."""
    if temperature_k <= 0 or area_m2 <= 0:
        raise ValueError("temperature and area must be > 0")
    return stefan_boltzmann_sigma(constants) * temperature_k**4 * area_m2


def max_error_rate(
    energy_j: float,
    entropy_j_per_k: float,
    half_size_m: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Largest tolerable error probability per operation: 2*t_flip/t_com.

    Errors must be rejected through the surface as radiation; a machine
    more parallel than 2/epsilon would overheat.  The ceiling is the
    inverse of the degree of parallelization (values above 1 mean any
    rate is tolerable).
    """
    return 2.0 * t_flip(energy_j, entropy_j_per_k, constants) / t_com(half_size_m, constants)


def landauer_cost(temperature_env_k: float, constants: PhysicalConstants | None = None) -> float:
    """Minimum dissipation k_B*T*ln2 per bit erased into an environment at T."""
    constants = constants or default_constants()
    if temperature_env_k <= 0:
        raise ValueError(f"environment temperature must be > 0, got {temperature_env_k}")
    return constants.k_B * temperature_env_k * math.log(2.0)


@dataclass(frozen=True)
class SweepRow:
    """One radius point of a compression sweep."""

    half_size: float
    temperature: float
    entropy: float
    bits: float
    ops_per_bit_s: float
    ratio: float
    bekenstein: float
    black_hole: bool


SWEEP_CSV_HEADER = "R_m,T_K,S_JperK,bits,ops_per_bit_s,ratio,bekenstein,black_hole"


def compression_sweep(
    mass_kg: float,
    r_start_m: float,
    r_end_m: float,
    points: int,
    table: SpeciesTable | None = None,
    constants: PhysicalConstants | None = None,
) -> list[SweepRow]:
    """Shrink a fixed-mass machine from r_start down to r_end on a log grid.

    Each row re-solves the radiation state in the cube of half-size R and
    reports the derived per-bit rate, parallelization and bound ratios.
    Rows at or inside the Schwarzschild radius are flagged.
    """
    constants = constants or default_constants()
    if mass_kg <= 0:
        raise ValueError(f"mass must be > 0, got {mass_kg}")
    if not (r_start_m > r_end_m > 0):
        raise ValueError(f"need r_start > r_end > 0, got {r_start_m}, {r_end_m}")
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")

    energy = mass_kg * constants.c**2
    r_s = schwarzschild_radius(mass_kg, constants)
    log_start, log_end = math.log10(r_start_m), math.log10(r_end_m)
    rows = []
    for i in range(points):
        if i == 0:
            radius = r_start_m
        elif i == points - 1:
            radius = r_end_m
        else:
            frac = i / (points - 1)
            radius = 10.0 ** (log_start + frac * (log_end - log_start))
        geometry = GeometrySpec.from_half_size(radius)
        state = solve_thermal_state(energy, geometry.volume, table, constants)
        rows.append(
            SweepRow(
                half_size=radius,
                temperature=state.temperature,
                entropy=state.entropy,
                bits=state.bits,
                ops_per_bit_s=ops_per_bit_per_second(energy, state.entropy, constants),
                ratio=parallelization_ratio(radius, energy, state.entropy, constants),
                bekenstein=bekenstein_ratio(radius, energy, state.entropy, constants),
                black_hole=radius <= r_s,
            )
        )
    return rows


def sweep_to_csv(rows: list[SweepRow]) -> str:
    """Serialize sweep rows to CSV with the fixed column order above."""
    out = io.StringIO()
    out.write(SWEEP_CSV_HEADER + "\n")
    for row in rows:
        out.write(
            f"{row.half_size!r},{row.temperature!r},{row.entropy!r},{row.bits!r},"
            f"{row.ops_per_bit_s!r},{row.ratio!r},{row.bekenstein!r},"
            f"{'true' if row.black_hole else 'false'}\n"
        )
    return out.getvalue()
