"""Physical limits of computation for a given computer mass and volume.

Bounds on operation rate, memory capacity, parallelization and error
tolerance, the black-hole limit of maximal compression, and a small
dense quantum simulator that verifies the underlying minimum-time
bounds by brute force.
"""

from .blackhole import BlackHoleReport
from .constants import PhysicalConstants, PlanckScales, default_constants, planck_scales
from .limits import ComputerSpec, LimitsReport, compute_limits, default_spec
from .radiation import (
    ParticleSpecies,
    SpeciesTable,
    ThermalState,
    default_species_table,
    solve_thermal_state,
)
from .speed import max_ops_per_second, min_op_time

__version__ = "0.1.0"

__all__ = [
    "BlackHoleReport",
    "ComputerSpec",
    "LimitsReport",
    "ParticleSpecies",
    "PhysicalConstants",
    "PlanckScales",
    "SpeciesTable",
    "ThermalState",
    "compute_limits",
    "default_constants",
    "default_spec",
    "default_species_table",
    "max_ops_per_second",
    "min_op_time",
    "planck_scales",
    "solve_thermal_state",
    "__version__",
]
