"""Physical constants and Planck-scale quantities.

Every other module takes a :class:`PhysicalConstants` argument instead of
reading globals, so the default values can be swapped for CODATA ones
without touching any formula.  The defaults are the slightly rounded
values that reproduce the reference figures quoted throughout the test
suite to five digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants used by all limit formulas.

    c      speed of light, m/s
    hbar   reduced Planck constant, J*s
    G      gravitational constant, m^3/(kg*s^2)
    k_B    Boltzmann constant, J/K
    alpha  fine structure constant, dimensionless
    """

    c: float = 2.9979e8
    hbar: float = 1.0545e-34
    G: float = 6.673e-11
    k_B: float = 1.3805e-23
    alpha: float = 1.0 / 137.036

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"constant {f.name!r} must be finite and positive, got {value!r}")

    def replace(self, **overrides) -> "PhysicalConstants":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        unknown = set(overrides) - set(values)
        if unknown:
            raise ValueError(f"unknown constant override(s): {sorted(unknown)}")
        values.update(overrides)
        return PhysicalConstants(**values)


@dataclass(frozen=True)
class PlanckScales:
    """Planck length (m), time (s) and mass (kg) derived from one constant set."""

    length: float
    time: float
    mass: float


def default_constants() -> PhysicalConstants:
    """Return the default constant set (deterministic, always a fresh value)."""
    return PhysicalConstants()


def planck_scales(constants: PhysicalConstants) -> PlanckScales:
    """Compute the Planck scales from the given constants.

    length = sqrt(hbar*G/c^3), time = sqrt(hbar*G/c^5), mass = sqrt(hbar*c/G).
    """
    c, hbar, G = constants.c, constants.hbar, constants.G
    return PlanckScales(
        length=math.sqrt(hbar * G / c**3),
        time=math.sqrt(hbar * G / c**5),
        mass=math.sqrt(hbar * c / G),
    )
