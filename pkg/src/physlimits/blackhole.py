"""The computer compressed to its Schwarzschild radius.

A black hole saturates the memory bound (horizon entropy is exact where
the radiation estimate is not) and is the one configuration whose
computation is fully serial: communication around the horizon takes
about as long as a bit flip.  Evaporation is modeled at fixed initial
mass with the lifetime constant C left as a parameter; the species
content at the relevant temperature is unknown, so C stays free inside
a validated range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .constants import PhysicalConstants, default_constants

PAGE_C_DEFAULT = 1e-2
PAGE_C_RANGE = (1e-4, 1.0)


def _check_mass(mass_kg: float) -> None:
    if mass_kg <= 0:
        raise ValueError(f"mass must be > 0, got {mass_kg}")


def schwarzschild_radius(mass_kg: float, constants: PhysicalConstants | None = None) -> float:
    """Horizon radius 2*G*m/c^2."""
    constants = constants or default_constants()
    _check_mass(mass_kg)
    return 2.0 * constants.G * mass_kg / constants.c**2


def horizon_bits(mass_kg: float, constants: PhysicalConstants | None = None) -> float:
    """Information capacity 4*pi*G*m^2/(ln2*hbar*c): horizon area over 4, in bits."""
    constants = constants or default_constants()
    _check_mass(mass_kg)
    return 4.0 * math.pi * constants.G * mass_kg**2 / (math.log(2.0) * constants.hbar * constants.c)


def horizon_entropy(mass_kg: float, constants: PhysicalConstants | None = None) -> float:
    """Thermodynamic entropy k_B*ln2 times the bit capacity, J/K."""
    constants = constants or default_constants()
    return horizon_bits(mass_kg, constants) * constants.k_B * math.log(2.0)


def hawking_temperature(mass_kg: float, constants: PhysicalConstants | None = None) -> float:
    """Emission temperature hbar*c/(4*pi*k_B*R_s); equals E/(2S) for the hole."""
    constants = constants or default_constants()
    _check_mass(mass_kg)
    r_s = schwarzschild_radius(mass_kg, constants)
    return constants.hbar * constants.c / (4.0 * math.pi * constants.k_B * r_s)


class BlackHoleTimescales(NamedTuple):
    t_flip: float
    t_com: float
    ratio: float


def timescales(mass_kg: float, constants: PhysicalConstants | None = None) -> BlackHoleTimescales:
    """Bit-flip time pi^2*R_s/(c*ln2), horizon signal time pi*R_s/c, and their ratio.

    Communication goes around the horizon rather than across a diameter,
    so the ratio is the universal constant ln2/pi regardless of mass.
    """
    constants = constants or default_constants()
    _check_mass(mass_kg)
    r_s = schwarzschild_radius(mass_kg, constants)
    flip = math.pi**2 * r_s / (constants.c * math.log(2.0))
    com = math.pi * r_s / constants.c
    return BlackHoleTimescales(t_flip=flip, t_com=com, ratio=com / flip)


def _check_page_c(page_c: float) -> None:
    lo, hi = PAGE_C_RANGE
    if not (lo <= page_c <= hi):
        raise ValueError(f"page_c must lie in [{lo}, {hi}], got {page_c}")


def page_lifetime(mass_kg: float, page_c: float = PAGE_C_DEFAULT,
                  constants: PhysicalConstants | None = None) -> float:
    """Evaporation time G^2*m^3/(3*C*hbar*c^4) at fixed initial mass."""
    constants = constants or default_constants()
    _check_mass(mass_kg)
    _check_page_c(page_c)
    return constants.G**2 * mass_kg**3 / (3.0 * page_c * constants.hbar * constants.c**4)


def lifetime_ops(mass_kg: float, page_c: float = PAGE_C_DEFAULT,
                 constants: PhysicalConstants | None = None) -> float:
    """Total operations over the hole's lifetime: rate 2*m*c^2/(pi*hbar) times lifetime."""
    constants = constants or default_constants()
    energy = mass_kg * constants.c**2
    rate = 2.0 * energy / (math.pi * constants.hbar)
    return rate * page_lifetime(mass_kg, page_c, constants)


@dataclass(frozen=True)
class BlackHoleReport:
    """All derived quantities for one hole mass and lifetime constant."""

    mass: float
    schwarzschild_radius: float
    hawking_temperature: float
    entropy: float
    bits: float
    energy_per_bit: float
    t_flip: float
    t_com: float
    ratio: float
    lifetime: float
    lifetime_ops: float
    page_c: float
    ops_per_second: float
    bekenstein_ratio: float


def report(mass_kg: float, page_c: float = PAGE_C_DEFAULT,
           constants: PhysicalConstants | None = None) -> BlackHoleReport:
    """Assemble the full black-hole limit report for one mass."""
    constants = constants or default_constants()
    _check_mass(mass_kg)
    _check_page_c(page_c)
    energy = mass_kg * constants.c**2
    r_s = schwarzschild_radius(mass_kg, constants)
    bits = horizon_bits(mass_kg, constants)
    entropy = horizon_entropy(mass_kg, constants)
    times = timescales(mass_kg, constants)
    return BlackHoleReport(
        mass=mass_kg,
        schwarzschild_radius=r_s,
        hawking_temperature=hawking_temperature(mass_kg, constants),
        entropy=entropy,
        bits=bits,
        energy_per_bit=energy / bits,
        t_flip=times.t_flip,
        t_com=times.t_com,
        ratio=times.ratio,
        lifetime=page_lifetime(mass_kg, page_c, constants),
        lifetime_ops=lifetime_ops(mass_kg, page_c, constants),
        page_c=page_c,
        ops_per_second=2.0 * energy / (math.pi * constants.hbar),
        bekenstein_ratio=constants.k_B * r_s * energy / (constants.hbar * constants.c * entropy),
    )
