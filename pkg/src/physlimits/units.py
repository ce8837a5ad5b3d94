"""Unit conversion factors.

All internal computation is in SI; these factors are applied only when
parsing inputs (liters, GeV, fermi) or rendering outputs (years).
"""

LITER_M3 = 1e-3
FERMI_M = 1e-15
GEV_J = 1.602176634e-10
JULIAN_YEAR_S = 3.15576e7


def liters_to_m3(volume_l: float) -> float:
    return volume_l * LITER_M3


def gev_to_joules(energy_gev: float) -> float:
    return energy_gev * GEV_J


def fermi_to_m(length_fm: float) -> float:
    return length_fm * FERMI_M


def seconds_to_years(t_s: float) -> float:
    return t_s / JULIAN_YEAR_S
