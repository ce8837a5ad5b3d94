"""Entropy-to-memory bound: relativistic radiation in a box.

Matter converted entirely to relativistic particles maximizes entropy at
fixed average energy and volume.  The closed-form model treats every
included species as massless; a species' rest mass matters only for the
inclusion threshold m < k_B*T/(2c^2).  The entropy computed here is the
memory *capacity* of the equilibrium state; a machine actually running a
program is held in a pure state of zero entropy.

Two brute-force oracles back the closed form: a discrete canonical
ensemble over explicit energy levels, and a direct sum over photon modes
of a cubic box (see :func:`mode_sum_entropy`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import brentq
from scipy.special import logsumexp

from . import _kernels
from .constants import PhysicalConstants, default_constants

_FERMION_WEIGHT = 7.0 / 8.0


@dataclass(frozen=True)
class ParticleSpecies:
    """One relativistic species contributing to the radiation bath.

    count is the number of particle/antiparticle varieties (1 or 2);
    statistics is "boson" or "fermion".
    """

    name: str
    mass_kg: float
    count: int
    polarizations: int
    statistics: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("species name must be nonempty")
        if self.mass_kg < 0:
            raise ValueError(f"species {self.name!r}: mass must be >= 0")
        if self.count not in (1, 2):
            raise ValueError(f"species {self.name!r}: count must be 1 or 2")
        if self.polarizations < 1:
            raise ValueError(f"species {self.name!r}: polarizations must be >= 1")
        if self.statistics not in ("boson", "fermion"):
            raise ValueError(
                f"species {self.name!r}: statistics must be 'boson' or 'fermion'"
            )


def effective_dof(species: ParticleSpecies) -> float:
    """Effective degrees of freedom: count * polarizations * (1 boson, 7/8 fermion)."""
    stats = 1.0 if species.statistics == "boson" else _FERMION_WEIGHT
    return species.count * species.polarizations * stats


PHOTON = ParticleSpecies("photon", 0.0, 1, 2, "boson")
ELECTRON_POSITRON = ParticleSpecies("electron", 9.1e-31, 2, 2, "fermion")


@dataclass(frozen=True)
class SpeciesTable:
    """Nonempty collection of species; must include the photon."""

    species: tuple[ParticleSpecies, ...] = field(default=(PHOTON,))

    def __post_init__(self):
        species = tuple(self.species)
        if not species:
            raise ValueError("species table must be nonempty")
        names = [s.name for s in species]
        if len(set(names)) != len(names):
            raise ValueError(f"species names must be unique, got {names}")
        has_photon = any(
            s.mass_kg == 0.0 and s.count == 1 and s.polarizations == 2 and s.statistics == "boson"
            for s in species
        )
        if not has_photon:
            raise ValueError("species table must contain the photon (massless, 2 polarizations, boson)")
        object.__setattr__(self, "species", species)

    def names(self) -> list[str]:
        return [s.name for s in self.species]


def default_species_table() -> SpeciesTable:
    """Photon-only table (r = 2), the lower-bound particle content."""
    return SpeciesTable()


@dataclass(frozen=True)
class ThermalState:
    """Solved radiation state for one (energy, volume, species) input."""

    temperature: float
    energy: float
    volume: float
    entropy: float
    bits: float
    r_effective: float
    included_species: tuple[str, ...]
    thermal_wavelength: float


class SpeciesConvergenceError(ValueError):
    """Species inclusion oscillated between two sets instead of settling."""

    def __init__(self, candidates, temperatures):
        self.candidates = tuple(tuple(c) for c in candidates)
        self.temperatures = tuple(temperatures)
        super().__init__(
            "species inclusion did not converge; oscillating between "
            f"{self.candidates[0]} (T={self.temperatures[0]:.6e} K) and "
            f"{self.candidates[1]} (T={self.temperatures[1]:.6e} K)"
        )


def _radiation_temperature(energy_j, volume_m3, r, constants):
    c, hbar, k_B = constants.c, constants.hbar, constants.k_B
    return (30.0 * hbar**3 * c**3 * energy_j / (r * math.pi**2 * volume_m3)) ** 0.25 / k_B


def solve_thermal_state(
    energy_j: float,
    volume_m3: float,
    table: SpeciesTable | None = None,
    constants: PhysicalConstants | None = None,
) -> ThermalState:
    """Self-consistent radiation state for the given energy and volume.

    Starts from the massless species, solves the temperature, includes
    every species lighter than k_B*T/(2c^2), and iterates until the
    included set is stable.  The iteration is capped at the table size;
    a two-set oscillation raises :class:`SpeciesConvergenceError` with
    both candidates attached.
    """
    constants = constants or default_constants()
    table = table or default_species_table()
    if energy_j <= 0:
        raise ValueError(f"energy must be > 0, got {energy_j}")
    if volume_m3 <= 0:
        raise ValueError(f"volume must be > 0, got {volume_m3}")

    c, k_B = constants.c, constants.k_B

    def included_set(temperature):
        threshold = k_B * temperature / (2.0 * c**2)
        return tuple(s.name for s in table.species if s.mass_kg < threshold)

    def r_of(names):
        by_name = {s.name: s for s in table.species}
        return sum(effective_dof(by_name[n]) for n in names)

    current = tuple(s.name for s in table.species if s.mass_kg == 0.0)
    history = []
    for _ in range(max(len(table.species), 1) + 1):
        temperature = _radiation_temperature(energy_j, volume_m3, r_of(current), constants)
        history.append((current, temperature))
        nxt = included_set(temperature)
        if nxt == current:
            break
        current = nxt
    else:
        raise SpeciesConvergenceError(
            (history[-2][0], history[-1][0]), (history[-2][1], history[-1][1])
        )

    r = r_of(current)
    temperature = _radiation_temperature(energy_j, volume_m3, r, constants)
    entropy = 4.0 * energy_j / (3.0 * temperature)
    return ThermalState(
        temperature=temperature,
        energy=energy_j,
        volume=volume_m3,
        entropy=entropy,
        bits=entropy / (k_B * math.log(2.0)),
        r_effective=r,
        included_species=current,
        thermal_wavelength=2.0 * math.pi * constants.hbar * c / (k_B * temperature),
    )


def ops_per_bit_per_second(
    energy_j: float, entropy_j_per_k: float, constants: PhysicalConstants | None = None
) -> float:
    """Operation rate available per stored bit: 2*ln2*k_B*E / (pi*hbar*S)."""
    constants = constants or default_constants()
    if energy_j <= 0 or entropy_j_per_k <= 0:
        raise ValueError("energy and entropy must be > 0")
    return 2.0 * math.log(2.0) * constants.k_B * energy_j / (math.pi * constants.hbar * entropy_j_per_k)


def bits_per_cubic_thermal_wavelength(r_l: float) -> float:
    """Memory density of one species per cubic thermal wavelength."""
    if r_l <= 0:
        raise ValueError(f"r_l must be > 0, got {r_l}")
    return (2.0 * math.pi) ** 5 * r_l / (90.0 * math.log(2.0))


class CanonicalEnsemble(NamedTuple):
    z: float
    probabilities: np.ndarray
    energy: float
    entropy: float


def canonical_ensemble(
    levels: Sequence[float], temperature_k: float, constants: PhysicalConstants | None = None
) -> CanonicalEnsemble:
    """Occupation probabilities, mean energy and entropy over explicit levels.

    Exponentials are taken after shifting the minimum level to zero, so
    arbitrarily large level values cannot overflow; the reported partition
    function is reconstructed from the stable log-sum.
    """
    constants = constants or default_constants()
    e = np.asarray(levels, dtype=float)
    if e.size == 0:
        raise ValueError("levels must be nonempty")
    if not np.all(np.isfinite(e)):
        raise ValueError("levels must all be finite")
    if temperature_k <= 0:
        raise ValueError(f"temperature must be > 0, got {temperature_k}")
    k_B = constants.k_B
    beta = 1.0 / (k_B * temperature_k)
    shifted = e - e.min()
    log_weights = -beta * shifted
    log_z_shifted = float(logsumexp(log_weights))
    probabilities = np.exp(log_weights - log_z_shifted)
    energy = float(np.dot(probabilities, e))
    with np.errstate(divide="ignore", invalid="ignore"):
        plogp = np.where(probabilities > 0.0, probabilities * np.log(probabilities), 0.0)
    entropy = -k_B * float(np.sum(plogp))
    z = math.exp(log_z_shifted - beta * e.min())
    return CanonicalEnsemble(z=z, probabilities=probabilities, energy=energy, entropy=entropy)


def solve_temperature_for_energy(
    levels: Sequence[float],
    energy_target_j: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Temperature at which the canonical mean energy equals the target.

    The mean energy rises monotonically from min(levels) at T -> 0 to the
    arithmetic mean at T -> infinity; targets outside that open interval
    are rejected with the achievable range in the message.  The bracket is
    found by doubling and the root polished with Brent's method.
    """
    constants = constants or default_constants()
    e = np.asarray(levels, dtype=float)
    if e.size == 0:
        raise ValueError("levels must be nonempty")
    lo, hi = float(e.min()), float(e.mean())
    if not (lo < energy_target_j < hi):
        raise ValueError(
            f"target energy {energy_target_j} outside the achievable open interval "
            f"({lo}, {hi}) for these levels"
        )

    def residual(temperature):
        return canonical_ensemble(e, temperature, constants).energy - energy_target_j

    # Scale the initial bracket to the level spacing.
    scale = (hi - lo) / constants.k_B
    t_low = scale * 1e-6
    while residual(t_low) > 0.0:
        t_low /= 2.0
    t_high = scale
    for _ in range(200):
        if residual(t_high) > 0.0:
            break
        t_high *= 2.0
    else:
        raise ValueError("could not bracket the target energy; it is too close to the infinite-T mean")
    temperature = brentq(residual, t_low, t_high, xtol=1e-300, rtol=1e-15, maxiter=200)
    return float(temperature)


class ModeSum(NamedTuple):
    energy: float
    entropy: float


def mode_sum_entropy(
    box_side_m: float,
    temperature_k: float,
    n_max: int,
    constants: PhysicalConstants | None = None,
) -> ModeSum:
    """Direct sum of thermal photon energy and entropy over box modes.

    Every mode (nx, ny, nz) in [1, n_max]^3 has frequency pi*c*|n|/L and
    two polarizations; each contributes the bosonic thermal energy
    hbar*w/(exp(hbar*w/k_B T) - 1) and the matching per-mode entropy.
    Modes are grouped into shells of equal |n|^2 (every mode in a shell
    contributes the same value), and the per-shell totals are reduced
    with exact compensated summation, so the result is independent of
    evaluation order and of the counting backend.
    """
    constants = constants or default_constants()
    if box_side_m <= 0:
        raise ValueError(f"box side must be > 0, got {box_side_m}")
    if temperature_k <= 0:
        raise ValueError(f"temperature must be > 0, got {temperature_k}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")

    k_B, hbar, c = constants.k_B, constants.hbar, constants.c
    # x = hbar*w/(k_B T) = delta * |n|
    delta = math.pi * hbar * c / (box_side_m * k_B * temperature_k)

    counts = _kernels.shell_counts(n_max)
    shells = np.nonzero(counts)[0]
    multiplicity = counts[shells].astype(np.float64)
    x = delta * np.sqrt(shells.astype(np.float64))
    ex = np.exp(-x)
    occupation = x * ex / (1.0 - ex)
    energy_shell = multiplicity * occupation
    entropy_shell = multiplicity * (occupation - np.log(1.0 - ex))

    energy = 2.0 * k_B * temperature_k * math.fsum(energy_shell)
    entropy = 2.0 * k_B * math.fsum(entropy_shell)
    return ModeSum(energy=energy, entropy=entropy)


def continuum_radiation_energy(
    volume_m3: float, temperature_k: float, constants: PhysicalConstants | None = None
) -> float:
    """Continuum photon energy (pi^2/15) V (k_B T)^4 / (hbar c)^3, the mode-sum limit."""
    constants = constants or default_constants()
    return (
        math.pi**2
        / 15.0
        * volume_m3
        * (constants.k_B * temperature_k) ** 4
        / (constants.hbar * constants.c) ** 3
    )
