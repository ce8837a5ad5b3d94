"""Energy-to-speed bound and energy allocation across logic gates.

A system holding average energy E above its ground state can perform at
most 2E/(pi*hbar) binary logic operations per second, no matter how the
energy is divided among gates.  Operations that cycle through more than
two states run at half that rate (E/(pi*hbar)); only the binary rate is
exposed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi, sqrt

import numpy as np

from .constants import PhysicalConstants, default_constants


def max_ops_per_second(energy_j: float, constants: PhysicalConstants | None = None) -> float:
    """Maximum logic operations per second for average energy ``energy_j``.

    Zero energy is a frozen computer and returns rate 0; negative energy
    is rejected.
    """
    constants = constants or default_constants()
    if energy_j < 0:
        raise ValueError(f"energy must be >= 0, got {energy_j}")
    return 2.0 * energy_j / (pi * constants.hbar)


def min_op_time(energy_j: float, constants: PhysicalConstants | None = None) -> float:
    """Shortest time to reach a distinguishable state at average energy ``energy_j``.

    Undefined (infinite) at zero energy, so nonpositive input is an error.
    """
    constants = constants or default_constants()
    if energy_j <= 0:
        raise ValueError(f"energy must be > 0 for a finite operation time, got {energy_j}")
    return pi * constants.hbar / (2.0 * energy_j)


@dataclass(frozen=True)
class GateAllocation:
    """Per-gate mean energies and energy spreads, joules."""

    gate_energies: np.ndarray
    gate_spreads: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.gate_energies, dtype=float)
        s = np.asarray(self.gate_spreads, dtype=float)
        if e.ndim != 1 or s.shape != e.shape:
            raise ValueError("gate_energies and gate_spreads must be 1-D and the same length")
        if e.size == 0:
            raise ValueError("allocation must contain at least one gate")
        if np.any(e < 0) or np.any(s < 0):
            raise ValueError("gate energies and spreads must be nonnegative")
        object.__setattr__(self, "gate_energies", e)
        object.__setattr__(self, "gate_spreads", s)


def allocate(total_energy_j: float, n_gates: int, weights) -> GateAllocation:
    """Split a total energy over ``n_gates`` gates proportionally to ``weights``.

    The gate construction used throughout (two-level potential with the
    ground level at zero) has spread equal to mean energy, so each gate's
    spread is set to its energy share.
    """
    if total_energy_j < 0:
        raise ValueError(f"total energy must be >= 0, got {total_energy_j}")
    if n_gates < 1:
        raise ValueError(f"n_gates must be >= 1, got {n_gates}")
    w = np.asarray(weights, dtype=float)
    if w.shape != (n_gates,):
        raise ValueError(f"expected {n_gates} weights, got shape {w.shape}")
    if np.any(w < 0):
        raise ValueError("weights must be nonnegative")
    total_w = w.sum()
    if total_w <= 0:
        raise ValueError("weights must not all be zero")
    energies = total_energy_j * (w / total_w)
    return GateAllocation(gate_energies=energies, gate_spreads=energies.copy())


def gate_rates(alloc: GateAllocation, constants: PhysicalConstants | None = None) -> np.ndarray:
    """Per-gate operation rates 2*E_gate/(pi*hbar)."""
    constants = constants or default_constants()
    return 2.0 * alloc.gate_energies / (pi * constants.hbar)


def total_rate(alloc: GateAllocation, constants: PhysicalConstants | None = None) -> float:
    """Summed rate over all gates; equals the single-budget rate of the total energy."""
    return float(np.sum(gate_rates(alloc, constants)))


def total_spread(alloc: GateAllocation) -> tuple[float, float]:
    """Whole-machine energy spread and total energy.

    Spreads add in quadrature while mean energies add linearly, so a wide
    parallel machine has spread much smaller than its energy.
    """
    delta_e = sqrt(float(np.sum(alloc.gate_spreads**2)))
    total_e = float(np.sum(alloc.gate_energies))
    return delta_e, total_e
