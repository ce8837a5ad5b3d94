"""Named worked examples with reference values and verdicts.

Each scenario computes its derived quantities from parameters that can
be overridden at the call site, attaches the published reference number
for every checkable key, and grades the agreement.  Three tolerance
kinds are used: "exact" for values that follow from the constants alone
(0.5% relative), "threesig" for three-significant-figure reference
values (1% relative), and "order" for order-of-magnitude statements
(within a factor of 10 either way).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import blackhole
from .constants import PhysicalConstants, default_constants
from .limits import ComputerSpec, compute_limits
from .radiation import default_species_table
from .units import FERMI_M, GEV_J, LITER_M3, seconds_to_years

EXACT = "exact"
THREESIG = "threesig"
ORDER = "order"

_REL_TOL = {EXACT: 5e-3, THREESIG: 1e-2}
_ORDER_FACTOR = 10.0


@dataclass(frozen=True)
class Scenario:
    """A registered worked example: defaults plus a description."""

    name: str
    parameters: dict[str, float]
    description: str


@dataclass(frozen=True)
class PaperValue:
    value: float
    kind: str

    def __post_init__(self):
        if self.kind not in (EXACT, THREESIG, ORDER):
            raise ValueError(f"unknown tolerance kind {self.kind!r}")


@dataclass(frozen=True)
class ScenarioReport:
    name: str
    parameters: dict[str, float]
    derived: dict[str, float]
    paper_values: dict[str, PaperValue] = field(default_factory=dict)
    verdicts: dict[str, str] = field(default_factory=dict)


def _grade(derived: float, ref: PaperValue) -> str:
    if ref.kind == ORDER:
        ok = ref.value / _ORDER_FACTOR <= derived <= ref.value * _ORDER_FACTOR
    else:
        ok = abs(derived - ref.value) <= _REL_TOL[ref.kind] * abs(ref.value)
    return "match" if ok else "mismatch"


def _finish(name, params, derived, paper_values) -> ScenarioReport:
    verdicts = {key: _grade(derived[key], ref) for key, ref in paper_values.items()}
    return ScenarioReport(
        name=name, parameters=params, derived=derived,
        paper_values=paper_values, verdicts=verdicts,
    )


def _ultimate_laptop(params, constants) -> ScenarioReport:
    spec = ComputerSpec(
        mass_kg=params["mass_kg"],
        volume_m3=params["volume_l"] * LITER_M3,
        species=default_species_table(),
    )
    rep = compute_limits(spec, constants)
    derived = {
        "ops_per_second": rep.ops_per_second,
        "temperature_K": rep.temperature_K,
        "entropy_J_per_K": rep.entropy_J_per_K,
        "bits": rep.bits,
        "ops_per_bit_per_second": rep.ops_per_bit_per_second,
        "ratio": rep.ratio,
        "max_error_rate": rep.max_error_rate,
        "throughput_W": rep.throughput_W,
        "bit_flux_formula": rep.bit_flux_formula,
        "bit_flux_paper": rep.bit_flux_paper,
        "bekenstein_ratio": rep.bekenstein_ratio,
    }
    paper = {
        "ops_per_second": PaperValue(5.4258e50, EXACT),
        "temperature_K": PaperValue(5.87e8, THREESIG),
        "entropy_J_per_K": PaperValue(2.04e8, THREESIG),
        "bits": PaperValue(2.13e31, THREESIG),
        "ops_per_bit_per_second": PaperValue(1e19, ORDER),
        "ratio": PaperValue(1e10, ORDER),
        "max_error_rate": PaperValue(1e-10, ORDER),
        "throughput_W": PaperValue(4.04e26, THREESIG),
        "bit_flux_paper": PaperValue(7.195e42, THREESIG),
    }
    return _finish("ultimate_laptop", params, derived, paper)


def _black_hole_laptop(params, constants) -> ScenarioReport:
    rep = blackhole.report(params["mass_kg"], params["page_c"], constants)
    derived = {
        "schwarzschild_radius_m": rep.schwarzschild_radius,
        "hawking_temperature_K": rep.hawking_temperature,
        "entropy_J_per_K": rep.entropy,
        "bits": rep.bits,
        "energy_per_bit_J": rep.energy_per_bit,
        "t_flip_s": rep.t_flip,
        "t_com_s": rep.t_com,
        "ratio": rep.ratio,
        "lifetime_s": rep.lifetime,
        "lifetime_ops": rep.lifetime_ops,
        "ops_per_second": rep.ops_per_second,
        "bekenstein_ratio": rep.bekenstein_ratio,
    }
    paper = {
        "schwarzschild_radius_m": PaperValue(1.485e-27, EXACT),
        "bits": PaperValue(3.827e16, EXACT),
        "ratio": PaperValue(math.log(2.0) / math.pi, EXACT),
        "bekenstein_ratio": PaperValue(1.0 / (2.0 * math.pi), EXACT),
        "lifetime_s": PaperValue(1e-19, ORDER),
        "lifetime_ops": PaperValue(1e32, ORDER),
    }
    return _finish("black_hole_laptop", params, derived, paper)


def _ordinary_matter(params, constants) -> ScenarioReport:
    bits = params["fraction"] * params["nuclei_count"]
    derived = {
        "bits": bits,
        "ops_per_second": bits * params["ops_per_bit_per_second"],
    }
    paper = {
        "bits": PaperValue(1e25, ORDER),
        "ops_per_second": PaperValue(1e40, ORDER),
    }
    return _finish("ordinary_matter", params, derived, paper)


def _io_bottleneck(params, constants) -> ScenarioReport:
    seconds = params["bits"] / params["io_rate_bits_per_s"]
    derived = {
        "read_write_time_s": seconds,
        "read_write_time_years": seconds_to_years(seconds),
    }
    paper = {"read_write_time_years": PaperValue(1e4, ORDER)}
    return _finish("io_bottleneck", params, derived, paper)


def _heavy_ion(params, constants) -> ScenarioReport:
    # Total kinetic energy of all nucleons; the per-nucleon convention
    # misses the reference operation time by two orders of magnitude.
    energy = params["nucleons"] * params["energy_per_nucleon_gev"] * GEV_J
    op_time = math.pi * constants.hbar / (2.0 * energy)
    collision_time = (params["diameter_fm"] * FERMI_M / params["gamma"]) / constants.c
    bits = params["entropy_bits_per_pion"] * params["pion_count"]
    derived = {
        "total_energy_J": energy,
        "op_time_s": op_time,
        "collision_time_s": collision_time,
        "bits": bits,
        "ops_during_collision": collision_time / op_time,
    }
    paper = {
        "op_time_s": PaperValue(1e-29, ORDER),
        "collision_time_s": PaperValue(1e-25, ORDER),
        "bits": PaperValue(1e4, ORDER),
        "ops_during_collision": PaperValue(1e4, ORDER),
    }
    return _finish("heavy_ion", params, derived, paper)


def _electrostatic_gate(params, constants) -> ScenarioReport:
    # Flip-to-signal ratio for two charges gating each other; independent
    # of their separation.
    ratio = math.pi / (2.0 * constants.alpha)
    derived = {"flip_to_com_ratio": ratio}
    paper = {"flip_to_com_ratio": PaperValue(215.3, EXACT)}
    return _finish("electrostatic_gate", params, derived, paper)


_Builder = Callable[[dict, PhysicalConstants], ScenarioReport]

_REGISTRY: dict[str, tuple[Scenario, _Builder]] = {
    "ultimate_laptop": (
        Scenario(
            "ultimate_laptop",
            {"mass_kg": 1.0, "volume_l": 1.0},
            "One kilogram in one liter with all rest energy and entropy devoted to computation.",
        ),
        _ultimate_laptop,
    ),
    "black_hole_laptop": (
        Scenario(
            "black_hole_laptop",
            {"mass_kg": 1.0, "page_c": blackhole.PAGE_C_DEFAULT},
            "The same kilogram compressed to its Schwarzschild radius.",
        ),
        _black_hole_laptop,
    ),
    "ordinary_matter": (
        Scenario(
            "ordinary_matter",
            {"nuclei_count": 1e25, "fraction": 1.0, "ops_per_bit_per_second": 1e15},
            "One bit per nucleus, flipped by electromagnetic interactions.",
        ),
        _ordinary_matter,
    ),
    "io_bottleneck": (
        Scenario(
            "io_bottleneck",
            {"bits": 1e23, "io_rate_bits_per_s": 1e12},
            "Serial read/write pass over an Avogadro-scale memory.",
        ),
        _io_bottleneck,
    ),
    "heavy_ion": (
        Scenario(
            "heavy_ion",
            {
                "nucleons": 200.0,
                "energy_per_nucleon_gev": 200.0,
                "diameter_fm": 12.5,
                "gamma": 100.0,
                "entropy_bits_per_pion": 4.0,
                "pion_count": 1e4,
            },
            "A relativistic nucleus-nucleus collision treated as a brief computation.",
        ),
        _heavy_ion,
    ),
    "electrostatic_gate": (
        Scenario(
            "electrostatic_gate",
            {},
            "Two charges gating each other; the flip-to-signal ratio is a pure constant.",
        ),
        _electrostatic_gate,
    ),
}


def scenario_names() -> list[str]:
    return list(_REGISTRY)


def get_scenario(name: str) -> Scenario:
    _require(name)
    return _REGISTRY[name][0]


def _require(name: str) -> None:
    if name not in _REGISTRY:
        raise KeyError(f"unknown scenario {name!r}; registered: {', '.join(_REGISTRY)}")


def run(
    name: str,
    overrides: dict[str, float] | None = None,
    constants: PhysicalConstants | None = None,
) -> ScenarioReport:
    """Run one registered scenario, optionally overriding its parameters."""
    _require(name)
    constants = constants or default_constants()
    scenario, builder = _REGISTRY[name]
    params = dict(scenario.parameters)
    for key, value in (overrides or {}).items():
        if key not in params:
            raise ValueError(
                f"scenario {name!r} has no parameter {key!r}; accepted: {sorted(params)}"
            )
        params[key] = float(value)
    return builder(params, constants)


@dataclass(frozen=True)
class ComparisonSummary:
    verdicts: dict[str, str]
    overall_pass: bool


def compare_to_paper(report: ScenarioReport) -> ComparisonSummary:
    """Grade every derived key that has a reference value; pass iff all match."""
    verdicts = {
        key: _grade(report.derived[key], ref) for key, ref in report.paper_values.items()
    }
    return ComparisonSummary(
        verdicts=verdicts, overall_pass=all(v == "match" for v in verdicts.values())
    )
