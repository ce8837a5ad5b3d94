"""Command-line front end.

Subcommands: limits, blackhole, sweep, qverify, scenario, constants.
Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification or comparison failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import blackhole, qdyn, scenarios
from .constants import PhysicalConstants, default_constants, planck_scales
from .limits import ComputerSpec, compute_limits
from .parallelism import compression_sweep, sweep_to_csv
from .radiation import ParticleSpecies, SpeciesTable, default_species_table
from .units import liters_to_m3

_FORMATS = ("text", "json", "csv")


class ConfigError(ValueError):
    pass


@dataclass
class CliConfig:
    constants: PhysicalConstants
    species: SpeciesTable
    format: str = "text"
    precision: int = 6
    seed: int = 0


def render_json(obj) -> str:
    """JSON with every float in scientific notation at 11 significant digits."""

    def emit(value):
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            if not math.isfinite(value):
                return "null"
            return f"{value:.10e}"
        if isinstance(value, int):
            return str(value)
        if isinstance(value, str):
            return json.dumps(value)
        if value is None:
            return "null"
        if isinstance(value, dict):
            items = ", ".join(f"{json.dumps(str(k))}: {emit(v)}" for k, v in value.items())
            return "{" + items + "}"
        if isinstance(value, (list, tuple)):
            return "[" + ", ".join(emit(v) for v in value) + "]"
        raise TypeError(f"cannot serialize {type(value).__name__}")

    return emit(obj) + "\n"


def _flatten(obj, prefix=""):
    rows = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            rows.extend(_flatten(value, f"{prefix}{key}." if prefix else f"{key}."))
    elif isinstance(obj, (list, tuple)):
        rows.append((prefix[:-1], ";".join(str(v) for v in obj)))
    else:
        rows.append((prefix[:-1], obj))
    return rows


def _format_value(value, precision):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{precision}g}"
    return str(value)


def render_text(obj, precision) -> str:
    rows = _flatten(obj)
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {_format_value(v, precision)}\n" for key, v in rows)


def render_csv(obj) -> str:
    lines = ["key,value"]
    for key, value in _flatten(obj):
        lines.append(f"{key},{_format_value(value, 17)}")
    return "\n".join(lines) + "\n"


def render(obj, fmt, precision) -> str:
    if fmt == "json":
        return render_json(obj)
    if fmt == "csv":
        return render_csv(obj)
    return render_text(obj, precision)


def _species_from_config(entries) -> SpeciesTable:
    species = []
    for entry in entries:
        try:
            species.append(
                ParticleSpecies(
                    name=entry["name"],
                    mass_kg=float(entry["mass_kg"]),
                    count=int(entry["count"]),
                    polarizations=int(entry["polarizations"]),
                    statistics=entry["statistics"],
                )
            )
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"bad species entry {entry!r}: {exc}") from exc
    return SpeciesTable(tuple(species))


def load_config(path: str | None) -> CliConfig:
    """Read the JSON config document; absent fields keep their defaults."""
    config = CliConfig(constants=default_constants(), species=default_species_table())
    if path is None:
        return config
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    try:
        if "constants" in doc:
            config.constants = config.constants.replace(**doc["constants"])
        if "species" in doc:
            config.species = _species_from_config(doc["species"])
        if "format" in doc:
            if doc["format"] not in _FORMATS:
                raise ConfigError(f"format must be one of {_FORMATS}, got {doc['format']!r}")
            config.format = doc["format"]
        if "precision" in doc:
            config.precision = int(doc["precision"])
        if "seed" in doc:
            config.seed = int(doc["seed"])
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"invalid config {path}: {exc}") from exc
    return config


def _parse_overrides(pairs) -> dict[str, float]:
    overrides = {}
    for pair in pairs or []:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise ConfigError(f"--set expects key=value, got {pair!r}")
        try:
            overrides[key] = float(raw)
        except ValueError as exc:
            raise ConfigError(f"--set {key}: {raw!r} is not a number") from exc
    return overrides


def cmd_limits(args, config: CliConfig) -> int:
    if args.mass_kg <= 0 or args.volume_l <= 0:
        raise ConfigError("--mass-kg and --volume-l must be > 0")
    spec = ComputerSpec(args.mass_kg, liters_to_m3(args.volume_l), config.species)
    report = compute_limits(spec, config.constants)
    sys.stdout.write(render(report.to_json_dict(), args.format or config.format, config.precision))
    return 0


def cmd_blackhole(args, config: CliConfig) -> int:
    if args.mass_kg <= 0:
        raise ConfigError("--mass-kg must be > 0")
    report = blackhole.report(args.mass_kg, args.page_c, config.constants)
    doc = {
        "mass_kg": report.mass,
        "schwarzschild_radius_m": report.schwarzschild_radius,
        "hawking_temperature_K": report.hawking_temperature,
        "entropy_J_per_K": report.entropy,
        "bits": report.bits,
        "energy_per_bit_J": report.energy_per_bit,
        "t_flip_s": report.t_flip,
        "t_com_s": report.t_com,
        "ratio": report.ratio,
        "bekenstein_ratio": report.bekenstein_ratio,
        "page_c": report.page_c,
        "lifetime_s": report.lifetime,
        "lifetime_ops": report.lifetime_ops,
        "ops_per_second": report.ops_per_second,
    }
    sys.stdout.write(render(doc, args.format or config.format, config.precision))
    return 0


def cmd_sweep(args, config: CliConfig) -> int:
    rows = compression_sweep(
        args.mass_kg, args.r_start_m, args.r_end_m, args.points, config.species, config.constants
    )
    fmt = args.format or config.format
    if fmt == "json":
        doc = [
            {
                "R_m": r.half_size,
                "T_K": r.temperature,
                "S_JperK": r.entropy,
                "bits": r.bits,
                "ops_per_bit_s": r.ops_per_bit_s,
                "ratio": r.ratio,
                "bekenstein": r.bekenstein,
                "black_hole": r.black_hole,
            }
            for r in rows
        ]
        sys.stdout.write(render_json(doc))
    else:
        sys.stdout.write(sweep_to_csv(rows))
    return 0


def cmd_qverify(args, config: CliConfig) -> int:
    if args.trials < 1:
        raise ConfigError("--trials must be >= 1")
    if not (2 <= args.max_dim <= 8):
        raise ConfigError("--max-dim must be in [2, 8]")
    seed = args.seed if args.seed is not None else config.seed

    stats = qdyn.speed_limit_trials(trials=args.trials, max_dim=args.max_dim, seed=seed)

    result = qdyn.orthogonalization_time(qdyn.not_hamiltonian(1.0), [1.0, 0.0])
    attain_rel = abs(result.t_orth - math.pi) / math.pi if result.found else math.inf
    attained = result.found and attain_rel <= 1e-6

    embeddings = qdyn.boolean_embeddings_check()
    gates_ok = all(embeddings.values())

    ok = stats.violation_count == 0 and attained and gates_ok
    margin = "n/a" if stats.min_margin is None else f"{stats.min_margin:.9f}"
    lines = [
        f"trials                {stats.trials}",
        f"max_dim               {stats.max_dim}",
        f"seed                  {stats.seed}",
        f"found_orthogonal      {stats.found_count}",
        f"bound_violations      {stats.violation_count}",
        f"min_margin            {margin}",
        f"not_gate_attainment   rel_error={attain_rel:.3e} {'PASS' if attained else 'FAIL'}",
        f"truth_tables          "
        + " ".join(f"{name}={'PASS' if good else 'FAIL'}" for name, good in embeddings.items()),
        f"result                {'PASS' if ok else 'FAIL'}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_scenario(args, config: CliConfig) -> int:
    overrides = _parse_overrides(args.set)
    try:
        report = scenarios.run(args.name, overrides, config.constants)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from exc
    summary = scenarios.compare_to_paper(report)
    fmt = args.format or config.format
    doc = {
        "name": report.name,
        "parameters": report.parameters,
        "derived": report.derived,
        "reference": {
            key: {"value": ref.value, "kind": ref.kind}
            for key, ref in report.paper_values.items()
        },
        "verdicts": summary.verdicts,
        "overall": "pass" if summary.overall_pass else "fail",
    }
    sys.stdout.write(render(doc, fmt, config.precision))
    return 0 if summary.overall_pass else 1


def cmd_constants(args, config: CliConfig) -> int:
    c = config.constants
    scales = planck_scales(c)
    doc = {
        "c_m_per_s": c.c,
        "hbar_J_s": c.hbar,
        "G_m3_per_kg_s2": c.G,
        "k_B_J_per_K": c.k_B,
        "alpha": c.alpha,
        "planck_length_m": scales.length,
        "planck_time_s": scales.time,
        "planck_mass_kg": scales.mass,
    }
    sys.stdout.write(render(doc, args.format or config.format, config.precision))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="physlimits",
        description="Physical limits of computation for a given computer specification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a JSON config document")
    common.add_argument("--format", choices=_FORMATS, default=None, help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("limits", parents=[common], help="speed/memory/parallelism report")
    p.add_argument("--mass-kg", type=float, required=True)
    p.add_argument("--volume-l", type=float, required=True)
    p.set_defaults(handler=cmd_limits)

    p = sub.add_parser("blackhole", parents=[common], help="Schwarzschild-limit report")
    p.add_argument("--mass-kg", type=float, required=True)
    p.add_argument("--page-c", type=float, default=blackhole.PAGE_C_DEFAULT)
    p.set_defaults(handler=cmd_blackhole)

    p = sub.add_parser("sweep", parents=[common], help="compression sweep as CSV")
    p.add_argument("--mass-kg", type=float, required=True)
    p.add_argument("--r-start-m", type=float, required=True)
    p.add_argument("--r-end-m", type=float, required=True)
    p.add_argument("--points", type=int, default=50)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("qverify", parents=[common], help="verify the minimum-time bounds")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=cmd_qverify)

    p = sub.add_parser("scenario", parents=[common], help="run a named worked example")
    p.add_argument("name")
    p.add_argument("--set", action="append", metavar="KEY=VALUE",
                   help="override a scenario parameter (repeatable)")
    p.set_defaults(handler=cmd_scenario)

    p = sub.add_parser("constants", parents=[common], help="print the active constants")
    p.set_defaults(handler=cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.handler(args, config)
    except (ConfigError, ValueError) as exc:
        print(f"physlimits: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
