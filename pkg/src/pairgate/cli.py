"""pairgate command line: criteria | classify | flux | limit | sweep | oracle.

Every subcommand is a thin rendering over the library; no physics lives
here. Unit-suffixed quantities (532nm, 40MW/cm2, 1pm/V, ...) are parsed at
this boundary only. Exit codes: 0 success, 2 input validation, 3 I/O.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import model, oracle
from .materials import (
    MATERIALS_ENV_VAR,
    MaterialParseError,
    UnknownMaterialError,
    lookup,
    resolve_catalog,
)
from .model import (
    Arm,
    Bandwidth,
    Geometry,
    Medium,
    Process,
    PumpDrive,
    triplet_from_wavelengths,
)
from .units import (
    UnitParseError,
    format_intensity,
    format_sig,
    parse_area,
    parse_chi2,
    parse_chi3,
    parse_field,
    parse_frequency,
    parse_intensity,
    parse_length,
)

__all__ = ["main", "SweepSpec", "SweepVariable", "SweepScale"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3

DEFAULT_WAVELENGTH = 1e-6  # m, degenerate signal/idler default
ORACLE_REFERENCE = {
    "chi2": 1e-12,       # m/V
    "length": 1e-3,      # m
    "section": 1e-6,     # m^2
}


class CliInputError(Exception):
    """Inconsistent or missing flags detected after argparse."""


class SweepVariable(Enum):
    BETA_L = "beta_l"
    LENGTH = "length"
    PUMP_INTENSITY = "pump_intensity"


class SweepScale(Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    """Axis of a parameter sweep; fixed parameters ride along via flags."""

    variable: SweepVariable
    start: float
    stop: float
    count: int
    scale: SweepScale = SweepScale.LINEAR

    def __post_init__(self) -> None:
        if not self.start < self.stop:
            raise ValueError("sweep requires min < max")
        if self.count < 2:
            raise ValueError("sweep requires at least 2 points")
        if self.scale is SweepScale.LOG and self.start <= 0:
            raise ValueError("log scale requires min > 0")

    def grid(self) -> np.ndarray:
        if self.scale is SweepScale.LINEAR:
            return np.linspace(self.start, self.stop, self.count)
        return 10.0 ** np.linspace(np.log10(self.start), np.log10(self.stop), self.count)


def _unit_type(parser_fn):
    def convert(text: str):
        try:
            return parser_fn(text)
        except UnitParseError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc

    convert.__name__ = parser_fn.__name__
    return convert


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--materials", metavar="PATH", default=None,
                        help=f"material catalog file (overrides ${MATERIALS_ENV_VAR} and presets)")
    common.add_argument("--format", choices=("table", "csv"), default="table",
                        help="output rendering for scalar reports")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")

    medium_flags = argparse.ArgumentParser(add_help=False)
    medium_flags.add_argument("--material", help="material name from the catalog")
    medium_flags.add_argument("--chi2", type=_unit_type(parse_chi2), metavar="CHI",
                              help="second-order susceptibility, e.g. 1pm/V (implies spdc)")
    medium_flags.add_argument("--chi3", type=_unit_type(parse_chi3), metavar="CHI",
                              help="third-order susceptibility, e.g. 1e-22m2/V2 (implies fwm)")
    medium_flags.add_argument("--n-p", type=float, default=None, help="pump refractive index")
    medium_flags.add_argument("--n-s", type=float, default=None, help="signal refractive index")
    medium_flags.add_argument("--n-i", type=float, default=None, help="idler refractive index")

    wave_flags = argparse.ArgumentParser(add_help=False)
    wave_flags.add_argument("--lambda-s", type=_unit_type(parse_length), metavar="LEN",
                            default=DEFAULT_WAVELENGTH, help="signal wavelength (default 1um)")
    wave_flags.add_argument("--lambda-i", type=_unit_type(parse_length), metavar="LEN",
                            default=DEFAULT_WAVELENGTH, help="idler wavelength (default 1um)")
    wave_flags.add_argument("--lambda-p", type=_unit_type(parse_length), metavar="LEN",
                            default=None, help="pump wavelength (derived when omitted)")

    pump_flags = argparse.ArgumentParser(add_help=False)
    pump_flags.add_argument("--pump-intensity", type=_unit_type(parse_intensity), metavar="I",
                            help="pump intensity, e.g. 40MW/cm2 (FWM: total of both pump waves)")
    pump_flags.add_argument("--pump-field", type=_unit_type(parse_field), metavar="E",
                            help="pump field amplitude, e.g. 5MV/m (alternative to intensity)")

    parser = argparse.ArgumentParser(
        prog="pairgate",
        description="Photon-pair generation by SPDC/FWM: gain regimes, "
                    "universal limit criteria, limit pump intensities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("criteria", parents=[common],
                   help="print the universal limit criteria at beta*L = 1")

    p_classify = sub.add_parser("classify", parents=[common, medium_flags, wave_flags, pump_flags],
                                help="classify the operating regime of a configuration")
    p_classify.add_argument("--length", type=_unit_type(parse_length), metavar="LEN",
                            required=True, help="interaction length, e.g. 1cm")
    p_classify.add_argument("--section", type=_unit_type(parse_area), metavar="AREA",
                            default=None, help="overlap section, e.g. 1mm2 (enables field report)")
    p_classify.add_argument("--delta-nu", type=_unit_type(parse_frequency), metavar="BW",
                            default=None, help="pair linewidth, e.g. 1GHz (enables field report)")
    p_classify.add_argument("--band", type=float, default=0.01,
                            help="relative at-limit band on beta*L (default 0.01)")

    p_flux = sub.add_parser("flux", parents=[common, medium_flags, wave_flags, pump_flags],
                            help="absolute pair flux for a configuration or a given beta*L")
    p_flux.add_argument("--beta-l", type=float, default=None,
                        help="gain product beta*L (bypasses the medium/pump flags)")
    p_flux.add_argument("--length", type=_unit_type(parse_length), metavar="LEN", default=None,
                        help="interaction length (required without --beta-l)")
    p_flux.add_argument("--delta-nu", type=_unit_type(parse_frequency), metavar="BW",
                        required=True, help="pair linewidth, e.g. 1GHz")

    p_limit = sub.add_parser("limit", parents=[common, medium_flags, wave_flags],
                             help="limit pump intensity at which beta*L = 1")
    p_limit.add_argument("--length", type=_unit_type(parse_length), metavar="LEN",
                         required=True, help="interaction length, e.g. 1mm")

    p_sweep = sub.add_parser("sweep", parents=[common, medium_flags, wave_flags],
                             help="CSV parameter sweeps, including figure presets")
    p_sweep.add_argument("--figure", choices=("2", "3", "4"), default=None,
                         help="preset sweep reproducing one of the reference figures")
    p_sweep.add_argument("--variable", choices=[v.value for v in SweepVariable], default=None,
                         help="swept variable for an explicit sweep")
    p_sweep.add_argument("--min", dest="sweep_min", default=None,
                         help="sweep start (unit-suffixed for length/intensity)")
    p_sweep.add_argument("--max", dest="sweep_max", default=None,
                         help="sweep stop (unit-suffixed for length/intensity)")
    p_sweep.add_argument("--count", type=_positive_int, default=101, help="number of points")
    p_sweep.add_argument("--scale", choices=("linear", "log"), default="linear")
    p_sweep.add_argument("--length", type=_unit_type(parse_length), metavar="LEN", default=None,
                         help="fixed interaction length (pump_intensity sweeps)")
    p_sweep.add_argument("--delta-nu", type=_unit_type(parse_frequency), metavar="BW",
                         default=None, help="pair linewidth for flux columns")

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="compare the RK4 coupled-wave oracle against the closed form")
    p_oracle.add_argument("--beta-l", type=float, required=True, help="gain product beta*L")
    p_oracle.add_argument("--steps", type=_positive_int, default=1024,
                          help="fixed RK4 step count (default 1024)")
    p_oracle.add_argument("--delta-nu", type=_unit_type(parse_frequency), metavar="BW",
                          default=1.0, help="pair linewidth (default 1Hz)")
    p_oracle.add_argument("--section", type=_unit_type(parse_area), metavar="AREA",
                          default=ORACLE_REFERENCE["section"],
                          help="overlap section of the reference scenario (default 1mm2)")

    return parser


# --------------------------------------------------------------------------
# assembly helpers (flags -> domain objects)
# --------------------------------------------------------------------------

def _build_medium(args) -> Medium:
    sources = [s for s in ("--material" if args.material else None,
                           "--chi2" if args.chi2 is not None else None,
                           "--chi3" if args.chi3 is not None else None) if s]
    if len(sources) != 1:
        raise CliInputError(
            "specify exactly one medium source among --material, --chi2, --chi3"
            + (f" (got {', '.join(sources)})" if sources else "")
        )
    if args.material:
        catalog = resolve_catalog(args.materials)
        record = lookup(catalog, args.material)
        medium = record.to_medium()
        overrides = {
            "n_p": args.n_p if args.n_p is not None else medium.n_p,
            "n_s": args.n_s if args.n_s is not None else medium.n_s,
            "n_i": args.n_i if args.n_i is not None else medium.n_i,
        }
        return Medium(process=medium.process, chi_eff=medium.chi_eff, **overrides)
    process = Process.SPDC if args.chi2 is not None else Process.FWM
    chi = args.chi2 if args.chi2 is not None else args.chi3
    return Medium(
        process=process,
        chi_eff=chi,
        n_p=args.n_p if args.n_p is not None else 1.0,
        n_s=args.n_s if args.n_s is not None else 1.0,
        n_i=args.n_i if args.n_i is not None else 1.0,
    )


def _build_triplet(args, process: Process) -> model.WaveTriplet:
    return triplet_from_wavelengths(args.lambda_s, args.lambda_i, process, args.lambda_p)


def _build_pump(args) -> PumpDrive:
    if (args.pump_intensity is None) == (args.pump_field is None):
        raise CliInputError("specify exactly one of --pump-intensity or --pump-field")
    if args.pump_intensity is not None:
        return PumpDrive.from_intensity(args.pump_intensity)
    return PumpDrive.from_field(args.pump_field)


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def _render_table(rows: list[tuple[str, str]]) -> str:
    width = max(len(key) for key, _ in rows)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in rows)


def _csv_cell(value) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def _render_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(text: str, args) -> None:
    if args.out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text if text.endswith("\n") else text + "\n")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_criteria(args) -> str:
    crit = model.limit_criteria()
    if args.format == "csv":
        return _render_csv(
            ["pairs_per_bandwidth_limit", "photons_per_bandwidth_limit", "field_ratio_limit"],
            [[crit.pairs_limit, crit.photons_limit, crit.field_ratio_limit]],
        )
    rows = [
        ("quantity", "value   exact"),
        ("pairs_per_bandwidth_limit", f"{crit.pairs_limit:.3f}   {crit.pairs_limit!r}"),
        ("photons_per_bandwidth_limit", f"{crit.photons_limit:.3f}   {crit.photons_limit!r}"),
        ("field_ratio_limit", f"{crit.field_ratio_limit:.3f}   {crit.field_ratio_limit!r}"),
    ]
    return _render_table(rows)


def cmd_classify(args) -> str:
    medium = _build_medium(args)
    triplet = _build_triplet(args, medium.process)
    pump = _build_pump(args)
    beta = model.gain_coefficient(medium, triplet, pump)
    report = model.classify_regime(beta * args.length, at_limit_band=args.band)

    header = ["beta_l", "regime", "pairs_per_bandwidth", "field_ratio"]
    values = [report.beta_l, report.regime.value, report.pairs_per_bandwidth, report.field_ratio]

    extra_rows: list[tuple[str, str]] = []
    if args.section is not None and args.delta_nu is not None:
        geometry = Geometry(length=args.length, section=args.section)
        bandwidth = Bandwidth.from_delta_nu(args.delta_nu)
        vac = model.vacuum_fluctuation(
            triplet.omega_s, medium.n_s, geometry.section, bandwidth.delta_omega
        )
        gen = model.generated_field(
            report.beta_l, triplet, medium, geometry, bandwidth, Arm.SIGNAL
        )
        header += ["vacuum_field_V_per_m", "generated_field_V_per_m"]
        values += [vac, gen]
        extra_rows = [
            ("vacuum_field", f"{format_sig(vac)} V/m"),
            ("generated_field", f"{format_sig(gen)} V/m"),
        ]

    if args.format == "csv":
        return _render_csv(header, [values])
    rows = [
        ("beta_l", format_sig(report.beta_l)),
        ("regime", report.regime.value),
        ("pairs_per_bandwidth", format_sig(report.pairs_per_bandwidth)),
        ("field_ratio", format_sig(report.field_ratio)),
    ] + extra_rows
    return _render_table(rows)


def cmd_flux(args) -> str:
    physical = [args.pump_intensity, args.pump_field, args.length]
    if args.beta_l is not None:
        if any(v is not None for v in physical) or args.material or args.chi2 or args.chi3:
            raise CliInputError("--beta-l replaces the medium/pump/length flags; drop them")
        beta_l = args.beta_l
        if beta_l < 0:
            raise CliInputError("--beta-l: must be nonnegative")
    else:
        if args.length is None:
            raise CliInputError("--length is required when --beta-l is not given")
        medium = _build_medium(args)
        triplet = _build_triplet(args, medium.process)
        pump = _build_pump(args)
        beta_l = model.gain_coefficient(medium, triplet, pump) * args.length

    pairs = model.pair_flux_reduced(beta_l, args.delta_nu)
    if args.format == "csv":
        return _render_csv(["beta_l", "delta_nu_Hz", "pairs_per_s"], [[beta_l, args.delta_nu, pairs]])
    return _render_table([
        ("beta_l", format_sig(beta_l)),
        ("delta_nu", f"{format_sig(args.delta_nu)} Hz"),
        ("pairs_per_s", format_sig(pairs)),
    ])


def cmd_limit(args) -> str:
    medium = _build_medium(args)
    i_lim = model.limit_pump_intensity(medium, args.lambda_s, args.lambda_i, args.length)
    gamma = model.effective_limit_intensity(medium, args.lambda_s, args.lambda_i, args.length)
    if args.format == "csv":
        return _render_csv(
            ["process", "length_m", "lambda_s_m", "lambda_i_m", "chi_eff_si",
             "limit_intensity_W_per_m2", "effective_limit_W_per_m2"],
            [[medium.process.value, args.length, args.lambda_s, args.lambda_i,
              medium.chi_eff, i_lim, gamma]],
        )
    return _render_table([
        ("process", medium.process.value),
        ("length", f"{format_sig(args.length)} m"),
        ("lambda_s", f"{format_sig(args.lambda_s)} m"),
        ("lambda_i", f"{format_sig(args.lambda_i)} m"),
        ("chi_eff", format_sig(medium.chi_eff)
         + (" m/V" if medium.process is Process.SPDC else " m2/V2")),
        ("limit_pump_intensity", f"{format_intensity(i_lim)}   ({i_lim!r} W/m2)"),
        ("effective_limit_gamma", f"{format_intensity(gamma)}   ({gamma!r} W/m2)"),
    ])


def _figure_sweep(figure: str) -> str:
    # reference-figure presets: degenerate 1 um pair, unit indices
    if figure == "2":
        grid = np.linspace(0.0, 6.0, 121)
        rows = [[float(x), model.pairs_per_bandwidth(float(x))] for x in grid]
        return _render_csv(["beta_l", "pairs_per_bandwidth"], rows)

    if figure == "3":
        chis = [(1e-12, "1pm_V"), (1e-11, "10pm_V"), (1e-10, "100pm_V")]
        grid = 10.0 ** np.linspace(-3.0, 0.0, 61)
        process = Process.SPDC
        tag = "chi2"
    else:
        chis = [(1e-22, "1e-22m2_V2"), (1e-20, "1e-20m2_V2"), (1e-18, "1e-18m2_V2")]
        grid = 10.0 ** np.linspace(-3.0, 3.0, 121)
        process = Process.FWM
        tag = "chi3"

    media = [Medium(process=process, chi_eff=chi) for chi, _ in chis]
    header = ["length_m"] + [f"gamma_W_per_m2_{tag}_{label}" for _, label in chis]
    rows = []
    for length in grid:
        row = [float(length)]
        row += [
            model.effective_limit_intensity(m, DEFAULT_WAVELENGTH, DEFAULT_WAVELENGTH, float(length))
            for m in media
        ]
        rows.append(row)
    return _render_csv(header, rows)


def _explicit_sweep(args) -> str:
    if args.sweep_min is None or args.sweep_max is None:
        raise CliInputError("explicit sweeps require --min and --max")
    variable = SweepVariable(args.variable)
    scale = SweepScale(args.scale)

    def spec(parse):
        try:
            start, stop = parse(args.sweep_min), parse(args.sweep_max)
        except (UnitParseError, ValueError) as exc:
            raise CliInputError(f"--min/--max: {exc}") from exc
        try:
            return SweepSpec(variable, start, stop, args.count, scale)
        except ValueError as exc:
            raise CliInputError(f"--min/--max/--count/--scale: {exc}") from exc

    def flux_columns(beta_l: float) -> list[float]:
        row = [model.pairs_per_bandwidth(beta_l)]
        if args.delta_nu is not None:
            row.append(model.pair_flux_reduced(beta_l, args.delta_nu))
        return row

    flux_header = ["pairs_per_bandwidth"] + (
        ["pairs_per_s"] if args.delta_nu is not None else []
    )

    if variable is SweepVariable.BETA_L:
        sweep = spec(float)
        rows = [[float(x)] + flux_columns(float(x)) for x in sweep.grid()]
        return _render_csv(["beta_l"] + flux_header, rows)

    if variable is SweepVariable.LENGTH:
        if args.delta_nu is not None:
            raise CliInputError("--delta-nu does not apply to a length sweep")
        sweep = spec(parse_length)
        medium = _build_medium(args)
        rows = []
        for length in sweep.grid():
            rows.append([
                float(length),
                model.effective_limit_intensity(medium, args.lambda_s, args.lambda_i, float(length)),
            ])
        return _render_csv(["length_m", "gamma_W_per_m2"], rows)

    sweep = spec(parse_intensity)
    if args.length is None:
        raise CliInputError("--length is required for a pump_intensity sweep")
    medium = _build_medium(args)
    triplet = _build_triplet(args, medium.process)
    rows = []
    for intensity in sweep.grid():
        pump = PumpDrive.from_intensity(float(intensity))
        beta_l = model.gain_coefficient(medium, triplet, pump) * args.length
        rows.append([float(intensity), beta_l] + flux_columns(beta_l))
    return _render_csv(["pump_intensity_W_per_m2", "beta_l"] + flux_header, rows)


def cmd_sweep(args) -> str:
    if (args.figure is None) == (args.variable is None):
        raise CliInputError("specify exactly one of --figure or --variable")
    if args.figure is not None:
        return _figure_sweep(args.figure)
    return _explicit_sweep(args)


def cmd_oracle(args) -> str:
    if args.beta_l < 0:
        raise CliInputError("--beta-l: must be nonnegative")
    medium = Medium(process=Process.SPDC, chi_eff=ORACLE_REFERENCE["chi2"])
    triplet = triplet_from_wavelengths(DEFAULT_WAVELENGTH, DEFAULT_WAVELENGTH, Process.SPDC)
    geometry = Geometry(length=ORACLE_REFERENCE["length"], section=args.section)
    bandwidth = Bandwidth.from_delta_nu(args.delta_nu)
    pump = model.pump_for_gain(medium, triplet, geometry, args.beta_l)
    config = oracle.IntegrationConfig(steps=args.steps)

    analytic = model.pair_flux_reduced(args.beta_l, args.delta_nu)
    numeric = oracle.oracle_pair_flux(medium, triplet, pump, geometry, bandwidth, config)
    error = abs(numeric - analytic) / analytic if analytic > 0 else abs(numeric - analytic)

    if args.format == "csv":
        return _render_csv(
            ["beta_l", "steps", "analytic_pairs_per_s", "oracle_pairs_per_s", "relative_error"],
            [[args.beta_l, args.steps, analytic, numeric, error]],
        )
    return _render_table([
        ("beta_l", format_sig(args.beta_l)),
        ("steps", str(args.steps)),
        ("analytic_pairs_per_s", repr(analytic)),
        ("oracle_pairs_per_s", repr(numeric)),
        ("relative_error", format_sig(error)),
    ])


_COMMANDS = {
    "criteria": cmd_criteria,
    "classify": cmd_classify,
    "flux": cmd_flux,
    "limit": cmd_limit,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = _COMMANDS[args.command](args)
    except CliInputError as exc:
        print(f"pairgate {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MaterialParseError, UnknownMaterialError, ValueError, OSError) as exc:
        # OSError here is a failed catalog read, i.e. a bad --materials value
        message = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"pairgate {args.command}: {message}", file=sys.stderr)
        return EXIT_INPUT
    try:
        _emit(output, args)
    except OSError as exc:
        print(f"pairgate {args.command}: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
