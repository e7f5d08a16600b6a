"""Material catalog: named media loaded from a line-oriented text format.

Format, one block per material:

    # comment
    [KTP_class]
    process = spdc
    chi_eff = 1 pm/V
    n_p = 1.0
    n_s = 1.0
    n_i = 1.0
    note = chi2 class of KTP and BBO (nominal, order of magnitude)

Keys: process (spdc|fwm), chi_eff (number + unit, pm/V or m/V for spdc,
m2/V2 for fwm), optional indices n_p/n_s/n_i (default 1.0) and an optional
free-text note. The declared chi unit must match the process order.

When all three indices are left at the 1.0 default the record is flagged as
effective-gamma mode: limit pump intensities computed from it coincide with
the index-normalized effective values, which is how the shipped presets are
meant to be read. Real refractive indices are user configuration; the
presets deliberately do not invent any.

Catalog resolution order: explicit path > PAIRGATE_MATERIALS env var >
built-in presets.
"""

from __future__ import annotations

import difflib
import os
from dataclasses import dataclass
from pathlib import Path

from .model import Medium, Process
from .units import _QUANTITY_RE, _normalize_unit

__all__ = [
    "MaterialRecord",
    "MaterialParseError",
    "UnknownMaterialError",
    "load_catalog",
    "load_catalog_file",
    "serialize_catalog",
    "builtin_presets",
    "resolve_catalog",
    "lookup",
    "MATERIALS_ENV_VAR",
]

MATERIALS_ENV_VAR = "PAIRGATE_MATERIALS"

_CHI_UNITS = {
    "pm/V": (Process.SPDC, 1e-12),
    "m/V": (Process.SPDC, 1.0),
    "m2/V2": (Process.FWM, 1.0),
}

_PROCESS_NAMES = {p.value: p for p in Process}


class MaterialParseError(ValueError):
    """Catalog text violates the material-file grammar or its invariants."""

    def __init__(self, message: str, origin: str, line: int) -> None:
        super().__init__(f"{origin}:{line}: {message}")
        self.origin = origin
        self.line = line


class UnknownMaterialError(KeyError):
    """Lookup of a name not present in the catalog."""

    def __init__(self, name: str, suggestions: list[str]) -> None:
        hint = f"; closest names: {', '.join(suggestions)}" if suggestions else ""
        super().__init__(f"unknown material {name!r}{hint}")
        self.name = name
        self.suggestions = suggestions


@dataclass(frozen=True)
class MaterialRecord:
    """One named medium with its susceptibility in the declared unit."""

    name: str
    process: Process
    chi_eff: float  # in chi_unit
    chi_unit: str
    n_p: float = 1.0
    n_s: float = 1.0
    n_i: float = 1.0
    provenance_note: str = ""

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("material name must be nonempty")
        if self.chi_unit not in _CHI_UNITS:
            raise ValueError(f"unknown chi unit {self.chi_unit!r}")
        if _CHI_UNITS[self.chi_unit][0] is not self.process:
            raise ValueError(
                f"chi unit {self.chi_unit!r} does not match process {self.process.value!r}"
            )
        if self.chi_eff <= 0:
            raise ValueError("chi_eff must be strictly positive")
        for field_name in ("n_p", "n_s", "n_i"):
            if getattr(self, field_name) < 1.0:
                raise ValueError(f"{field_name} must be >= 1")

    @property
    def chi_eff_si(self) -> float:
        """Susceptibility in SI (m/V or m^2/V^2)."""
        return self.chi_eff * _CHI_UNITS[self.chi_unit][1]

    @property
    def effective_gamma_mode(self) -> bool:
        """True when all indices are 1.0, so limit intensities are the
        index-normalized effective values."""
        return self.n_p == 1.0 and self.n_s == 1.0 and self.n_i == 1.0

    def to_medium(self) -> Medium:
        return Medium(
            process=self.process,
            chi_eff=self.chi_eff_si,
            n_p=self.n_p,
            n_s=self.n_s,
            n_i=self.n_i,
        )


# Nominal susceptibility classes; deliberately order-of-magnitude values
# with unit indices (effective-gamma mode), flagged approximate in the note.
PRESETS_TEXT = """\
# pairgate built-in material classes (nominal values, indices not included)

[KTP_class]
process = spdc
chi_eff = 1 pm/V
note = approximate chi2 class of KTP and BBO

[PPKTP_class]
process = spdc
chi_eff = 10 pm/V
note = approximate chi2 class of PPKTP and PPLN

[CSP_class]
process = spdc
chi_eff = 100 pm/V
note = approximate chi2 class of CSP and GaAs

[silica_fiber]
process = fwm
chi_eff = 1e-22 m2/V2
note = approximate chi3 of fused-silica fiber
"""

_INDEX_KEYS = ("n_p", "n_s", "n_i")


def _parse_chi(value: str, origin: str, line: int) -> tuple[float, str]:
    match = _QUANTITY_RE.match(value)
    if match is None:
        raise MaterialParseError(
            f"chi_eff must be <number> <unit>, got {value!r}", origin, line
        )
    unit = _normalize_unit(match.group(2))
    if unit not in _CHI_UNITS:
        allowed = ", ".join(sorted(_CHI_UNITS))
        raise MaterialParseError(
            f"unknown chi unit {match.group(2)!r}; allowed: {allowed}", origin, line
        )
    return float(match.group(1)), unit


def _build_record(
    name: str, fields: dict[str, tuple[str, int]], origin: str, header_line: int
) -> MaterialRecord:
    if "process" not in fields:
        raise MaterialParseError(f"material {name!r} lacks a process key", origin, header_line)
    if "chi_eff" not in fields:
        raise MaterialParseError(f"material {name!r} lacks a chi_eff key", origin, header_line)

    process_text, process_line = fields["process"]
    process = _PROCESS_NAMES.get(process_text.lower())
    if process is None:
        raise MaterialParseError(
            f"process must be one of {sorted(_PROCESS_NAMES)}, got {process_text!r}",
            origin,
            process_line,
        )

    chi_text, chi_line = fields["chi_eff"]
    chi_value, chi_unit = _parse_chi(chi_text, origin, chi_line)
    if chi_value <= 0:
        raise MaterialParseError("chi_eff must be strictly positive", origin, chi_line)
    if _CHI_UNITS[chi_unit][0] is not process:
        raise MaterialParseError(
            f"chi unit {chi_unit!r} does not match a {process.value} process",
            origin,
            chi_line,
        )

    indices = {}
    for key in _INDEX_KEYS:
        if key in fields:
            text, line = fields[key]
            try:
                indices[key] = float(text)
            except ValueError:
                raise MaterialParseError(f"{key} must be a number, got {text!r}", origin, line)
            if indices[key] < 1.0:
                raise MaterialParseError(f"{key} must be >= 1", origin, line)
        else:
            indices[key] = 1.0

    note = fields["note"][0] if "note" in fields else ""
    return MaterialRecord(
        name=name,
        process=process,
        chi_eff=chi_value,
        chi_unit=chi_unit,
        provenance_note=note,
        **indices,
    )


def load_catalog(text: str, origin: str = "<string>") -> list[MaterialRecord]:
    """Parse catalog text into validated records; duplicate names rejected."""
    records: list[MaterialRecord] = []
    seen: dict[str, int] = {}
    name: str | None = None
    header_line = 0
    fields: dict[str, tuple[str, int]] = {}

    def flush() -> None:
        if name is None:
            return
        records.append(_build_record(name, fields, origin, header_line))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            flush()
            name = line[1:-1].strip()
            header_line = lineno
            fields = {}
            if not name:
                raise MaterialParseError("empty material name", origin, lineno)
            if name in seen:
                raise MaterialParseError(
                    f"duplicate material {name!r} (first defined at line {seen[name]})",
                    origin,
                    lineno,
                )
            seen[name] = lineno
            continue
        if "=" not in line:
            raise MaterialParseError(
                f"expected 'key = value' or '[name]', got {line!r}", origin, lineno
            )
        if name is None:
            raise MaterialParseError(
                "key/value line before any [material] header", origin, lineno
            )
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in ("process", "chi_eff", "note", *_INDEX_KEYS):
            raise MaterialParseError(f"unknown key {key!r}", origin, lineno)
        if key in fields:
            raise MaterialParseError(f"duplicate key {key!r}", origin, lineno)
        fields[key] = (value, lineno)

    flush()
    return records


def load_catalog_file(path: str | Path) -> list[MaterialRecord]:
    path = Path(path)
    return load_catalog(path.read_text(encoding="utf-8"), origin=str(path))


def serialize_catalog(records: list[MaterialRecord]) -> str:
    """Emit catalog text that load_catalog parses back to an equal catalog."""
    blocks = []
    for rec in records:
        lines = [f"[{rec.name}]", f"process = {rec.process.value}"]
        lines.append(f"chi_eff = {rec.chi_eff!r} {rec.chi_unit}")
        for key in _INDEX_KEYS:
            value = getattr(rec, key)
            if value != 1.0:
                lines.append(f"{key} = {value!r}")
        if rec.provenance_note:
            lines.append(f"note = {rec.provenance_note}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def builtin_presets() -> list[MaterialRecord]:
    return load_catalog(PRESETS_TEXT, origin="<builtin>")


def resolve_catalog(explicit_path: str | Path | None = None) -> list[MaterialRecord]:
    """Load the catalog honoring the explicit-path > env var > presets order."""
    if explicit_path is not None:
        return load_catalog_file(explicit_path)
    env_path = os.environ.get(MATERIALS_ENV_VAR)
    if env_path:
        return load_catalog_file(env_path)
    return builtin_presets()


def lookup(catalog: list[MaterialRecord], name: str) -> MaterialRecord:
    """Exact-name lookup; raises with the nearest names on a miss."""
    for rec in catalog:
        if rec.name == name:
            return rec
    suggestions = difflib.get_close_matches(name, [r.name for r in catalog], n=3, cutoff=0.3)
    raise UnknownMaterialError(name, suggestions)
