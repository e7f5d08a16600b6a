"""Unit-suffixed quantity parsing and display scaling for the CLI boundary.

Grammar: a number immediately followed by a unit token, e.g. 532nm,
40MW/cm2, 1pm/V, 2.5GHz (whitespace between number and unit is tolerated).
Decimal point is always '.', never locale-dependent. Unit tokens are
case-sensitive; '^' and the micro sign are normalized away, so um2, µm²-less
spellings like um^2 and m^2/V^2 all work.

The library core is strict SI; everything here converts to or from it.
"""

from __future__ import annotations

import math
import re

__all__ = [
    "UnitParseError",
    "parse_length",
    "parse_area",
    "parse_intensity",
    "parse_frequency",
    "parse_field",
    "parse_chi2",
    "parse_chi3",
    "format_sig",
    "format_intensity",
]


class UnitParseError(ValueError):
    """A quantity string did not match the <number><unit> grammar."""


LENGTH_UNITS = {
    "nm": 1e-9,
    "um": 1e-6,
    "mm": 1e-3,
    "cm": 1e-2,
    "m": 1.0,
    "km": 1e3,
}

AREA_UNITS = {
    "um2": 1e-12,
    "mm2": 1e-6,
    "cm2": 1e-4,
    "m2": 1.0,
}

INTENSITY_UNITS = {
    "W/m2": 1.0,
    "kW/m2": 1e3,
    "MW/m2": 1e6,
    "GW/m2": 1e9,
    "TW/m2": 1e12,
    "W/cm2": 1e4,
    "kW/cm2": 1e7,
    "MW/cm2": 1e10,
    "GW/cm2": 1e13,
    "TW/cm2": 1e16,
}

FREQUENCY_UNITS = {
    "Hz": 1.0,
    "kHz": 1e3,
    "MHz": 1e6,
    "GHz": 1e9,
    "THz": 1e12,
}

FIELD_UNITS = {
    "V/m": 1.0,
    "kV/m": 1e3,
    "MV/m": 1e6,
    "GV/m": 1e9,
}

CHI2_UNITS = {
    "m/V": 1.0,
    "pm/V": 1e-12,
}

CHI3_UNITS = {
    "m2/V2": 1.0,
}

_QUANTITY_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(\S+)\s*$"
)


def _normalize_unit(token: str) -> str:
    return token.replace("^", "").replace("µ", "u").replace("μ", "u")


def _parse(text: str, table: dict[str, float], dimension: str) -> float:
    match = _QUANTITY_RE.match(text)
    if match is None:
        raise UnitParseError(
            f"cannot parse {dimension} {text!r}: expected <number><unit>, e.g. 1{next(iter(table))}"
        )
    value = float(match.group(1))
    unit = _normalize_unit(match.group(2))
    if unit not in table:
        allowed = ", ".join(sorted(table))
        raise UnitParseError(
            f"unknown {dimension} unit {match.group(2)!r}; allowed: {allowed}"
        )
    return value * table[unit]


def parse_length(text: str) -> float:
    """'532nm' -> 5.32e-7 (m)."""
    return _parse(text, LENGTH_UNITS, "length")


def parse_area(text: str) -> float:
    """'1mm2' -> 1e-6 (m^2)."""
    return _parse(text, AREA_UNITS, "area")


def parse_intensity(text: str) -> float:
    """'40MW/cm2' -> 4e11 (W/m^2)."""
    return _parse(text, INTENSITY_UNITS, "intensity")


def parse_frequency(text: str) -> float:
    """'1GHz' -> 1e9 (Hz)."""
    return _parse(text, FREQUENCY_UNITS, "frequency")


def parse_field(text: str) -> float:
    """'5MV/m' -> 5e6 (V/m)."""
    return _parse(text, FIELD_UNITS, "field amplitude")


def parse_chi2(text: str) -> float:
    """'1pm/V' -> 1e-12 (m/V)."""
    return _parse(text, CHI2_UNITS, "second-order susceptibility")


def parse_chi3(text: str) -> float:
    """'1e-22m2/V2' -> 1e-22 (m^2/V^2)."""
    return _parse(text, CHI3_UNITS, "third-order susceptibility")


def format_sig(value: float, digits: int = 3) -> str:
    """Round to significant digits for table display, keeping trailing zeros."""
    text = f"{value:#.{digits}g}"
    return text[:-1] if text.endswith(".") else text


_INTENSITY_PREFIXES = [
    (1e12, "T"),
    (1e9, "G"),
    (1e6, "M"),
    (1e3, "k"),
    (1.0, ""),
]


def format_intensity(w_per_m2: float, digits: int = 3) -> str:
    """Auto-scaled intensity per cm^2, e.g. 1.345e14 W/m^2 -> '13.4 GW/cm2'."""
    if w_per_m2 < 0:
        raise ValueError("intensity must be nonnegative")
    per_cm2 = w_per_m2 * 1e-4
    if per_cm2 == 0.0 or not math.isfinite(per_cm2):
        return f"{per_cm2:g} W/cm2"
    for scale, prefix in _INTENSITY_PREFIXES:
        if per_cm2 >= scale:
            return f"{format_sig(per_cm2 / scale, digits)} {prefix}W/cm2"
    return f"{format_sig(per_cm2, digits)} W/cm2"
