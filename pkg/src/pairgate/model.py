"""Semiclassical model of photon-pair generation by SPDC and FWM.

Closed-form expressions for the parametric gain, the pair flux seeded by
vacuum fluctuations under the undepleted-pump approximation, and the
universal criteria separating the spontaneous (small-signal) regime from
the stimulated (high-signal) regime at beta*L = 1.

All quantities are strict SI: angular frequencies in rad/s, fields in V/m,
intensities in W/m^2, lengths in m. Collinear, exactly phase-matched
interaction is assumed throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .constants import CODATA2018

__all__ = [
    "Process",
    "Arm",
    "Regime",
    "AsymptoteBranch",
    "WaveTriplet",
    "Medium",
    "Geometry",
    "PumpDrive",
    "Bandwidth",
    "RegimeReport",
    "LimitCriteria",
    "coupling_factor",
    "vacuum_fluctuation",
    "intensity_to_field",
    "field_to_intensity",
    "gain_coefficient",
    "pump_for_gain",
    "pair_flux_general",
    "pair_flux_reduced",
    "pairs_per_bandwidth",
    "flux_asymptote",
    "limit_criteria",
    "generated_field",
    "photon_number_from_field",
    "field_ratio",
    "limit_pump_intensity",
    "effective_limit_intensity",
    "classify_regime",
    "triplet_from_wavelengths",
]

# Relative tolerance on energy conservation when a full frequency triplet is
# supplied; loose enough to absorb wavelength rounding, tight enough to catch
# genuinely inconsistent inputs.
ENERGY_CONSERVATION_RTOL = 1e-6


class Process(Enum):
    """Pair-generation process: one pump photon (SPDC) or two (FWM) per pair."""

    SPDC = "spdc"
    FWM = "fwm"


class Arm(Enum):
    """Which generated wave of the pair is meant."""

    SIGNAL = "signal"
    IDLER = "idler"


class Regime(Enum):
    """Operating regime relative to the beta*L = 1 limit."""

    SMALL_SIGNAL = "small-signal"
    AT_LIMIT = "at-limit"
    HIGH_SIGNAL = "high-signal"


class AsymptoteBranch(Enum):
    """Limiting branch of the pair flux per frequency unit."""

    SMALL = "small"
    HIGH = "high"


@dataclass(frozen=True)
class WaveTriplet:
    """Pump, signal and idler angular frequencies (rad/s) of one process.

    Energy conservation is enforced: omega_p = omega_s + omega_i for SPDC,
    2*omega_p = omega_s + omega_i for FWM, within ENERGY_CONSERVATION_RTOL.
    The degenerate case omega_s = omega_i is allowed.
    """

    omega_p: float
    omega_s: float
    omega_i: float
    process: Process

    def __post_init__(self) -> None:
        for name in ("omega_p", "omega_s", "omega_i"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        pump_total = self.omega_p if self.process is Process.SPDC else 2.0 * self.omega_p
        residual = abs(pump_total - (self.omega_s + self.omega_i)) / pump_total
        if residual > ENERGY_CONSERVATION_RTOL:
            raise ValueError(
                f"energy conservation violated for {self.process.value}: "
                f"relative residual {residual:.3e} exceeds {ENERGY_CONSERVATION_RTOL:.0e}"
            )

    @classmethod
    def from_signal_idler(cls, omega_s: float, omega_i: float, process: Process) -> "WaveTriplet":
        """Build a triplet with the pump frequency fixed by energy conservation."""
        if omega_s <= 0 or omega_i <= 0:
            raise ValueError("signal and idler frequencies must be strictly positive")
        total = omega_s + omega_i
        omega_p = total if process is Process.SPDC else 0.5 * total
        return cls(omega_p, omega_s, omega_i, process)

    @classmethod
    def from_pump_signal(cls, omega_p: float, omega_s: float, process: Process) -> "WaveTriplet":
        """Build a triplet with the idler frequency fixed by energy conservation."""
        pump_total = omega_p if process is Process.SPDC else 2.0 * omega_p
        omega_i = pump_total - omega_s
        if omega_i <= 0:
            raise ValueError("signal frequency exceeds the available pump energy")
        return cls(omega_p, omega_s, omega_i, process)

    def omega(self, arm: Arm) -> float:
        return self.omega_s if arm is Arm.SIGNAL else self.omega_i


def triplet_from_wavelengths(
    lambda_s: float,
    lambda_i: float,
    process: Process,
    lambda_p: float | None = None,
) -> WaveTriplet:
    """Triplet from vacuum wavelengths (m); the pump is derived when omitted."""
    if lambda_s <= 0 or lambda_i <= 0:
        raise ValueError("wavelengths must be strictly positive")
    two_pi_c = 2.0 * math.pi * CODATA2018.c
    omega_s = two_pi_c / lambda_s
    omega_i = two_pi_c / lambda_i
    if lambda_p is None:
        return WaveTriplet.from_signal_idler(omega_s, omega_i, process)
    if lambda_p <= 0:
        raise ValueError("wavelengths must be strictly positive")
    return WaveTriplet(two_pi_c / lambda_p, omega_s, omega_i, process)


@dataclass(frozen=True)
class Medium:
    """Nonlinear medium: process order, effective susceptibility, indices.

    chi_eff is in m/V for SPDC (second order) and m^2/V^2 for FWM (third
    order). Refractive indices are taken at the pump, signal and idler
    frequencies respectively; with all indices set to 1 the limit pump
    intensity coincides with the index-normalized effective value.
    """

    process: Process
    chi_eff: float
    n_p: float = 1.0
    n_s: float = 1.0
    n_i: float = 1.0

    def __post_init__(self) -> None:
        if self.chi_eff <= 0:
            raise ValueError("chi_eff must be strictly positive")
        for name in ("n_p", "n_s", "n_i"):
            if getattr(self, name) < 1.0:
                raise ValueError(f"{name} must be >= 1")

    def n(self, arm: Arm) -> float:
        return self.n_s if arm is Arm.SIGNAL else self.n_i


@dataclass(frozen=True)
class Geometry:
    """Interaction length (m) and beam-overlap section (m^2)."""

    length: float
    section: float

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise ValueError("length must be strictly positive")
        if self.section <= 0:
            raise ValueError("section must be strictly positive")


@dataclass(frozen=True)
class PumpDrive:
    """Pump drive, given either as intensity (W/m^2) or field amplitude (V/m).

    For FWM this is the TOTAL of the two pump waves, not the per-wave value;
    using per-wave numbers silently halves the field and quarters the gain.
    The two representations are an exact bijection given the pump index.
    """

    intensity: float | None = None
    field_amplitude: float | None = None

    def __post_init__(self) -> None:
        if (self.intensity is None) == (self.field_amplitude is None):
            raise ValueError("specify exactly one of intensity or field_amplitude")
        value = self.intensity if self.intensity is not None else self.field_amplitude
        if value < 0:
            raise ValueError("pump drive must be nonnegative")

    @classmethod
    def from_intensity(cls, intensity: float) -> "PumpDrive":
        return cls(intensity=intensity)

    @classmethod
    def from_field(cls, field_amplitude: float) -> "PumpDrive":
        return cls(field_amplitude=field_amplitude)

    def field(self, n_p: float) -> float:
        """Pump field amplitude (V/m) at pump index n_p."""
        if self.field_amplitude is not None:
            return self.field_amplitude
        return intensity_to_field(self.intensity, n_p)

    def as_intensity(self, n_p: float) -> float:
        """Pump intensity (W/m^2) at pump index n_p."""
        if self.intensity is not None:
            return self.intensity
        return field_to_intensity(self.field_amplitude, n_p)


@dataclass(frozen=True)
class Bandwidth:
    """Spectral linewidth of the generated pairs (monochromatic pump assumed).

    Stored as delta_omega (rad/s); delta_nu (Hz) is delta_omega/(2*pi).
    """

    delta_omega: float

    def __post_init__(self) -> None:
        if self.delta_omega <= 0:
            raise ValueError("bandwidth must be strictly positive")

    @classmethod
    def from_delta_nu(cls, delta_nu: float) -> "Bandwidth":
        if delta_nu <= 0:
            raise ValueError("bandwidth must be strictly positive")
        return cls(delta_omega=2.0 * math.pi * delta_nu)

    @property
    def delta_nu(self) -> float:
        return self.delta_omega / (2.0 * math.pi)


@dataclass(frozen=True)
class RegimeReport:
    """Outcome of a regime classification at a given gain product beta*L."""

    beta_l: float
    pairs_per_bandwidth: float
    field_ratio: float
    regime: Regime


class LimitCriteria(NamedTuple):
    """Universal dimensionless criteria at the beta*L = 1 limit."""

    pairs_limit: float        # (e-1)^2/8, pairs per s per Hz
    photons_limit: float      # (e-1)^2/4, signal+idler photons per s per Hz
    field_ratio_limit: float  # e-1, generated field over vacuum field


# --------------------------------------------------------------------------
# elementary building blocks
# --------------------------------------------------------------------------

def coupling_factor(omega: float, n: float) -> float:
    """Per-field coupling factor omega/(2*n*c), in 1/m.

    Multiplied by the dimensionless product chi_eff*field it yields the
    spatial gain rate of one arm.
    """
    if omega <= 0:
        raise ValueError("omega must be strictly positive")
    if n < 1.0:
        raise ValueError("refractive index must be >= 1")
    return omega / (2.0 * n * CODATA2018.c)


def vacuum_fluctuation(omega: float, n: float, section: float, delta_omega: float) -> float:
    """Zero-point field amplitude (V/m) seeding spontaneous generation.

    sqrt(hbar*omega*delta_omega / (4*pi*c*eps0*n*section)); equivalently
    sqrt(h*nu*delta_nu / (2*c*eps0*n*section)).
    """
    if omega <= 0 or section <= 0 or delta_omega <= 0:
        raise ValueError("omega, section and delta_omega must be strictly positive")
    if n < 1.0:
        raise ValueError("refractive index must be >= 1")
    k = CODATA2018
    return math.sqrt(k.hbar * omega * delta_omega / (4.0 * math.pi * k.c * k.eps0 * n * section))


def intensity_to_field(intensity: float, n: float) -> float:
    """Field amplitude (V/m) of a plane wave of given intensity (W/m^2).

    Inverse of I = (1/2)*(n/(c*mu0))*E^2.
    """
    if intensity < 0:
        raise ValueError("intensity must be nonnegative")
    if n < 1.0:
        raise ValueError("refractive index must be >= 1")
    return math.sqrt(2.0 * intensity * CODATA2018.c * CODATA2018.mu0 / n)


def field_to_intensity(field: float, n: float) -> float:
    """Intensity (W/m^2) of a plane wave of given field amplitude (V/m)."""
    if field < 0:
        raise ValueError("field amplitude must be nonnegative")
    if n < 1.0:
        raise ValueError("refractive index must be >= 1")
    return 0.5 * n * field * field / (CODATA2018.c * CODATA2018.mu0)


# --------------------------------------------------------------------------
# parametric gain
# --------------------------------------------------------------------------

def _drive_coupling(medium: Medium, pump: PumpDrive) -> float:
    """Dimensionless chi*pump product whose units cancel against 1/m couplings.

    chi2*E_p for SPDC, (1/2)*chi3*E_p^2 for FWM (E_p the total two-wave
    amplitude).
    """
    e_p = pump.field(medium.n_p)
    if medium.process is Process.SPDC:
        return medium.chi_eff * e_p
    return 0.5 * medium.chi_eff * e_p * e_p


def gain_coefficient(medium: Medium, triplet: WaveTriplet, pump: PumpDrive) -> float:
    """Parametric gain coefficient beta (1/m) of the phase-matched process.

    beta = chi2*E_p*sqrt(ks*ki) for SPDC and (1/2)*chi3*E_p^2*sqrt(ks*ki)
    for FWM, with ks, ki the signal/idler coupling factors.
    """
    if medium.process is not triplet.process:
        raise ValueError(
            f"process mismatch: medium is {medium.process.value}, "
            f"triplet is {triplet.process.value}"
        )
    ks = coupling_factor(triplet.omega_s, medium.n_s)
    ki = coupling_factor(triplet.omega_i, medium.n_i)
    return _drive_coupling(medium, pump) * math.sqrt(ks * ki)


def pump_for_gain(
    medium: Medium, triplet: WaveTriplet, geometry: Geometry, beta_l: float
) -> PumpDrive:
    """Pump drive that realizes a target gain product beta*L (inverse of
    gain_coefficient at fixed medium and geometry)."""
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    if medium.process is not triplet.process:
        raise ValueError("process mismatch between medium and triplet")
    ks = coupling_factor(triplet.omega_s, medium.n_s)
    ki = coupling_factor(triplet.omega_i, medium.n_i)
    drive = beta_l / (geometry.length * math.sqrt(ks * ki))
    if medium.process is Process.SPDC:
        return PumpDrive.from_field(drive / medium.chi_eff)
    return PumpDrive.from_field(math.sqrt(2.0 * drive / medium.chi_eff))


# --------------------------------------------------------------------------
# pair flux
# --------------------------------------------------------------------------

def pair_flux_general(
    beta_l: float,
    vac_s: float,
    vac_i: float,
    triplet: WaveTriplet,
    medium: Medium,
    geometry: Geometry,
) -> float:
    """Pair flux (pairs/s) for arbitrary seed amplitudes on the two arms.

    N = eps0*n_s*c*S/(4*hbar*omega_s) *
        [vac_s*(cosh(bL)-1) + sqrt(omega_s*n_i/(omega_i*n_s))*vac_i*sinh(bL)]^2

    cosh(x)-1 is evaluated as 2*sinh(x/2)^2 so the small-signal regime keeps
    full precision.
    """
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    if vac_s < 0 or vac_i < 0:
        raise ValueError("seed amplitudes must be nonnegative")
    cosh_m1 = 2.0 * math.sinh(0.5 * beta_l) ** 2
    weight = math.sqrt(triplet.omega_s * medium.n_i / (triplet.omega_i * medium.n_s))
    bracket = vac_s * cosh_m1 + weight * vac_i * math.sinh(beta_l)
    k = CODATA2018
    prefactor = k.eps0 * medium.n_s * k.c * geometry.section / (4.0 * k.hbar * triplet.omega_s)
    return prefactor * bracket * bracket


def pair_flux_reduced(beta_l: float, delta_nu: float) -> float:
    """Pair flux (pairs/s) with both arms seeded by vacuum at linewidth delta_nu.

    (delta_nu/8)*(exp(beta_l)-1)^2, via expm1 for small-gain stability.
    """
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    if delta_nu <= 0:
        raise ValueError("delta_nu must be strictly positive")
    growth = math.expm1(beta_l)
    return 0.125 * delta_nu * growth * growth


def pairs_per_bandwidth(beta_l: float) -> float:
    """Dimensionless pair flux per frequency unit, (1/8)*(exp(beta_l)-1)^2."""
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    growth = math.expm1(beta_l)
    return 0.125 * growth * growth


def flux_asymptote(beta_l: float, branch: AsymptoteBranch) -> float:
    """Limiting branches of pairs_per_bandwidth.

    Small signal: (1/8)*(beta_l)^2 (spontaneous, quadratic).
    High signal: (1/8)*exp(2*beta_l) (stimulated, exponential).
    """
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    if branch is AsymptoteBranch.SMALL:
        return 0.125 * beta_l * beta_l
    return 0.125 * math.exp(2.0 * beta_l)


def limit_criteria() -> LimitCriteria:
    """Universal criteria at beta*L = 1: ((e-1)^2/8, (e-1)^2/4, e-1).

    To three decimals these read 0.369 pairs per s per Hz, 0.738 photons
    per s per Hz, and a generated/vacuum field ratio of 1.718.
    """
    growth = math.e - 1.0
    pairs = 0.125 * growth * growth
    return LimitCriteria(pairs_limit=pairs, photons_limit=2.0 * pairs, field_ratio_limit=growth)


def field_ratio(beta_l: float) -> float:
    """Generated-field to vacuum-field amplitude ratio, exp(beta_l) - 1."""
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    return math.expm1(beta_l)


def generated_field(
    beta_l: float,
    triplet: WaveTriplet,
    medium: Medium,
    geometry: Geometry,
    bandwidth: Bandwidth,
    arm: Arm,
) -> float:
    """Field amplitude (V/m) generated on one arm from the vacuum seed.

    vacuum_fluctuation(arm) * (exp(beta_l) - 1).
    """
    vac = vacuum_fluctuation(
        triplet.omega(arm), medium.n(arm), geometry.section, bandwidth.delta_omega
    )
    return vac * field_ratio(beta_l)


def photon_number_from_field(
    field: float,
    arm: Arm,
    triplet: WaveTriplet,
    medium: Medium,
    geometry: Geometry,
) -> float:
    """Photon flux (photons/s) carried by a field amplitude on one arm.

    N = eps0*n*c*S/(4*hbar*omega) * field^2; with the field produced by
    generated_field this inverts exactly to pair_flux_reduced.
    """
    if field < 0:
        raise ValueError("field amplitude must be nonnegative")
    k = CODATA2018
    omega = triplet.omega(arm)
    prefactor = k.eps0 * medium.n(arm) * k.c * geometry.section / (4.0 * k.hbar * omega)
    return prefactor * field * field


# --------------------------------------------------------------------------
# the beta*L = 1 limit
# --------------------------------------------------------------------------

def limit_pump_intensity(
    medium: Medium, lambda_s: float, lambda_i: float, length: float
) -> float:
    """Pump intensity (W/m^2) at which beta*L reaches 1.

    SPDC: (1/(2*pi^2*mu0*c)) * n_p*n_s*n_i*lambda_s*lambda_i / (L*chi2)^2
    FWM:  (1/pi)*sqrt(eps0/mu0) * n_p*sqrt(n_s*n_i*lambda_s*lambda_i) / (L*chi3)

    Wavelengths are vacuum values in m. For FWM the result is the total
    two-wave pump intensity.
    """
    if lambda_s <= 0 or lambda_i <= 0:
        raise ValueError("wavelengths must be strictly positive")
    if length <= 0:
        raise ValueError("length must be strictly positive")
    k = CODATA2018
    if medium.process is Process.SPDC:
        numer = medium.n_p * medium.n_s * medium.n_i * lambda_s * lambda_i
        return numer / (2.0 * math.pi**2 * k.mu0 * k.c * (length * medium.chi_eff) ** 2)
    numer = medium.n_p * math.sqrt(medium.n_s * medium.n_i * lambda_s * lambda_i)
    return numer * math.sqrt(k.eps0 / k.mu0) / (math.pi * length * medium.chi_eff)


def effective_limit_intensity(
    medium: Medium, lambda_s: float, lambda_i: float, length: float
) -> float:
    """Index-normalized limit pump intensity Gamma (W/m^2).

    Gamma = I_lim/(n_p*n_s*n_i) for SPDC and I_lim/(n_p*sqrt(n_s*n_i)) for
    FWM; with unit indices Gamma equals the limit intensity itself.
    """
    i_lim = limit_pump_intensity(medium, lambda_s, lambda_i, length)
    if medium.process is Process.SPDC:
        return i_lim / (medium.n_p * medium.n_s * medium.n_i)
    return i_lim / (medium.n_p * math.sqrt(medium.n_s * medium.n_i))


def classify_regime(beta_l: float, at_limit_band: float = 0.01) -> RegimeReport:
    """Classify the operating regime around the beta*L = 1 limit.

    beta_l within +/- at_limit_band (relative) of 1 counts as at-limit; the
    band is a reporting convenience, exact equality being measure-zero.
    """
    if beta_l < 0:
        raise ValueError("beta_l must be nonnegative")
    if not 0.0 <= at_limit_band < 1.0:
        raise ValueError("at_limit_band must lie in [0, 1)")
    if beta_l < 1.0 - at_limit_band:
        regime = Regime.SMALL_SIGNAL
    elif beta_l > 1.0 + at_limit_band:
        regime = Regime.HIGH_SIGNAL
    else:
        regime = Regime.AT_LIMIT
    return RegimeReport(
        beta_l=beta_l,
        pairs_per_bandwidth=pairs_per_bandwidth(beta_l),
        field_ratio=field_ratio(beta_l),
        regime=regime,
    )
