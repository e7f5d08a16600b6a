"""Independent numerical check of the analytic pair-flux formulas.

Integrates the undepleted-pump coupled-wave system for the real signal and
idler field moduli,

    d e_s / dz = ks * g * e_i
    d e_i / dz = ki * g * e_s

with g the chi*pump drive product (chi2*E_p for SPDC, chi3*E_p^2/2 for FWM)
and ks, ki the per-arm coupling factors, so that both arms grow with rate
beta = g*sqrt(ks*ki). All phases are locked to the growing solution; this is
the phase-matched maximum-gain system whose solution is the cosh/sinh
combination the closed forms are built on.

A fixed-step classical RK4 scheme keeps the integration deterministic; the
system is linear and smooth, so no adaptivity is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .constants import CODATA2018
from .model import (
    Arm,
    Bandwidth,
    Geometry,
    Medium,
    PumpDrive,
    WaveTriplet,
    _drive_coupling,
    coupling_factor,
    vacuum_fluctuation,
)

__all__ = ["Scheme", "OdeState", "IntegrationConfig", "integrate", "oracle_pair_flux"]

MIN_STEPS = 16


class Scheme(Enum):
    RK4 = "rk4"


@dataclass(frozen=True)
class OdeState:
    """Signal/idler field moduli (V/m) at position z (m) along the path."""

    z: float
    e_s: float
    e_i: float

    def __post_init__(self) -> None:
        if self.e_s < 0 or self.e_i < 0:
            raise ValueError("field moduli must be nonnegative in the gain-only system")


@dataclass(frozen=True)
class IntegrationConfig:
    steps: int = 1024
    scheme: Scheme = Scheme.RK4

    def __post_init__(self) -> None:
        if self.steps < MIN_STEPS:
            raise ValueError(f"steps must be >= {MIN_STEPS}")


def integrate(
    medium: Medium,
    triplet: WaveTriplet,
    pump: PumpDrive,
    geometry: Geometry,
    initial: OdeState,
    config: IntegrationConfig = IntegrationConfig(),
) -> OdeState:
    """Propagate the coupled arms from z = 0 to z = L with fixed-step RK4.

    For an initial state (a, 0) the exact solution is
    e_s(L) = a*cosh(beta*L), e_i(L) = a*sqrt(ki/ks)*sinh(beta*L); RK4
    reproduces it to its scheme error, ~(beta*L)^5/steps^4 relative.
    """
    if initial.z != 0.0:
        raise ValueError("initial state must be at z = 0")
    if medium.process is not triplet.process:
        raise ValueError("process mismatch between medium and triplet")

    ks = coupling_factor(triplet.omega_s, medium.n_s)
    ki = coupling_factor(triplet.omega_i, medium.n_i)
    g = _drive_coupling(medium, pump)
    cs = ks * g  # growth of e_s fed by e_i (1/m)
    ci = ki * g

    h = geometry.length / config.steps
    e_s, e_i = initial.e_s, initial.e_i
    for _ in range(config.steps):
        k1s = cs * e_i
        k1i = ci * e_s
        k2s = cs * (e_i + 0.5 * h * k1i)
        k2i = ci * (e_s + 0.5 * h * k1s)
        k3s = cs * (e_i + 0.5 * h * k2i)
        k3i = ci * (e_s + 0.5 * h * k2s)
        k4s = cs * (e_i + h * k3i)
        k4i = ci * (e_s + h * k3s)
        e_s += h * (k1s + 2.0 * k2s + 2.0 * k3s + k4s) / 6.0
        e_i += h * (k1i + 2.0 * k2i + 2.0 * k3i + k4i) / 6.0
    return OdeState(z=geometry.length, e_s=e_s, e_i=e_i)


def oracle_pair_flux(
    medium: Medium,
    triplet: WaveTriplet,
    pump: PumpDrive,
    geometry: Geometry,
    bandwidth: Bandwidth,
    config: IntegrationConfig = IntegrationConfig(),
) -> float:
    """Pair flux (pairs/s) obtained by integration instead of closed form.

    Both arms are seeded with their vacuum amplitudes, the system is
    integrated over the interaction length, the signal arm's initial vacuum
    amplitude is subtracted from the output, and the remaining generated
    field is converted to a photon flux.
    """
    vac_s = vacuum_fluctuation(
        triplet.omega_s, medium.n_s, geometry.section, bandwidth.delta_omega
    )
    vac_i = vacuum_fluctuation(
        triplet.omega_i, medium.n_i, geometry.section, bandwidth.delta_omega
    )
    final = integrate(
        medium, triplet, pump, geometry, OdeState(z=0.0, e_s=vac_s, e_i=vac_i), config
    )
    generated = final.e_s - vac_s
    k = CODATA2018
    prefactor = k.eps0 * medium.n(Arm.SIGNAL) * k.c * geometry.section / (
        4.0 * k.hbar * triplet.omega_s
    )
    return prefactor * generated * generated
