"""Beam kinematics and magnetic drift-tube quantities.

All derived quantities live on an immutable BeamEnvironment built by
derive_beam. Inputs use laboratory units (eV, tesla); every derived
field is SI. A zero axial field is legal for the kinematic part, in
which case the magnetic quantities are absent (None) rather than
infinite, and any drift-tube operation raises PhysicsDomainError.

Conventions
-----------
The Larmor angular frequency is Omega_L = |e B| / (2 m_eff), with
m_eff = gamma m when the relativistic-mass flag is set (default) and
the bare rest mass otherwise. The two l = -1, +1 transverse ground
modes are split by 2 hbar Omega_L, so a drift of a quarter Larmor
period imposes a relative phase of pi (a pi pulse).

The magnetic waist w_m = sqrt(4 hbar / |e B|) is mass independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .constants import CODATA, EV, PhysicalConstants
from .errors import PhysicsDomainError


@dataclass(frozen=True)
class BeamEnvironment:
    """Electron beam in a uniform axial magnetic field.

    Attributes
    ----------
    kinetic_energy_ev : float
        Kinetic energy in eV (input unit, kept for reporting).
    b_field_t : float
        Signed axial induction in tesla.
    relativistic_mass : bool
        Whether derived frequencies use gamma * m.
    gamma : float
        Lorentz factor 1 + T / (m c^2), reported regardless of the flag.
    speed_v : float
        Axial speed, m/s.
    wavenumber_k : float
        De Broglie wavenumber p / hbar, 1/m.
    larmor_omega : float or None
        Omega_L in rad/s; None when the field is zero.
    larmor_period : float or None
        2 pi / Omega_L, s; None when the field is zero.
    magnetic_waist_wm : float or None
        sqrt(4 hbar / |e B|), m; None when the field is zero.
    oscillation_length_zl : float or None
        2 pi v / (2 Omega_L), m; None when the field is zero.
    """

    kinetic_energy_ev: float
    b_field_t: float
    relativistic_mass: bool
    gamma: float
    speed_v: float
    wavenumber_k: float
    larmor_omega: Optional[float]
    larmor_period: Optional[float]
    magnetic_waist_wm: Optional[float]
    oscillation_length_zl: Optional[float]

    def require_field(self) -> float:
        """Return larmor_omega or raise if the tube is field free."""
        if self.larmor_omega is None:
            raise PhysicsDomainError(
                "operation requires a nonzero axial field (got B = 0)"
            )
        return self.larmor_omega


def derive_beam(
    kinetic_energy_ev: float,
    b_field_t: float,
    relativistic_mass: bool = True,
    constants: PhysicalConstants = CODATA,
) -> BeamEnvironment:
    """Build a BeamEnvironment from kinetic energy and axial field.

    Parameters
    ----------
    kinetic_energy_ev : float
        Kinetic energy in eV, strictly positive.
    b_field_t : float
        Signed axial induction in tesla. Zero is allowed; the magnetic
        quantities then come out as None.
    relativistic_mass : bool, optional
        When True (default) the effective mass in Omega_L is gamma * m
        and the speed comes from relativistic kinematics; when False
        the rest mass is used and v = sqrt(2 T / m).

    Raises
    ------
    PhysicsDomainError
        If the kinetic energy is not strictly positive.
    """
    if kinetic_energy_ev <= 0:
        raise PhysicsDomainError(
            f"kinetic energy must be positive, got {kinetic_energy_ev} eV"
        )
    c = constants
    energy_j = kinetic_energy_ev * EV
    gamma = 1.0 + energy_j / (c.electron_mass * c.speed_of_light**2)
    if relativistic_mass:
        speed = c.speed_of_light * math.sqrt(1.0 - 1.0 / (gamma * gamma))
        momentum = gamma * c.electron_mass * speed
        m_eff = gamma * c.electron_mass
    else:
        speed = math.sqrt(2.0 * energy_j / c.electron_mass)
        momentum = c.electron_mass * speed
        m_eff = c.electron_mass
    wavenumber = momentum / c.hbar

    if b_field_t == 0.0:
        omega = period = waist = z_length = None
    else:
        omega = abs(c.elementary_charge * b_field_t) / (2.0 * m_eff)
        period = 2.0 * math.pi / omega
        waist = math.sqrt(4.0 * c.hbar / abs(c.elementary_charge * b_field_t))
        z_length = 2.0 * math.pi * speed / (2.0 * omega)

    return BeamEnvironment(
        kinetic_energy_ev=kinetic_energy_ev,
        b_field_t=b_field_t,
        relativistic_mass=relativistic_mass,
        gamma=gamma,
        speed_v=speed,
        wavenumber_k=wavenumber,
        larmor_omega=omega,
        larmor_period=period,
        magnetic_waist_wm=waist,
        oscillation_length_zl=z_length,
    )


def matching_field(waist_w0: float, constants: PhysicalConstants = CODATA) -> float:
    """Field B0 at which the magnetic waist equals the given mode waist.

    B0 = 4 hbar / (|e| w0^2); exact algebraic inverse of the
    magnetic-waist formula, so the round trip is an identity.
    """
    if waist_w0 <= 0:
        raise PhysicsDomainError(f"waist must be positive, got {waist_w0} m")
    return 4.0 * constants.hbar / (constants.elementary_charge * waist_w0**2)


def max_nonadiabatic_switch_time(env: BeamEnvironment) -> float:
    """Longest switch duration still counted as sudden: half a Larmor period."""
    omega = env.require_field()
    return math.pi / omega


def landau_energy(n: int, l: int, env: BeamEnvironment, k: float) -> float:
    """Transverse-plus-axial eigenenergy of mode (n, l) at wavenumber k, in J.

    E = hbar^2 k^2 / (2 m_eff) + hbar Omega_L l + hbar Omega_L (2 n + |l| + 1).
    The effective mass follows the environment's relativistic flag. All
    negative-l states of a given n are degenerate because l + |l| = 0.
    """
    if n < 0:
        raise PhysicsDomainError(f"radial index must be >= 0, got {n}")
    omega = env.require_field()
    c = CODATA
    m_eff = env.gamma * c.electron_mass if env.relativistic_mass else c.electron_mass
    axial = (c.hbar * k) ** 2 / (2.0 * m_eff)
    return axial + c.hbar * omega * l + c.hbar * omega * (2 * n + abs(l) + 1)


def drift_time_for_phase(relative_phase: float, env: BeamEnvironment) -> float:
    """Drift duration that imposes the given relative phase between l = -1 and +1.

    The splitting is 2 Omega_L, so t = phase / (2 Omega_L). A phase of
    pi (a pi pulse) is a quarter Larmor period.
    """
    omega = env.require_field()
    return relative_phase / (2.0 * omega)


def drift_length(t: float, env: BeamEnvironment) -> float:
    """Axial distance covered in time t, pure kinematics: v * t."""
    return env.speed_v * t


@dataclass(frozen=True)
class DiffractingBeamParams:
    """Waist, Rayleigh range, and the z profiles of a free-space mode family.

    The stored functions of z describe the usual paraxial evolution:
    w(z) = w0 sqrt(1 + (z / z_R)^2), wavefront curvature radius
    R(z) = z (1 + (z_R / z)^2) with a flat front at the waist, and the
    propagation phase zeta(z) = arctan(z / z_R) that each mode picks up
    in proportion to its order 2 n + |l| + 1.
    """

    waist_w0: float
    rayleigh_zr: float

    def waist_w_of_z(self, z: float) -> float:
        """Mode radius at axial position z, m."""
        return self.waist_w0 * math.sqrt(1.0 + (z / self.rayleigh_zr) ** 2)

    def curvature_R_of_z(self, z: float) -> float:
        """Wavefront curvature radius at z, m; +inf at the waist (flat)."""
        if z == 0.0:
            return math.inf
        return z * (1.0 + (self.rayleigh_zr / z) ** 2)

    def inverse_curvature(self, z: float) -> float:
        """1 / R(z), finite for every z including the waist."""
        return z / (z * z + self.rayleigh_zr**2)

    def gouy_zeta_of_z(self, z: float) -> float:
        """Propagation phase angle arctan(z / z_R), rad."""
        return math.atan2(z, self.rayleigh_zr)


def diffracting_params(waist_w0: float, wavenumber_k: float) -> DiffractingBeamParams:
    """Free-space mode-family parameters for a given waist and wavenumber.

    Uses the standard paraxial Rayleigh range z_R = k w0^2 / 2.
    """
    if waist_w0 <= 0:
        raise PhysicsDomainError(f"waist must be positive, got {waist_w0} m")
    if wavenumber_k <= 0:
        raise PhysicsDomainError(f"wavenumber must be positive, got {wavenumber_k}")
    return DiffractingBeamParams(
        waist_w0=waist_w0, rayleigh_zr=wavenumber_k * waist_w0**2 / 2.0
    )
