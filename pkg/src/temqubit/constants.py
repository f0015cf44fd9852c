"""Physical constants used by the simulator (SI, CODATA 2018 exact set)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable record of the fundamental constants, all SI.

    Attributes
    ----------
    hbar : float
        Reduced Planck constant, J s.
    elementary_charge : float
        Elementary charge, C.
    electron_mass : float
        Electron rest mass, kg.
    speed_of_light : float
        Speed of light in vacuum, m/s.
    """

    hbar: float = 1.054571817e-34
    elementary_charge: float = 1.602176634e-19
    electron_mass: float = 9.1093837015e-31
    speed_of_light: float = 299792458.0

    def __post_init__(self) -> None:
        for name in ("hbar", "elementary_charge", "electron_mass", "speed_of_light"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


CODATA = PhysicalConstants()

# Convenience: 1 eV in joules (exact since 2019 SI).
EV = CODATA.elementary_charge
