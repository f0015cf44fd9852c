"""Transverse mode fields sampled on a square grid.

The three sampled families share one waist convention:

* ring modes at the magnetic waist (the non-spreading eigenmodes of a
  uniform axial field),
* their free-space counterparts away from the waist, with z-dependent
  radius, wavefront curvature, and propagation phase,
* Hermite-Gauss modes, used to cross-check the two-lobe superposition.

Grids are cell centered, so no sample ever lands exactly on the axis
phase singularity. Inner products are plain midpoint quadrature,
overlap = sum(conj(a) b) spacing^2; for these entire integrands the
midpoint rule converges superexponentially in the sample count, so the
dominant error is always the truncated Gaussian tail outside the grid,
not the sampling density. Quadrature accuracy statements in the tests
are therefore phrased against the half extent as well as the sample
count.

A small binary dump format round-trips fields to disk; see
write_field_dump.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .beam import DiffractingBeamParams
from .errors import (
    DumpFormatError,
    GridMismatchError,
    PhysicsDomainError,
    ResolutionError,
)
from .polynomials import hermite, laguerre, lg_norm
from .qubit import QubitState

#: A waist narrower than this many grid steps cannot be trusted.
MIN_WAIST_STEPS = 4.0


@dataclass(frozen=True)
class ModeIndex:
    """Radial index n >= 0 and signed winding number l."""

    radial_n: int
    topological_l: int

    def __post_init__(self) -> None:
        if self.radial_n < 0:
            raise PhysicsDomainError(
                f"radial index must be >= 0, got {self.radial_n}"
            )

    @property
    def order(self) -> int:
        """Mode order 2 n + |l|, which sets the energy offset and the
        propagation-phase multiplier (plus one)."""
        return 2 * self.radial_n + abs(self.topological_l)


@dataclass(frozen=True)
class TransverseGrid:
    """Square, cell-centered sampling window around the beam axis.

    samples_per_side points span [-half_extent, half_extent] in each
    direction; sample i sits at -half_extent + (i + 1/2) spacing.
    """

    samples_per_side: int
    half_extent: float

    def __post_init__(self) -> None:
        if self.samples_per_side < 2:
            raise PhysicsDomainError(
                f"need at least 2 samples per side, got {self.samples_per_side}"
            )
        if self.half_extent <= 0:
            raise PhysicsDomainError(
                f"half extent must be positive, got {self.half_extent}"
            )

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_extent / self.samples_per_side

    def axis(self) -> np.ndarray:
        """Cell-center coordinates along one side."""
        i = np.arange(self.samples_per_side)
        return -self.half_extent + (i + 0.5) * self.spacing

    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """X and Y coordinate arrays; the first array axis runs along y."""
        c = self.axis()
        return np.meshgrid(c, c)


@dataclass(frozen=True)
class ComplexField:
    """Complex amplitudes on a grid, immutable, with the quadrature norm cached."""

    grid: TransverseGrid
    amplitudes: np.ndarray
    norm_cached: float = 0.0

    def __post_init__(self) -> None:
        amp = np.array(self.amplitudes, dtype=complex)
        n = self.grid.samples_per_side
        if amp.shape != (n, n):
            raise GridMismatchError(
                f"amplitude shape {amp.shape} does not match grid {n}x{n}"
            )
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)
        norm = math.sqrt(float(np.sum(np.abs(amp) ** 2)) * self.grid.spacing**2)
        object.__setattr__(self, "norm_cached", norm)

    def normalized(self) -> "ComplexField":
        """Unit-norm copy; rejects an identically zero field."""
        if self.norm_cached == 0.0:
            raise PhysicsDomainError("cannot normalize a zero field")
        return ComplexField(self.grid, self.amplitudes / self.norm_cached)

    def intensity(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _require_resolved(waist: float, grid: TransverseGrid) -> None:
    if waist <= 0:
        raise PhysicsDomainError(f"waist must be positive, got {waist}")
    if waist < MIN_WAIST_STEPS * grid.spacing:
        raise ResolutionError(
            f"waist {waist:.3e} m under-resolved: below "
            f"{MIN_WAIST_STEPS:g} grid steps of {grid.spacing:.3e} m"
        )


def _ring_mode(
    idx: ModeIndex, waist: float, grid: TransverseGrid
) -> np.ndarray:
    """Raw analytic samples of the normalized ring mode at the given waist."""
    x, y = grid.mesh()
    r_sq = x * x + y * y
    phi = np.arctan2(y, x)
    arg = 2.0 * r_sq / (waist * waist)
    n, l = idx.radial_n, idx.topological_l
    radial = (
        lg_norm(n, l, waist)
        * np.sqrt(arg) ** abs(l)
        * laguerre(n, float(abs(l)), arg)
        * np.exp(-r_sq / (waist * waist))
    )
    return radial * np.exp(1j * l * phi)


def sample_landau(
    idx: ModeIndex,
    waist_wm: float,
    grid: TransverseGrid,
    normalize: bool = True,
) -> ComplexField:
    """Non-spreading ring mode at the magnetic waist.

    The analytic normalization already gives unit norm up to the
    truncated tail; with normalize=True (default) the residual is
    divided out so the quadrature norm is exactly one.
    """
    _require_resolved(waist_wm, grid)
    field = ComplexField(grid, _ring_mode(idx, waist_wm, grid))
    return field.normalized() if normalize else field


def sample_diffracting_lg(
    idx: ModeIndex,
    params: DiffractingBeamParams,
    z: float,
    k: float,
    grid: TransverseGrid,
    normalize: bool = True,
) -> ComplexField:
    """Free-space mode of the same family at axial position z.

    Relative to the waist profile this scales the radius to w(z), adds
    the spherical-wavefront phase k r^2 / (2 R(z)) (flat at z = 0), and
    advances the overall phase by (2 n + |l| + 1) arctan(z / z_R). The
    plane-wave carrier exp(i k z) is not included, so the on-axis phase
    of the fundamental mode at z equals its accumulated propagation
    phase directly.
    """
    w_z = params.waist_w_of_z(z)
    _require_resolved(w_z, grid)
    base = _ring_mode(
        ModeIndex(idx.radial_n, idx.topological_l), w_z, grid
    )
    x, y = grid.mesh()
    r_sq = x * x + y * y
    inv_r = params.inverse_curvature(z)
    phase = 0.5 * k * r_sq * inv_r + (idx.order + 1) * params.gouy_zeta_of_z(z)
    field = ComplexField(grid, base * np.exp(1j * phase))
    return field.normalized() if normalize else field


def sample_hg(
    m: int,
    n: int,
    waist: float,
    grid: TransverseGrid,
    normalize: bool = True,
) -> ComplexField:
    """Hermite-Gauss mode HG_{m,n} with m lobes-1 along x, n along y.

    Same waist convention as the ring family, so HG_{0,0} coincides
    with the fundamental ring mode sample for sample.
    """
    if m < 0 or n < 0:
        raise PhysicsDomainError(f"mode orders must be >= 0, got ({m}, {n})")
    _require_resolved(waist, grid)
    x, y = grid.mesh()

    def one_dim(order: int, coord: np.ndarray) -> np.ndarray:
        log_c = -0.5 * (order * math.log(2.0) + math.lgamma(order + 1))
        c = (2.0 / math.pi) ** 0.25 / math.sqrt(waist) * math.exp(log_c)
        u = math.sqrt(2.0) * coord / waist
        return c * hermite(order, u) * np.exp(-(coord * coord) / (waist * waist))

    field = ComplexField(grid, (one_dim(m, x) * one_dim(n, y)).astype(complex))
    return field.normalized() if normalize else field


def overlap(a: ComplexField, b: ComplexField) -> complex:
    """Quadrature inner product <a|b> = sum(conj(a) b) spacing^2.

    Conjugate symmetric and linear in the second argument. Both fields
    must share one grid.
    """
    if a.grid != b.grid:
        raise GridMismatchError(
            f"grids differ: {a.grid} vs {b.grid}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes) * a.grid.spacing**2)


def synthesize_qubit_field(
    state: QubitState, waist_wm: float, grid: TransverseGrid
) -> ComplexField:
    """Sampled wavefunction c0 LG_{0,-1} + c1 LG_{0,+1}, normalized."""
    minus = sample_landau(ModeIndex(0, -1), waist_wm, grid)
    plus = sample_landau(ModeIndex(0, +1), waist_wm, grid)
    combined = state.c0 * minus.amplitudes + state.c1 * plus.amplitudes
    return ComplexField(grid, combined).normalized()


# ---------------------------------------------------------------------------
# Binary dump format
#
# 24-byte header: magic "LGF1" (4 bytes), samples_per_side as unsigned
# little-endian 64-bit, half_extent in meters as little-endian float64,
# then 4 reserved zero bytes. Payload: row-major interleaved (re, im)
# little-endian float64 pairs, first array axis along y.
# ---------------------------------------------------------------------------

DUMP_MAGIC = b"LGF1"
_HEADER = struct.Struct("<4sQd")


def field_dump_bytes(field: ComplexField) -> bytes:
    header = _HEADER.pack(
        DUMP_MAGIC, field.grid.samples_per_side, field.grid.half_extent
    ) + b"\x00" * 4
    return header + np.ascontiguousarray(field.amplitudes, dtype="<c16").tobytes()


def write_field_dump(field: ComplexField, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(field_dump_bytes(field))


def read_field_dump(path: str) -> ComplexField:
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _HEADER.size + 4 or raw[:4] != DUMP_MAGIC:
        raise DumpFormatError(f"{path}: not a field dump (bad magic)")
    magic, samples, half_extent = _HEADER.unpack(raw[: _HEADER.size])
    payload = raw[_HEADER.size + 4 :]
    expected = samples * samples * 16
    if len(payload) != expected:
        raise DumpFormatError(
            f"{path}: payload is {len(payload)} bytes, expected {expected}"
        )
    amplitudes = np.frombuffer(payload, dtype="<c16").reshape(samples, samples)
    try:
        grid = TransverseGrid(int(samples), float(half_extent))
    except PhysicsDomainError as exc:
        raise DumpFormatError(f"{path}: {exc}") from exc
    return ComplexField(grid, amplitudes)
