"""Spectral propagation oracle over the truncated ring-mode basis.

This module deliberately avoids the two-level gate algebra: a sampled
field is decomposed into ring modes by quadrature, every coefficient
is advanced with the exact eigenphase of its mode, and the result is
resynthesized or projected back onto the l = -1, +1 pair. Agreement
with the analytic drift gate is then a genuine cross-check of two
independently coded paths, not a tautology.

Phase convention: a mode (n, l) evolves as
exp(+i Omega_L (l + 2 n + |l| + 1) t), which is the level structure
with the common axial term dropped; the sign matches the gate engine's
exp(+2 i Omega_L t) on the l = +1 component.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

import numpy as np

from .beam import BeamEnvironment, matching_field
from .errors import (
    DumpFormatError,
    EmptySubspaceError,
    MatchingError,
    PhysicsDomainError,
)
from .fields import ComplexField, ModeIndex, TransverseGrid, overlap, sample_landau
from .qubit import QubitState

DEFAULT_N_MAX = 4
DEFAULT_L_MAX = 6

#: Relative mismatch allowed between the expansion waist's matching
#: field and the environment's actual field.
MATCHING_TOL = 0.01


@dataclass(frozen=True)
class ModeExpansion:
    """Coefficients of a field over the truncated ring basis.

    residual_norm is the L2 norm of whatever part of the input field
    the truncation could not represent, so that
    sum |coeff|^2 + residual_norm^2 equals the input field's squared
    norm by construction.
    """

    coefficients: Mapping[ModeIndex, complex]
    n_max: int
    l_max: int
    waist: float
    residual_norm: float = 0.0

    def __post_init__(self) -> None:
        for idx in self.coefficients:
            if idx.radial_n > self.n_max or abs(idx.topological_l) > self.l_max:
                raise PhysicsDomainError(
                    f"coefficient index {idx} outside cutoffs "
                    f"n_max={self.n_max}, l_max={self.l_max}"
                )
        object.__setattr__(
            self, "coefficients", MappingProxyType(dict(self.coefficients))
        )

    def power(self) -> float:
        """Total squared magnitude of the stored coefficients."""
        return float(sum(abs(c) ** 2 for c in self.coefficients.values()))

    def sorted_items(self) -> Tuple[Tuple[ModeIndex, complex], ...]:
        return tuple(
            sorted(
                self.coefficients.items(),
                key=lambda kv: (kv[0].radial_n, kv[0].topological_l),
            )
        )


def _basis(n_max: int, l_max: int):
    for n in range(n_max + 1):
        for l in range(-l_max, l_max + 1):
            yield ModeIndex(n, l)


def decompose(
    field_in: ComplexField,
    waist: float,
    n_max: int = DEFAULT_N_MAX,
    l_max: int = DEFAULT_L_MAX,
) -> ModeExpansion:
    """Project a sampled field onto every ring mode within the cutoffs.

    Each coefficient is the quadrature inner product of the mode with
    the field on the field's own grid, so decomposition and the
    overlap operation share a single quadrature code path.
    """
    coeffs: Dict[ModeIndex, complex] = {}
    for idx in _basis(n_max, l_max):
        mode = sample_landau(idx, waist, field_in.grid)
        coeffs[idx] = overlap(mode, field_in)
    captured = sum(abs(c) ** 2 for c in coeffs.values())
    total = field_in.norm_cached**2
    residual = math.sqrt(max(total - captured, 0.0))
    return ModeExpansion(
        coefficients=coeffs,
        n_max=n_max,
        l_max=l_max,
        waist=waist,
        residual_norm=residual,
    )


def evolve(exp: ModeExpansion, env: BeamEnvironment, t: float) -> ModeExpansion:
    """Advance each coefficient by its exact eigenphase over time t.

    The waist of the expansion must match the environment's field to
    within 1 percent (compared through the matching-field relation),
    otherwise the modes are not eigenmodes of the tube and the
    eigenphase evolution would be meaningless.
    """
    omega = env.require_field()
    required = matching_field(exp.waist)
    actual = abs(env.b_field_t)
    if abs(required - actual) > MATCHING_TOL * actual:
        raise MatchingError(
            f"expansion waist {exp.waist:.6e} m needs B = {required:.6e} T "
            f"but the tube carries {actual:.6e} T (beyond {MATCHING_TOL:.0%})"
        )
    evolved = {
        idx: coeff
        * cmath.exp(1j * omega * (idx.topological_l + idx.order + 1) * t)
        for idx, coeff in exp.coefficients.items()
    }
    return ModeExpansion(
        coefficients=evolved,
        n_max=exp.n_max,
        l_max=exp.l_max,
        waist=exp.waist,
        residual_norm=exp.residual_norm,
    )


def synthesize(exp: ModeExpansion, grid: TransverseGrid) -> ComplexField:
    """Sum coeff * mode on the grid; the raw projection, not renormalized."""
    total = np.zeros((grid.samples_per_side, grid.samples_per_side), dtype=complex)
    for idx, coeff in exp.sorted_items():
        if coeff == 0:
            continue
        total += coeff * sample_landau(idx, exp.waist, grid).amplitudes
    return ComplexField(grid, total)


#: Coefficients this small carry no usable qubit information.
EMPTY_SUBSPACE_TOL = 1e-9


def project_to_qubit(exp: ModeExpansion) -> Tuple[QubitState, float]:
    """Restrict an expansion to the (0, -1), (0, +1) pair.

    Returns the renormalized two-level state and the leakage, the L2
    norm of everything outside the pair (other modes plus the
    truncation residual).
    """
    c0 = complex(exp.coefficients.get(ModeIndex(0, -1), 0.0))
    c1 = complex(exp.coefficients.get(ModeIndex(0, +1), 0.0))
    pair_sq = abs(c0) ** 2 + abs(c1) ** 2
    total_sq = exp.power() + exp.residual_norm**2
    leakage = math.sqrt(max(total_sq - pair_sq, 0.0))
    if max(abs(c0), abs(c1)) < EMPTY_SUBSPACE_TOL:
        raise EmptySubspaceError(
            "no usable weight on the qubit pair "
            f"(|c0| = {abs(c0):.3e}, |c1| = {abs(c1):.3e})",
            leakage=leakage,
        )
    scale = 1.0 / math.sqrt(pair_sq)
    return QubitState(c0 * scale, c1 * scale), leakage


# ---------------------------------------------------------------------------
# Text dump: one header comment, then one `n l re im` row per mode in
# (n, l) order, floats with 17 significant digits.
# ---------------------------------------------------------------------------


def format_expansion(exp: ModeExpansion) -> str:
    lines = [
        f"# waist_m={exp.waist:.17g} n_max={exp.n_max} l_max={exp.l_max}"
    ]
    for idx, coeff in exp.sorted_items():
        lines.append(
            f"{idx.radial_n} {idx.topological_l} "
            f"{coeff.real:.17g} {coeff.imag:.17g}"
        )
    return "\n".join(lines) + "\n"


def write_expansion(exp: ModeExpansion, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_expansion(exp))


def read_expansion(path: str) -> ModeExpansion:
    """Inverse of write_expansion; residual information is not stored."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise DumpFormatError(f"{path}: missing expansion header")
    header: Dict[str, str] = {}
    for token in lines[0].lstrip("#").split():
        key, _, value = token.partition("=")
        header[key] = value
    try:
        waist = float(header["waist_m"])
        n_max = int(header["n_max"])
        l_max = int(header["l_max"])
    except (KeyError, ValueError) as exc:
        raise DumpFormatError(f"{path}: malformed expansion header") from exc
    coeffs: Dict[ModeIndex, complex] = {}
    try:
        for row in lines[1:]:
            parts = row.split()
            if len(parts) != 4:
                raise DumpFormatError(f"{path}: malformed row {row!r}")
            n, l = int(parts[0]), int(parts[1])
            coeffs[ModeIndex(n, l)] = complex(float(parts[2]), float(parts[3]))
        return ModeExpansion(
            coefficients=coeffs, n_max=n_max, l_max=l_max, waist=waist
        )
    except DumpFormatError:
        raise
    except (ValueError, PhysicsDomainError) as exc:
        raise DumpFormatError(f"{path}: {exc}") from exc
