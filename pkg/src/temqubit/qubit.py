"""Two-level state algebra for the counter-rotating ring-mode pair.

Basis convention: |0> is the l = -1 transverse ground mode and |1> is
the l = +1 mode. |0> sits at the Bloch north pole. Rotation gates use
the standard unitary convention R_j(theta) = exp(-i theta sigma_j / 2),
so R_z(theta) = diag(exp(-i theta / 2), exp(+i theta / 2)).

Sign anchors that pin every remaining convention choice:

* basis_change() is the y rotation T with T Z Tdag = H exactly, which
  fixes T = R_y(+pi / 4).
* The drift tube advances the upper component: diag(1, exp(+2i Omega_L t)).
  With that sign a quarter-period drift maps |+> to |-> and an eighth
  of a period maps |+> to |R> = (|0> + i |1>) / sqrt(2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from .beam import BeamEnvironment
from .errors import NonUnitaryGateError, NotALoopError, PhysicsDomainError

UNITARITY_TOL = 1e-8
STATE_NORM_TOL = 1e-6


@dataclass(frozen=True)
class QubitState:
    """Normalized amplitudes (c0, c1) over the l = -1, +1 mode pair.

    The constructor accepts amplitudes whose squared norm deviates from
    one by at most 1e-6 (to absorb accumulated rounding) and stores the
    exactly renormalized pair.
    """

    c0: complex
    c1: complex

    def __post_init__(self) -> None:
        norm_sq = abs(self.c0) ** 2 + abs(self.c1) ** 2
        if abs(norm_sq - 1.0) > STATE_NORM_TOL:
            raise PhysicsDomainError(
                f"state not normalized: |c0|^2 + |c1|^2 = {norm_sq!r}"
            )
        scale = 1.0 / math.sqrt(norm_sq)
        object.__setattr__(self, "c0", complex(self.c0) * scale)
        object.__setattr__(self, "c1", complex(self.c1) * scale)

    def as_vector(self) -> np.ndarray:
        return np.array([self.c0, self.c1], dtype=complex)

    def fidelity(self, other: "QubitState") -> float:
        """|<self|other>|, insensitive to global phase."""
        return abs(np.vdot(self.as_vector(), other.as_vector()))


NAMED_STATES = {
    "0": (1.0, 0.0),
    "1": (0.0, 1.0),
    "+": (1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0)),
    "-": (1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0)),
    "R": (1.0 / math.sqrt(2.0), 1j / math.sqrt(2.0)),
    "L": (1.0 / math.sqrt(2.0), -1j / math.sqrt(2.0)),
}


def named_state(label: str) -> QubitState:
    """Return one of the six conventional states 0, 1, +, -, R, L."""
    try:
        c0, c1 = NAMED_STATES[label]
    except KeyError:
        raise PhysicsDomainError(f"unknown state label {label!r}") from None
    return QubitState(c0, c1)


@dataclass(frozen=True)
class GateMatrix:
    """2x2 unitary wrapper; construction rejects non-unitary input."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise NonUnitaryGateError(f"gate must be 2x2, got shape {m.shape}")
        defect = np.max(np.abs(m.conj().T @ m - np.eye(2)))
        if defect > UNITARITY_TOL:
            raise NonUnitaryGateError(
                f"matrix is not unitary (max |Udag U - I| = {defect:.3e})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other: "GateMatrix") -> "GateMatrix":
        return GateMatrix(self.matrix @ other.matrix)

    def adjoint(self) -> "GateMatrix":
        return GateMatrix(self.matrix.conj().T)


def identity_gate() -> GateMatrix:
    return GateMatrix(np.eye(2, dtype=complex))


def rotation_gate(axis: str, theta: float) -> GateMatrix:
    """Standard spinor rotation exp(-i theta sigma_axis / 2) about x, y, or z."""
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    if axis == "x":
        m = [[c, -1j * s], [-1j * s, c]]
    elif axis == "y":
        m = [[c, -s], [s, c]]
    elif axis == "z":
        m = [[cmath.exp(-1j * theta / 2.0), 0.0], [0.0, cmath.exp(1j * theta / 2.0)]]
    else:
        raise PhysicsDomainError(f"rotation axis must be x, y or z, got {axis!r}")
    return GateMatrix(np.array(m, dtype=complex))


def pauli_z() -> GateMatrix:
    return GateMatrix(np.diag([1.0 + 0j, -1.0 + 0j]))


def hadamard() -> GateMatrix:
    return GateMatrix(np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0))


def basis_change() -> GateMatrix:
    """The y rotation T with T Z Tdag = H; applying it twice maps Z to X."""
    return rotation_gate("y", math.pi / 4.0)


def drift_gate(env: BeamEnvironment, t: float) -> GateMatrix:
    """Relative-phase gate of a drift tube traversed for time t.

    diag(1, exp(+2i Omega_L t)): the l = +1 component leads by the
    level splitting 2 Omega_L. Periodic with half a Larmor period.
    """
    omega = env.require_field()
    if t < 0:
        raise PhysicsDomainError(f"drift duration must be >= 0, got {t} s")
    return GateMatrix(np.diag([1.0 + 0j, cmath.exp(2j * omega * t)]))


def converter_gate(theta: float = math.pi / 2.0) -> GateMatrix:
    """Mode-converter gate: a meridian rotation R_y(theta).

    The default quarter turn realizes |0> to |+>.
    """
    return rotation_gate("y", theta)


def apply(gate: GateMatrix, state: QubitState) -> QubitState:
    """Apply a gate; renormalization only absorbs rounding at the 1e-12 level."""
    vec = gate.matrix @ state.as_vector()
    return QubitState(vec[0], vec[1])


@dataclass(frozen=True)
class BlochVector:
    """Cartesian Bloch coordinates; unit length for pure states."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def bloch(state: QubitState) -> BlochVector:
    """Bloch coordinates with |0> at the north pole.

    x = 2 Re(c0* c1), y = 2 Im(c0* c1), z = |c0|^2 - |c1|^2.
    """
    cross = np.conj(state.c0) * state.c1
    return BlochVector(
        x=float(2.0 * cross.real),
        y=float(2.0 * cross.imag),
        z=float(abs(state.c0) ** 2 - abs(state.c1) ** 2),
    )


LOOP_CLOSURE_TOL = 1e-9


def loop_global_phase(gates: Iterable[GateMatrix], start: QubitState) -> float:
    """Global phase picked up by a state carried around a closed gate loop.

    Composes the gates in application order, checks that the result
    returns the start state up to a phase, and returns that phase
    arg<start|U|start> in (-pi, pi].

    Raises
    ------
    NotALoopError
        If |<start|U|start>| deviates from one by more than 1e-9; the
        achieved magnitude is attached for diagnosis.
    """
    u = np.eye(2, dtype=complex)
    for gate in gates:
        u = gate.matrix @ u
    amplitude = np.vdot(start.as_vector(), u @ start.as_vector())
    magnitude = abs(amplitude)
    if abs(magnitude - 1.0) > LOOP_CLOSURE_TOL:
        raise NotALoopError(
            f"gate sequence does not close on the start state "
            f"(|overlap| = {magnitude:.12f})",
            overlap_magnitude=magnitude,
        )
    return float(np.angle(amplitude))


def format_complex(z: complex) -> str:
    """Serialize one complex number as a 17-significant-digit float pair."""
    return f"{z.real:.17g} {z.imag:.17g}"


def gate_pairs(gate: GateMatrix) -> Tuple[str, str, str, str]:
    """Row-major serialized entries of a gate, for logs and the CLI."""
    m = gate.matrix
    return (
        format_complex(m[0, 0]),
        format_complex(m[0, 1]),
        format_complex(m[1, 0]),
        format_complex(m[1, 1]),
    )
