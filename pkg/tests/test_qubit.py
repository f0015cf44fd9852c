import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from temqubit import (
    GateMatrix,
    NonUnitaryGateError,
    NotALoopError,
    PhysicsDomainError,
    QubitState,
    apply,
    basis_change,
    bloch,
    derive_beam,
    drift_gate,
    format_complex,
    gate_pairs,
    hadamard,
    identity_gate,
    loop_global_phase,
    named_state,
    pauli_z,
    rotation_gate,
)
from helpers import loop_solid_angle

SQ2 = math.sqrt(2.0)


def so3_rotation(axis: str, theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    if axis == "x":
        return np.array([[1, 0, 0], [0, c, -s], [0, s, c]], dtype=float)
    if axis == "y":
        return np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]], dtype=float)
    return np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]], dtype=float)


states = st.tuples(
    st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)
).filter(lambda t: sum(v * v for v in t) > 0.01).map(
    lambda t: QubitState(
        complex(t[0], t[1]) / math.sqrt(sum(v * v for v in t)),
        complex(t[2], t[3]) / math.sqrt(sum(v * v for v in t)),
    )
)
angles = st.floats(min_value=-4.0 * math.pi, max_value=4.0 * math.pi)
axes = st.sampled_from(["x", "y", "z"])


class TestStates:
    def test_constructor_renormalizes_small_drift(self):
        eps = 1.0 + 3e-7
        s = QubitState(eps / SQ2, eps / SQ2)
        assert abs(s.c0) ** 2 + abs(s.c1) ** 2 == pytest.approx(1.0, abs=1e-15)

    def test_constructor_rejects_unnormalized(self):
        with pytest.raises(PhysicsDomainError):
            QubitState(1.0, 1.0)
        with pytest.raises(PhysicsDomainError):
            QubitState(0.5, 0.5)

    def test_named_states_on_bloch_axes(self):
        expect = {
            "0": (0, 0, 1),
            "1": (0, 0, -1),
            "+": (1, 0, 0),
            "-": (-1, 0, 0),
            "R": (0, 1, 0),
            "L": (0, -1, 0),
        }
        for label, target in expect.items():
            b = bloch(named_state(label))
            np.testing.assert_allclose(b.as_array(), target, atol=1e-15)

    def test_unknown_label_rejected(self):
        with pytest.raises(PhysicsDomainError):
            named_state("zero")

    def test_fidelity_table(self):
        z0, z1 = named_state("0"), named_state("1")
        p, r = named_state("+"), named_state("R")
        assert z0.fidelity(z1) == pytest.approx(0.0, abs=1e-15)
        assert p.fidelity(named_state("-")) == pytest.approx(0.0, abs=1e-15)
        assert r.fidelity(named_state("L")) == pytest.approx(0.0, abs=1e-15)
        assert p.fidelity(r) == pytest.approx(1.0 / SQ2, abs=1e-15)
        assert z0.fidelity(p) == pytest.approx(1.0 / SQ2, abs=1e-15)

    @given(states, st.floats(-math.pi, math.pi))
    def test_fidelity_ignores_global_phase(self, s, phi):
        ph = cmath.exp(1j * phi)
        t = QubitState(s.c0 * ph, s.c1 * ph)
        assert s.fidelity(t) == pytest.approx(1.0, abs=1e-12)

    @given(states)
    def test_bloch_vector_is_unit(self, s):
        assert np.linalg.norm(bloch(s).as_array()) == pytest.approx(1.0, abs=1e-12)


class TestGates:
    def test_non_unitary_rejected(self):
        with pytest.raises(NonUnitaryGateError):
            GateMatrix(np.array([[1.0, 0.0], [0.0, 2.0]]))
        with pytest.raises(NonUnitaryGateError):
            GateMatrix(np.eye(3))

    def test_rotation_closed_forms(self):
        th = 0.7
        c, s = math.cos(th / 2), math.sin(th / 2)
        np.testing.assert_allclose(
            rotation_gate("x", th).matrix,
            [[c, -1j * s], [-1j * s, c]],
            atol=1e-16,
        )
        np.testing.assert_allclose(
            rotation_gate("y", th).matrix, [[c, -s], [s, c]], atol=1e-16
        )
        np.testing.assert_allclose(
            rotation_gate("z", th).matrix,
            np.diag([cmath.exp(-1j * th / 2), cmath.exp(1j * th / 2)]),
            atol=1e-16,
        )
        with pytest.raises(PhysicsDomainError):
            rotation_gate("w", th)

    @given(axes, angles, angles)
    def test_same_axis_rotations_add(self, axis, a, b):
        lhs = (rotation_gate(axis, a) @ rotation_gate(axis, b)).matrix
        rhs = rotation_gate(axis, a + b).matrix
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    @given(axes)
    def test_full_turn_is_minus_identity(self, axis):
        np.testing.assert_allclose(
            rotation_gate(axis, 2.0 * math.pi).matrix, -np.eye(2), atol=1e-15
        )
        np.testing.assert_allclose(
            rotation_gate(axis, 4.0 * math.pi).matrix, np.eye(2), atol=1e-15
        )

    @given(axes, angles, states)
    def test_gate_action_matches_so3_rotation(self, axis, theta, s):
        rotated = bloch(apply(rotation_gate(axis, theta), s)).as_array()
        expected = so3_rotation(axis, theta) @ bloch(s).as_array()
        np.testing.assert_allclose(rotated, expected, atol=1e-10)

    def test_hadamard_algebra(self):
        h, z = hadamard(), pauli_z()
        np.testing.assert_allclose((h @ h).matrix, np.eye(2), atol=1e-15)
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        np.testing.assert_allclose((h @ z @ h).matrix, x, atol=1e-15)

    def test_basis_change_conjugates_z_to_hadamard(self):
        t = basis_change()
        lhs = (t @ pauli_z() @ t.adjoint()).matrix
        np.testing.assert_allclose(lhs, hadamard().matrix, atol=1e-15)

    def test_pauli_z_is_phased_half_turn(self):
        # Z equals exp(i pi / 2) times the z rotation by pi.
        rz = rotation_gate("z", math.pi).matrix
        np.testing.assert_allclose(
            pauli_z().matrix, cmath.exp(1j * math.pi / 2.0) * rz, atol=1e-15
        )

    def test_adjoint_inverts(self):
        g = rotation_gate("x", 1.234)
        np.testing.assert_allclose((g @ g.adjoint()).matrix, np.eye(2), atol=1e-15)

    def test_identity_gate(self):
        np.testing.assert_allclose(identity_gate().matrix, np.eye(2), atol=0)

    def test_long_random_composition_stays_unitary(self):
        rng = np.random.default_rng(20260817)
        total = identity_gate()
        for axis, theta in zip(
            rng.choice(["x", "y", "z"], size=10_000),
            rng.uniform(-math.pi, math.pi, size=10_000),
        ):
            total = rotation_gate(str(axis), float(theta)) @ total
        defect = np.max(np.abs(total.matrix.conj().T @ total.matrix - np.eye(2)))
        assert defect < 1e-12


class TestDrift:
    def test_matrix_form(self, env):
        t = 1.3e-10
        g = drift_gate(env, t)
        np.testing.assert_allclose(
            g.matrix,
            np.diag([1.0, cmath.exp(2j * env.larmor_omega * t)]),
            atol=1e-16,
        )

    def test_quarter_period_swaps_plus_minus(self, env):
        g = drift_gate(env, env.larmor_period / 4.0)
        out = apply(g, named_state("+"))
        assert out.fidelity(named_state("-")) == pytest.approx(1.0, abs=1e-12)

    def test_eighth_period_reaches_circular(self, env):
        g = drift_gate(env, env.larmor_period / 8.0)
        out = apply(g, named_state("+"))
        assert out.fidelity(named_state("R")) == pytest.approx(1.0, abs=1e-12)

    def test_half_period_is_identity(self, env):
        g = drift_gate(env, env.larmor_period / 2.0)
        np.testing.assert_allclose(g.matrix, np.eye(2), atol=1e-12)

    def test_drift_is_phased_z_rotation(self, env):
        t = 2.0e-10
        w = env.larmor_omega
        expected = cmath.exp(1j * w * t) * rotation_gate("z", 2.0 * w * t).matrix
        np.testing.assert_allclose(drift_gate(env, t).matrix, expected, atol=1e-15)

    @given(st.floats(0, 7.3e-10), st.floats(0, 7.3e-10))
    def test_durations_compose(self, t1, t2):
        env = derive_beam(10_000.0, 0.1)
        lhs = (drift_gate(env, t1) @ drift_gate(env, t2)).matrix
        np.testing.assert_allclose(lhs, drift_gate(env, t1 + t2).matrix, atol=1e-12)

    def test_negative_duration_rejected(self, env):
        with pytest.raises(PhysicsDomainError):
            drift_gate(env, -1e-12)

    def test_requires_field(self):
        with pytest.raises(PhysicsDomainError):
            drift_gate(derive_beam(10_000.0, 0.0), 1e-10)


class TestLoops:
    def test_trivial_loop_phase_zero(self):
        phase = loop_global_phase([pauli_z(), pauli_z()], named_state("+"))
        assert phase == pytest.approx(0.0, abs=1e-15)

    def test_spinor_full_turn_phase(self):
        phase = loop_global_phase([rotation_gate("z", 2.0 * math.pi)], named_state("+"))
        assert abs(phase) == pytest.approx(math.pi, abs=1e-15)

    def test_open_path_raises_with_magnitude(self):
        with pytest.raises(NotALoopError) as exc:
            loop_global_phase([rotation_gate("y", 1.0)], named_state("0"))
        assert exc.value.overlap_magnitude == pytest.approx(math.cos(0.5), abs=1e-12)

    def test_great_circle_loop_phase_matches_solid_angle(self):
        # Two pi half-turns about the tilted axis carry the start state
        # around a great circle; the acquired phase must equal minus half
        # the enclosed solid angle (mod 2 pi), with zero dynamical part
        # because the state stays orthogonal to the rotation axis.
        t = basis_change()
        m = 100
        piece = t @ rotation_gate("z", math.pi / m) @ t.adjoint()
        gates = [piece] * (2 * m)
        start = apply(rotation_gate("y", -math.pi / 4.0), named_state("0"))

        phase = loop_global_phase(gates, start)
        assert abs(phase) == pytest.approx(math.pi, abs=1e-12)

        points = [bloch(start).as_array()]
        s = start
        for g in gates:
            s = apply(g, s)
            points.append(bloch(s).as_array())
        omega = loop_solid_angle(np.array(points))
        assert abs(omega) == pytest.approx(2.0 * math.pi, abs=1e-9)
        mismatch = (phase + omega / 2.0) % (2.0 * math.pi)
        assert min(mismatch, 2.0 * math.pi - mismatch) < 1e-9

    def test_octant_loop_phase_matches_solid_angle(self):
        # Geodesic triangle pole -> x -> y -> pole encloses one octant,
        # an unambiguous solid angle of pi/2, so the loop phase must come
        # out at -(pi/2)/2 = -pi/4 up to the measured orientation sign.
        m = 100
        legs = [("y", m), ("z", m), ("x", m)]
        gates = []
        for axis, steps in legs:
            gates.extend([rotation_gate(axis, (math.pi / 2.0) / steps)] * steps)
        start = named_state("0")

        phase = loop_global_phase(gates, start)
        points = [bloch(start).as_array()]
        s = start
        for g in gates:
            s = apply(g, s)
            points.append(bloch(s).as_array())
        omega = loop_solid_angle(np.array(points))
        assert abs(omega) == pytest.approx(math.pi / 2.0, abs=1e-3)
        mismatch = (phase + omega / 2.0) % (2.0 * math.pi)
        assert min(mismatch, 2.0 * math.pi - mismatch) < 1e-3
        assert abs(phase) == pytest.approx(math.pi / 4.0, abs=1e-12)


class TestSerialization:
    def test_format_complex_round_trips(self):
        z = complex(1.0 / 3.0, -2.0 / 7.0)
        re, im = format_complex(z).split()
        assert float(re) == z.real and float(im) == z.imag

    def test_gate_pairs_row_major(self):
        rows = gate_pairs(hadamard())
        h = 1.0 / SQ2
        assert [float(p.split()[0]) for p in rows] == pytest.approx([h, h, h, -h])
        assert all(float(p.split()[1]) == 0.0 for p in rows)
