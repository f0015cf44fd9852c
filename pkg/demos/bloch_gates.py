"""Walk through the gate algebra on the Bloch sphere.

The drift tube only ever rotates about z, yet sandwiching it between
fixed converter rotations yields a Hadamard, and closed loops of gates
pick up a geometric phase equal to minus half the enclosed solid angle.
"""

import math

import numpy as np

from temqubit import (
    apply,
    basis_change,
    bloch,
    converter_gate,
    derive_beam,
    drift_gate,
    hadamard,
    loop_global_phase,
    named_state,
    pauli_z,
    rotation_gate,
)


def show(title, gate):
    print(title)
    for row in gate.matrix:
        print("   ", "  ".join(f"{z.real:+.4f}{z.imag:+.4f}j" for z in row))


def main():
    np.set_printoptions(precision=4, suppress=True)
    t = basis_change()
    show("T = R_y(pi/4)", t)
    show("T Z Tdag", t @ pauli_z() @ t.adjoint())
    show("Hadamard", hadamard())
    print()

    env = derive_beam(10_000.0, 0.1)
    state = apply(converter_gate(), named_state("0"))  # |0> -> |+>
    print("Bloch path of |+> under sixteenth-period drifts:")
    step = drift_gate(env, env.larmor_period / 16.0)
    for k in range(5):
        b = bloch(state)
        print(f"   after {k} steps: ({b.x:+.4f}, {b.y:+.4f}, {b.z:+.4f})")
        state = apply(step, state)
    print("   two steps land on |R>, four on |->: a z-axis precession")
    print()

    # two half-turns about the tilted axis drag a perpendicular state
    # around a great circle: half the sphere, so a phase of -2pi/2 = -pi
    g = t @ rotation_gate("z", math.pi) @ t.adjoint()
    start = apply(rotation_gate("y", -math.pi / 4.0), named_state("0"))
    phase = loop_global_phase([g, g], start)
    print(f"great-circle loop: phase = {phase / math.pi:+.6f} pi "
          "(solid angle 2 pi; -pi reported as +pi)")

    # pole -> x -> y -> pole along geodesics encloses one octant of the
    # sphere, an unambiguous pi/2 of solid angle
    octant = [rotation_gate(ax, math.pi / 2.0) for ax in "yzx"]
    phase = loop_global_phase(octant, named_state("0"))
    print(f"octant loop:       phase = {phase / math.pi:+.6f} pi "
          "(solid angle pi/2, expected -pi/4)")
    print("both obey phase = -solid_angle / 2")


if __name__ == "__main__":
    main()
