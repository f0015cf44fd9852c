"""Render a small gallery of non-diffracting modes to demos/out/.

Each image encodes phase as hue and probability as brightness; the white
bar in the bottom-left corner is one magnetic waist long.
"""

import os

from temqubit import (
    ImageSpec,
    ModeIndex,
    TransverseGrid,
    derive_beam,
    named_state,
    render_field,
    sample_landau,
    synthesize_qubit_field,
    write_image,
)

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

env = derive_beam(10_000.0, 0.1)
w = env.magnetic_waist_wm
grid = TransverseGrid(256, 4.0 * w)
spec = ImageSpec(scale_bar=True, scale_bar_length=w)

for n, l in [(0, 0), (0, 1), (0, -1), (0, 2), (1, 0), (1, -2), (2, 3)]:
    field = sample_landau(ModeIndex(n, l), w, grid)
    name = f"mode_n{n}_l{l:+d}.ppm"
    write_image(render_field(field, spec), os.path.join(OUT, name))
    print("wrote", name)

# the qubit lives in the two l = +-1 rings; superpositions break the
# circular symmetry into lobes whose orientation tracks the phase
for label, fname in [("+", "state_plus.ppm"), ("R", "state_r.ppm")]:
    field = synthesize_qubit_field(named_state(label), w, grid)
    write_image(render_field(field, spec), os.path.join(OUT, fname))
    print("wrote", fname)

print("gallery in", OUT)
