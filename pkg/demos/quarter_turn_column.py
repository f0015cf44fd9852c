"""Run the bundled quarter_turn.col script and narrate the run log."""

import os

from temqubit import named_state, parse_column, run_column

HERE = os.path.dirname(__file__)
OUT = os.path.join(HERE, "out")

with open(os.path.join(HERE, "quarter_turn.col"), encoding="utf-8") as fh:
    spec = parse_column(fh.read())

log = run_column(spec, outdir=OUT)

print(f"{'element':<42} {'t (ps)':>8} {'z (mm)':>8}   bloch")
for rec in log.records:
    b = rec.bloch_after
    print(
        f"{rec.label:<42} {rec.t_s * 1e12:>8.2f} {rec.z_m * 1e3:>8.3f}"
        f"   ({b.x:+.3f}, {b.y:+.3f}, {b.z:+.3f})"
    )

fid = log.final_state.fidelity(named_state("R"))
print(f"\nfidelity with |R>: {fid:.12f}")
print(f"images and runlog.json in {OUT}")
