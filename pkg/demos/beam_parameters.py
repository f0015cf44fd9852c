"""Print the beam quantities the rest of the demos rely on.

Running this shows how the Larmor clock, the non-diffracting waist and
the oscillation length move as the acceleration voltage and the lens
field change.
"""

from temqubit import derive_beam, drift_length, max_nonadiabatic_switch_time

CASES = [
    (10_000.0, 0.1),
    (10_000.0, 0.05),
    (60_000.0, 0.1),
    (300_000.0, 1.9),  # typical objective-lens field at full voltage
]

header = f"{'E (keV)':>8} {'B (T)':>6} {'Omega_L (GHz)':>14} {'w_m (nm)':>9} {'z_L (mm)':>9} {'T_L (ns)':>9}"
print(header)
print("-" * len(header))
for energy_ev, b_t in CASES:
    env = derive_beam(energy_ev, b_t)
    print(
        f"{energy_ev / 1e3:>8.0f} {b_t:>6.2f}"
        f" {env.larmor_omega / 1e9:>14.4f}"
        f" {env.magnetic_waist_wm * 1e9:>9.2f}"
        f" {env.oscillation_length_zl * 1e3:>9.2f}"
        f" {env.larmor_period * 1e9:>9.4f}"
    )

env = derive_beam(10_000.0, 0.1)
step = drift_length(env.larmor_period / 16.0, env)
print()
print(f"gamma = {env.gamma:.6f}, v = {env.speed_v:.4e} m/s")
print(f"one sixteenth of a Larmor period covers {step * 1e3:.4f} mm of column")
print(f"a field switch still reads as sudden below {max_nonadiabatic_switch_time(env) * 1e9:.4f} ns")

nonrel = derive_beam(10_000.0, 0.1, relativistic_mass=False)
shift = (nonrel.larmor_omega - env.larmor_omega) / env.larmor_omega
print(f"ignoring the relativistic mass overestimates Omega_L by {shift:+.2%}")
