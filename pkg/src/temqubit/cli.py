"""Command-line front end.

Subcommands
-----------
params   print every derived beam quantity for an energy and field
run      execute a column script, writing snapshots and runlog.json
gate     print one gate matrix (converter, drift, hadamard, pauli-z, rot)
render   turn a binary field dump into a P6 pixmap
verify   run the analytic-gate vs spectral-oracle cross-check

Exit codes: 0 success, 1 usage problems (bad arguments, missing or
malformed files), 2 physics or domain errors (zero-field drift,
under-resolved waist, and similar).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional

from .beam import derive_beam, drift_length, max_nonadiabatic_switch_time
from .column import parse_column, parse_number, run_column
from .errors import ColumnParseError, DumpFormatError, SimulationError
from .fields import TransverseGrid, read_field_dump, synthesize_qubit_field
from .qubit import (
    apply,
    converter_gate,
    drift_gate,
    format_complex,
    hadamard,
    named_state,
    pauli_z,
    rotation_gate,
)
from .render import ImageSpec, render_field, write_image
from .spectral import decompose, evolve, project_to_qubit


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems instead of exiting itself."""

    def error(self, message: str):
        raise _UsageError(message)


def _angle(text: str) -> float:
    """Angle or fraction argument: accepts pi expressions like 3*pi/4."""
    return parse_number(text, 0)


def _build_parser() -> _Parser:
    parser = _Parser(prog="temqubit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="derived beam quantities")
    p.add_argument("--energy-ev", type=float, required=True)
    p.add_argument("--b-field-t", type=float, required=True)
    p.add_argument("--non-relativistic", action="store_true")

    p = sub.add_parser("run", help="execute a column script")
    p.add_argument("script")
    p.add_argument("--outdir", default=".")

    p = sub.add_parser("gate", help="print a gate matrix")
    gate_sub = p.add_subparsers(dest="gate_kind", required=True)
    g = gate_sub.add_parser("converter")
    g.add_argument("--theta", type=_angle, default=math.pi / 2.0)
    g = gate_sub.add_parser("drift")
    g.add_argument("--energy-ev", type=float, required=True)
    g.add_argument("--b-field-t", type=float, required=True)
    g.add_argument("--non-relativistic", action="store_true")
    group = g.add_mutually_exclusive_group(required=True)
    group.add_argument("--time", type=_angle)
    group.add_argument("--larmor-fraction", type=_angle)
    group.add_argument("--length-m", type=_angle)
    gate_sub.add_parser("hadamard")
    gate_sub.add_parser("pauli-z")
    g = gate_sub.add_parser("rot")
    g.add_argument("--axis", choices=("x", "y", "z"), required=True)
    g.add_argument("--theta", type=_angle, required=True)

    p = sub.add_parser("render", help="field dump to pixmap")
    p.add_argument("dump")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--scale-bar-m", type=float, default=0.0)

    p = sub.add_parser("verify", help="oracle cross-check of the drift gate")
    p.add_argument("--energy-ev", type=float, default=10_000.0)
    p.add_argument("--b-field-t", type=float, default=0.1)
    p.add_argument("--samples", type=int, default=256)

    return parser


def _print_params(args) -> int:
    env = derive_beam(
        args.energy_ev, args.b_field_t, not args.non_relativistic
    )
    rows = [
        ("kinetic_energy_ev", f"{env.kinetic_energy_ev:.17g}"),
        ("b_field_t", f"{env.b_field_t:.17g}"),
        ("relativistic_mass", "true" if env.relativistic_mass else "false"),
        ("gamma", f"{env.gamma:.17g}"),
        ("speed_v_m_per_s", f"{env.speed_v:.17g}"),
        ("wavenumber_k_per_m", f"{env.wavenumber_k:.17g}"),
    ]
    if env.larmor_omega is None:
        rows += [
            ("larmor_omega_rad_per_s", "absent (B = 0)"),
            ("larmor_period_s", "absent (B = 0)"),
            ("magnetic_waist_m", "absent (B = 0)"),
            ("oscillation_length_m", "absent (B = 0)"),
        ]
    else:
        rows += [
            ("larmor_omega_rad_per_s", f"{env.larmor_omega:.17g}"),
            ("larmor_omega_ghz", f"{env.larmor_omega / 1e9:.17g}"),
            ("larmor_period_s", f"{env.larmor_period:.17g}"),
            ("larmor_period_ns", f"{env.larmor_period * 1e9:.17g}"),
            ("magnetic_waist_m", f"{env.magnetic_waist_wm:.17g}"),
            ("magnetic_waist_nm", f"{env.magnetic_waist_wm * 1e9:.17g}"),
            ("oscillation_length_m", f"{env.oscillation_length_zl:.17g}"),
            ("oscillation_length_mm", f"{env.oscillation_length_zl * 1e3:.17g}"),
            ("half_larmor_switch_s", f"{max_nonadiabatic_switch_time(env):.17g}"),
            (
                "sixteenth_period_step_m",
                f"{drift_length(env.larmor_period / 16.0, env):.17g}",
            ),
        ]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}} = {value}")
    return 0


def _print_gate(args) -> int:
    if args.gate_kind == "converter":
        gate = converter_gate(args.theta)
    elif args.gate_kind == "hadamard":
        gate = hadamard()
    elif args.gate_kind == "pauli-z":
        gate = pauli_z()
    elif args.gate_kind == "rot":
        gate = rotation_gate(args.axis, args.theta)
    else:
        env = derive_beam(
            args.energy_ev, args.b_field_t, not args.non_relativistic
        )
        if args.time is not None:
            duration = args.time
        elif args.larmor_fraction is not None:
            env.require_field()
            duration = args.larmor_fraction * env.larmor_period
        else:
            duration = args.length_m / env.speed_v
        gate = drift_gate(env, duration)
    m = gate.matrix
    for i in (0, 1):
        print("  ".join(format_complex(m[i, j]) for j in (0, 1)))
    return 0


def _run_script(args) -> int:
    with open(args.script, "r", encoding="utf-8") as fh:
        text = fh.read()
    log = run_column(parse_column(text), outdir=args.outdir)
    final = log.final_state
    b = log.records[-1].bloch_after
    print(f"records {len(log.records)}")
    print(f"final_state {format_complex(final.c0)}  {format_complex(final.c1)}")
    print(f"final_bloch {b.x:.17g} {b.y:.17g} {b.z:.17g}")
    print(f"total_t_s {log.records[-1].t_s:.17g}")
    print(f"total_z_m {log.records[-1].z_m:.17g}")
    return 0


def _render_dump(args) -> int:
    field = read_field_dump(args.dump)
    spec = ImageSpec(
        gamma_display=args.gamma,
        scale_bar=args.scale_bar_m > 0,
        scale_bar_length=args.scale_bar_m,
    )
    write_image(render_field(field, spec), args.output)
    print(f"wrote {args.output}")
    return 0


FIDELITY_FLOOR = 1.0 - 1e-9
LEAKAGE_CEILING = 1e-6


def _verify(args) -> int:
    env = derive_beam(args.energy_ev, args.b_field_t, True)
    omega = env.require_field()
    waist = env.magnetic_waist_wm
    grid = TransverseGrid(args.samples, 4.0 * waist)
    period = env.larmor_period
    all_ok = True
    for label in ("0", "+", "R"):
        state = named_state(label)
        expansion = decompose(
            synthesize_qubit_field(state, waist, grid), waist
        )
        for den in (16, 8, 4):
            t = period / den
            propagated, leakage = project_to_qubit(evolve(expansion, env, t))
            expected = apply(drift_gate(env, t), state)
            fidelity = expected.fidelity(propagated)
            ok = fidelity >= FIDELITY_FLOOR and leakage < LEAKAGE_CEILING
            all_ok &= ok
            print(
                f"state={label} t=T_L/{den} "
                f"fidelity={fidelity:.12f} leakage={leakage:.3e} "
                f"{'ok' if ok else 'FAIL'}"
            )
    if not all_ok:
        print("oracle disagreement", file=sys.stderr)
        return 2
    print(f"all {3 * 3} cases agree (omega_L = {omega:.6e} rad/s)")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "params":
            return _print_params(args)
        if args.command == "run":
            return _run_script(args)
        if args.command == "gate":
            return _print_gate(args)
        if args.command == "render":
            return _render_dump(args)
        return _verify(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ColumnParseError, DumpFormatError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return 1
    except SimulationError as exc:
        print(f"physics error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help path
        return int(exc.code or 0)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
