"""Column scripts: a line-oriented description of one simulation run.

Grammar (UTF-8, one statement per line, `#` starts a comment):

    beam energy_ev=<num> b_field_t=<num> [relativistic=<true|false>]
    grid samples=<int> [half_extent_wm=<num> | half_extent_m=<num>]
    state <0|1|+|-|R|L>  or  state <re0> <im0> <re1> <im1>
    converter [theta=<angle>]
    drift <time=<s> | larmor_fraction=<num> | length_m=<m>>
    snapshot <relative-filename>

Numeric values accept products and quotients of floats and the literal
`pi`, optionally signed: `pi/2`, `-3*pi/4`, `1/16`, `2.5e-3`.

Exactly one beam line is required and it must precede every element
(converter, drift, snapshot). grid and state are optional declarations
with defaults (512 samples at four magnetic waists half extent, state
0) and must also precede the elements. Snapshot filenames ending in
.lgf write binary field dumps; anything else writes a P6 pixmap.

Every parse problem raises ColumnParseError carrying the 1-based line
number. Runtime physics problems (a drift with zero field, a snapshot
that needs the magnetic waist with no field present) raise
PhysicsDomainError naming the element's line.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .beam import BeamEnvironment, derive_beam
from .errors import ColumnParseError, PhysicsDomainError
from .fields import TransverseGrid, synthesize_qubit_field, write_field_dump
from .qubit import (
    BlochVector,
    GateMatrix,
    QubitState,
    NAMED_STATES,
    apply,
    bloch,
    converter_gate,
    drift_gate,
    format_complex,
    identity_gate,
)
from .render import ImageSpec, render_field, write_image

DEFAULT_SAMPLES = 512
DEFAULT_HALF_EXTENT_WM = 4.0


def parse_number(text: str, line: int) -> float:
    """Evaluate a numeric token: floats and `pi` joined by * and /."""
    body = text.strip()
    sign = 1.0
    if body.startswith("-"):
        sign = -1.0
        body = body[1:]
    if not body:
        raise ColumnParseError(f"empty numeric value {text!r}", line)

    def atom(token: str) -> float:
        if token == "pi":
            return math.pi
        try:
            return float(token)
        except ValueError:
            raise ColumnParseError(
                f"bad numeric token {token!r} in {text!r}", line
            ) from None

    quotients = body.split("/")
    factors = quotients[0].split("*")
    value = 1.0
    for f in factors:
        value *= atom(f)
    for q in quotients[1:]:
        denom = atom(q)
        if denom == 0.0:
            raise ColumnParseError(f"division by zero in {text!r}", line)
        value /= denom
    return sign * value


def _key_values(parts: List[str], line: int, allowed: Tuple[str, ...]) -> Dict[str, str]:
    result: Dict[str, str] = {}
    for part in parts:
        key, sep, value = part.partition("=")
        if not sep or not value:
            raise ColumnParseError(f"expected key=value, got {part!r}", line)
        if key not in allowed:
            raise ColumnParseError(
                f"unknown key {key!r} (allowed: {', '.join(allowed)})", line
            )
        if key in result:
            raise ColumnParseError(f"duplicate key {key!r}", line)
        result[key] = value
    return result


@dataclass(frozen=True)
class BeamDecl:
    energy_ev: float
    b_field_t: float
    relativistic: bool = True


@dataclass(frozen=True)
class GridDecl:
    """Grid request; the half extent is either absolute or in waists."""

    samples: int = DEFAULT_SAMPLES
    half_extent_m: Optional[float] = None
    half_extent_wm: Optional[float] = DEFAULT_HALF_EXTENT_WM

    def resolve(self, env: BeamEnvironment, line: int = 0) -> TransverseGrid:
        if self.half_extent_m is not None:
            return TransverseGrid(self.samples, self.half_extent_m)
        if env.magnetic_waist_wm is None:
            raise PhysicsDomainError(
                f"line {line}: grid sized in magnetic waists needs a nonzero field"
            )
        return TransverseGrid(
            self.samples, self.half_extent_wm * env.magnetic_waist_wm
        )


@dataclass(frozen=True)
class StateDecl:
    """Initial state exactly as written: a label or four raw floats."""

    label: Optional[str]
    amplitudes: Tuple[float, float, float, float]

    def to_state(self) -> QubitState:
        re0, im0, re1, im1 = self.amplitudes
        return QubitState(complex(re0, im0), complex(re1, im1))


@dataclass(frozen=True)
class Converter:
    theta: float
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Drift:
    time_s: Optional[float] = None
    larmor_fraction: Optional[float] = None
    length_m: Optional[float] = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Snapshot:
    filename: str
    line: int = field(default=0, compare=False)


Element = Union[Converter, Drift, Snapshot]


@dataclass(frozen=True)
class ColumnSpec:
    beam: BeamDecl
    grid: GridDecl
    initial_state: StateDecl
    elements: Tuple[Element, ...]


_DEFAULT_STATE = StateDecl(label="0", amplitudes=(1.0, 0.0, 0.0, 0.0))


def parse_column(text: str) -> ColumnSpec:
    """Parse a script; every rejection carries its line number."""
    beam: Optional[BeamDecl] = None
    grid: Optional[GridDecl] = None
    state: Optional[StateDecl] = None
    elements: List[Element] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        keyword, args = parts[0], parts[1:]

        if keyword == "beam":
            if beam is not None:
                raise ColumnParseError("duplicate beam declaration", line_no)
            if elements:
                raise ColumnParseError(
                    "beam declaration must precede all elements", line_no
                )
            kv = _key_values(
                args, line_no, ("energy_ev", "b_field_t", "relativistic")
            )
            if "energy_ev" not in kv or "b_field_t" not in kv:
                raise ColumnParseError(
                    "beam requires energy_ev= and b_field_t=", line_no
                )
            relativistic = True
            if "relativistic" in kv:
                flag = kv["relativistic"].lower()
                if flag not in ("true", "false"):
                    raise ColumnParseError(
                        f"relativistic must be true or false, got {kv['relativistic']!r}",
                        line_no,
                    )
                relativistic = flag == "true"
            energy = parse_number(kv["energy_ev"], line_no)
            if energy <= 0:
                raise ColumnParseError(
                    f"beam energy must be positive, got {energy!r}", line_no
                )
            beam = BeamDecl(
                energy_ev=energy,
                b_field_t=parse_number(kv["b_field_t"], line_no),
                relativistic=relativistic,
            )

        elif keyword == "grid":
            if grid is not None:
                raise ColumnParseError("duplicate grid declaration", line_no)
            if elements:
                raise ColumnParseError(
                    "grid declaration must precede all elements", line_no
                )
            kv = _key_values(
                args, line_no, ("samples", "half_extent_wm", "half_extent_m")
            )
            if "half_extent_wm" in kv and "half_extent_m" in kv:
                raise ColumnParseError(
                    "give half_extent_wm or half_extent_m, not both", line_no
                )
            samples = DEFAULT_SAMPLES
            if "samples" in kv:
                samples_f = parse_number(kv["samples"], line_no)
                samples = int(samples_f)
                if samples != samples_f or samples < 2:
                    raise ColumnParseError(
                        f"samples must be an integer >= 2, got {kv['samples']!r}",
                        line_no,
                    )
            if "half_extent_m" in kv:
                extent_m = parse_number(kv["half_extent_m"], line_no)
                if extent_m <= 0:
                    raise ColumnParseError(
                        "half_extent_m must be positive", line_no
                    )
                grid = GridDecl(samples, half_extent_m=extent_m, half_extent_wm=None)
            else:
                factor = (
                    parse_number(kv["half_extent_wm"], line_no)
                    if "half_extent_wm" in kv
                    else DEFAULT_HALF_EXTENT_WM
                )
                if factor <= 0:
                    raise ColumnParseError(
                        "half_extent_wm must be positive", line_no
                    )
                grid = GridDecl(samples, half_extent_m=None, half_extent_wm=factor)

        elif keyword == "state":
            if state is not None:
                raise ColumnParseError("duplicate state declaration", line_no)
            if elements:
                raise ColumnParseError(
                    "state declaration must precede all elements", line_no
                )
            if len(args) == 1:
                label = args[0]
                if label not in NAMED_STATES:
                    raise ColumnParseError(
                        f"unknown state name {label!r} "
                        f"(expected one of {', '.join(sorted(NAMED_STATES))} "
                        "or four amplitudes)",
                        line_no,
                    )
                c0, c1 = NAMED_STATES[label]
                state = StateDecl(
                    label=label,
                    amplitudes=(
                        complex(c0).real,
                        complex(c0).imag,
                        complex(c1).real,
                        complex(c1).imag,
                    ),
                )
            elif len(args) == 4:
                amps = tuple(parse_number(a, line_no) for a in args)
                norm_sq = amps[0] ** 2 + amps[1] ** 2 + amps[2] ** 2 + amps[3] ** 2
                if abs(norm_sq - 1.0) > 1e-6:
                    raise ColumnParseError(
                        f"explicit state is not normalized "
                        f"(|c0|^2 + |c1|^2 = {norm_sq!r})",
                        line_no,
                    )
                state = StateDecl(label=None, amplitudes=amps)
            else:
                raise ColumnParseError(
                    "state takes one name or four amplitude components", line_no
                )

        elif keyword == "converter":
            if beam is None:
                raise ColumnParseError(
                    "element appears before the beam declaration", line_no
                )
            kv = _key_values(args, line_no, ("theta",))
            theta = (
                parse_number(kv["theta"], line_no)
                if "theta" in kv
                else math.pi / 2.0
            )
            elements.append(Converter(theta=theta, line=line_no))

        elif keyword == "drift":
            if beam is None:
                raise ColumnParseError(
                    "element appears before the beam declaration", line_no
                )
            kv = _key_values(
                args, line_no, ("time", "larmor_fraction", "length_m")
            )
            given = [k for k in ("time", "larmor_fraction", "length_m") if k in kv]
            if len(given) > 1:
                raise ColumnParseError(
                    f"conflicting drift parameterizations: {' and '.join(given)}",
                    line_no,
                )
            if not given:
                raise ColumnParseError(
                    "drift needs one of time=, larmor_fraction=, length_m=",
                    line_no,
                )
            value = parse_number(kv[given[0]], line_no)
            if value < 0:
                raise ColumnParseError(
                    f"drift {given[0]} must be nonnegative, got {value!r}", line_no
                )
            elements.append(
                Drift(
                    time_s=value if given[0] == "time" else None,
                    larmor_fraction=value if given[0] == "larmor_fraction" else None,
                    length_m=value if given[0] == "length_m" else None,
                    line=line_no,
                )
            )

        elif keyword == "snapshot":
            if beam is None:
                raise ColumnParseError(
                    "element appears before the beam declaration", line_no
                )
            if len(args) != 1:
                raise ColumnParseError(
                    "snapshot takes exactly one filename", line_no
                )
            name = args[0]
            if os.path.isabs(name):
                raise ColumnParseError(
                    f"snapshot filename must be relative, got {name!r}", line_no
                )
            elements.append(Snapshot(filename=name, line=line_no))

        else:
            raise ColumnParseError(f"unknown keyword {keyword!r}", line_no)

    if beam is None:
        raise ColumnParseError("missing beam declaration", 0)
    return ColumnSpec(
        beam=beam,
        grid=grid if grid is not None else GridDecl(),
        initial_state=state if state is not None else _DEFAULT_STATE,
        elements=tuple(elements),
    )


def format_column(spec: ColumnSpec) -> str:
    """Canonical text for a spec; reparses to an equal spec."""
    lines = [
        "beam energy_ev={:.17g} b_field_t={:.17g} relativistic={}".format(
            spec.beam.energy_ev,
            spec.beam.b_field_t,
            "true" if spec.beam.relativistic else "false",
        )
    ]
    g = spec.grid
    if g.half_extent_m is not None:
        lines.append(
            f"grid samples={g.samples} half_extent_m={g.half_extent_m:.17g}"
        )
    else:
        lines.append(
            f"grid samples={g.samples} half_extent_wm={g.half_extent_wm:.17g}"
        )
    s = spec.initial_state
    if s.label is not None:
        lines.append(f"state {s.label}")
    else:
        lines.append("state " + " ".join(f"{a:.17g}" for a in s.amplitudes))
    for el in spec.elements:
        if isinstance(el, Converter):
            lines.append(f"converter theta={el.theta:.17g}")
        elif isinstance(el, Drift):
            if el.time_s is not None:
                lines.append(f"drift time={el.time_s:.17g}")
            elif el.larmor_fraction is not None:
                lines.append(f"drift larmor_fraction={el.larmor_fraction:.17g}")
            else:
                lines.append(f"drift length_m={el.length_m:.17g}")
        else:
            lines.append(f"snapshot {el.filename}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RunRecord:
    """State of the run after one element (or the initial conditions)."""

    label: str
    gate: GateMatrix
    state_after: QubitState
    bloch_after: BlochVector
    z_m: float
    t_s: float


@dataclass(frozen=True)
class RunLog:
    beam: BeamDecl
    grid: Optional[TransverseGrid]
    records: Tuple[RunRecord, ...]

    @property
    def final_state(self) -> QubitState:
        return self.records[-1].state_after


def _drift_duration(el: Drift, env: BeamEnvironment) -> float:
    if el.time_s is not None:
        return el.time_s
    if el.larmor_fraction is not None:
        if env.larmor_period is None:
            raise PhysicsDomainError(
                f"line {el.line}: drift by Larmor fraction needs a nonzero field"
            )
        return el.larmor_fraction * env.larmor_period
    return el.length_m / env.speed_v


def run_column(spec: ColumnSpec, outdir: str = ".") -> RunLog:
    """Execute a parsed script: evolve the state, write snapshots and the log.

    Gates are applied in element order. Snapshots synthesize the
    current two-mode wavefunction on the declared grid and write either
    a pixmap (with a one-magnetic-waist scale bar) or a binary field
    dump for .lgf names. The run log lands in <outdir>/runlog.json.
    """
    env = derive_beam(
        spec.beam.energy_ev, spec.beam.b_field_t, spec.beam.relativistic
    )
    # Resolve the grid eagerly when possible; a field-free run without
    # snapshots must not trip over a waist-relative grid request.
    if spec.grid.half_extent_m is not None or env.magnetic_waist_wm is not None:
        grid: Optional[TransverseGrid] = spec.grid.resolve(env)
    else:
        grid = None
    state = spec.initial_state.to_state()
    os.makedirs(outdir, exist_ok=True)

    records = [
        RunRecord(
            label="initial",
            gate=identity_gate(),
            state_after=state,
            bloch_after=bloch(state),
            z_m=0.0,
            t_s=0.0,
        )
    ]
    z = t = 0.0
    for el in spec.elements:
        if isinstance(el, Converter):
            gate = converter_gate(el.theta)
            state = apply(gate, state)
            label = f"converter theta={el.theta:.17g}"
        elif isinstance(el, Drift):
            duration = _drift_duration(el, env)
            try:
                gate = drift_gate(env, duration)
            except PhysicsDomainError as exc:
                raise PhysicsDomainError(f"line {el.line}: {exc}") from exc
            state = apply(gate, state)
            t += duration
            z += env.speed_v * duration
            label = f"drift time={duration:.17g}"
        else:
            if env.magnetic_waist_wm is None or grid is None:
                raise PhysicsDomainError(
                    f"line {el.line}: snapshot needs a nonzero field "
                    "to set the mode waist"
                )
            gate = identity_gate()
            field_now = synthesize_qubit_field(state, env.magnetic_waist_wm, grid)
            path = os.path.join(outdir, el.filename)
            parent = os.path.dirname(path)
            if parent:
                os.makedirs(parent, exist_ok=True)
            if el.filename.endswith(".lgf"):
                write_field_dump(field_now, path)
            else:
                image = render_field(
                    field_now,
                    ImageSpec(
                        scale_bar=True, scale_bar_length=env.magnetic_waist_wm
                    ),
                )
                write_image(image, path)
            label = f"snapshot {el.filename}"
        records.append(
            RunRecord(
                label=label,
                gate=gate,
                state_after=state,
                bloch_after=bloch(state),
                z_m=z,
                t_s=t,
            )
        )

    log = RunLog(beam=spec.beam, grid=grid, records=tuple(records))
    write_runlog(log, os.path.join(outdir, "runlog.json"))
    return log


def _fmt(x: float) -> str:
    """JSON float with 17 significant digits; keeps nonfinite out."""
    if not math.isfinite(x):
        raise PhysicsDomainError(f"cannot serialize nonfinite value {x!r}")
    return format(x, ".17g")


def _complex_json(z: complex) -> str:
    return f"[{_fmt(z.real)}, {_fmt(z.imag)}]"


def _json_string(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    escaped = "".join(
        ch if ch >= " " else f"\\u{ord(ch):04x}" for ch in escaped
    )
    return f'"{escaped}"'


def format_runlog(log: RunLog) -> str:
    """Single JSON document with fixed key order and 17-digit floats."""
    out = []
    out.append("{")
    out.append(
        '  "beam": {'
        f'"energy_ev": {_fmt(log.beam.energy_ev)}, '
        f'"b_field_t": {_fmt(log.beam.b_field_t)}, '
        f'"relativistic": {"true" if log.beam.relativistic else "false"}'
        "},"
    )
    if log.grid is None:
        out.append('  "grid": null,')
    else:
        out.append(
            '  "grid": {'
            f'"samples_per_side": {log.grid.samples_per_side}, '
            f'"half_extent_m": {_fmt(log.grid.half_extent)}'
            "},"
        )
    out.append('  "records": [')
    rows = []
    for rec in log.records:
        m = rec.gate.matrix
        gate_json = ", ".join(
            _complex_json(m[i, j]) for i in (0, 1) for j in (0, 1)
        )
        state_json = ", ".join(
            _complex_json(c) for c in (rec.state_after.c0, rec.state_after.c1)
        )
        b = rec.bloch_after
        rows.append(
            "    {"
            f'"label": {_json_string(rec.label)}, '
            f'"gate": [{gate_json}], '
            f'"state_after": [{state_json}], '
            f'"bloch_after": [{_fmt(b.x)}, {_fmt(b.y)}, {_fmt(b.z)}], '
            f'"z_m": {_fmt(rec.z_m)}, '
            f'"t_s": {_fmt(rec.t_s)}'
            "}"
        )
    out.append(",\n".join(rows))
    out.append("  ]")
    out.append("}")
    return "\n".join(out) + "\n"


def write_runlog(log: RunLog, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_runlog(log))
