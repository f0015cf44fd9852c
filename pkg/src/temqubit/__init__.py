"""Desk-scale simulator of orbital-angular-momentum electron qubits.

An electron carrying orbital angular momentum l = -1 or +1 behaves as
a two-level system inside a magnetic drift tube: the two ring modes
are split by twice the Larmor frequency, so tube length controls a
Bloch-sphere latitude rotation while quadrupole mode converters rotate
along meridians. This package computes the beam and field parameters,
manipulates the two-level state with exact gate algebra, cross-checks
that algebra against an independent spectral mode-basis propagator,
and renders the transverse wavefunctions as phase-colored images from
a small scriptable column description.
"""

from .beam import (
    BeamEnvironment,
    DiffractingBeamParams,
    derive_beam,
    diffracting_params,
    drift_length,
    drift_time_for_phase,
    landau_energy,
    matching_field,
    max_nonadiabatic_switch_time,
)
from .column import (
    BeamDecl,
    ColumnSpec,
    Converter,
    Drift,
    GridDecl,
    RunLog,
    RunRecord,
    Snapshot,
    StateDecl,
    format_column,
    format_runlog,
    parse_column,
    parse_number,
    run_column,
    write_runlog,
)
from .constants import CODATA, EV, PhysicalConstants
from .errors import (
    ColumnParseError,
    DumpFormatError,
    EmptySubspaceError,
    GridMismatchError,
    MatchingError,
    NonUnitaryGateError,
    NotALoopError,
    PhysicsDomainError,
    ResolutionError,
    SimulationError,
    UnsupportedRangeError,
)
from .fields import (
    ComplexField,
    ModeIndex,
    field_dump_bytes,
    TransverseGrid,
    overlap,
    read_field_dump,
    sample_diffracting_lg,
    sample_hg,
    sample_landau,
    synthesize_qubit_field,
    write_field_dump,
)
from .polynomials import hermite, laguerre, lg_norm
from .qubit import (
    BlochVector,
    GateMatrix,
    QubitState,
    apply,
    basis_change,
    bloch,
    converter_gate,
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
from .render import ImageSpec, render_field, write_image
from .spectral import (
    ModeExpansion,
    decompose,
    evolve,
    format_expansion,
    project_to_qubit,
    read_expansion,
    synthesize,
    write_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "BeamEnvironment",
    "BeamDecl",
    "BlochVector",
    "CODATA",
    "ColumnParseError",
    "ColumnSpec",
    "DumpFormatError",
    "ComplexField",
    "Converter",
    "DiffractingBeamParams",
    "Drift",
    "EV",
    "EmptySubspaceError",
    "GateMatrix",
    "GridDecl",
    "GridMismatchError",
    "ImageSpec",
    "MatchingError",
    "ModeExpansion",
    "ModeIndex",
    "NonUnitaryGateError",
    "NotALoopError",
    "PhysicalConstants",
    "PhysicsDomainError",
    "QubitState",
    "ResolutionError",
    "RunLog",
    "RunRecord",
    "SimulationError",
    "Snapshot",
    "StateDecl",
    "TransverseGrid",
    "UnsupportedRangeError",
    "apply",
    "basis_change",
    "bloch",
    "converter_gate",
    "decompose",
    "derive_beam",
    "field_dump_bytes",
    "diffracting_params",
    "drift_gate",
    "drift_length",
    "drift_time_for_phase",
    "evolve",
    "format_column",
    "format_complex",
    "format_expansion",
    "format_runlog",
    "gate_pairs",
    "hadamard",
    "hermite",
    "identity_gate",
    "laguerre",
    "landau_energy",
    "lg_norm",
    "loop_global_phase",
    "matching_field",
    "max_nonadiabatic_switch_time",
    "named_state",
    "overlap",
    "parse_column",
    "parse_number",
    "pauli_z",
    "project_to_qubit",
    "read_expansion",
    "read_field_dump",
    "render_field",
    "rotation_gate",
    "run_column",
    "sample_diffracting_lg",
    "sample_hg",
    "sample_landau",
    "synthesize",
    "synthesize_qubit_field",
    "write_expansion",
    "write_field_dump",
    "write_image",
    "write_runlog",
]
