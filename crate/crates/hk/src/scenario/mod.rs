//! Declarative scenarios: TOML configuration, subcommand runners, the
//! built-in scenario library, deterministic emitters and run manifests.
//!
//! The module is the library half of the `hk` binary.  A [`Scenario`] is a
//! parsed and resolved configuration; runner functions consume it together
//! with [`RunControls`] (the meaning-preserving CLI flags) and produce a
//! [`RunOutcome`] of ordered rows, verdicts, assumptions and timings, which
//! the emitters render identically across table, CSV and JSON.

mod config;
mod emit;
mod manifest;
mod runner;

pub use config::{
    default_qs, effective_qs, resolve_budget, AssprimeSpec, CaptureSpec, CmSpec, EquiSpec,
    FieldSpec, IdealSpec, LimitsSpec, LocalizeSpec, MinhSpec, MonotoneSpec, OutputSpec,
    ParameterSystemSpec, RingSpec, RunSpec, Scenario, ScenarioConfig,
};
pub use emit::{
    describe_estimate, emit_csv, emit_json, emit_table, is_integral, parse_json_rows, OutputRow,
    CSV_HEADER,
};
pub use manifest::{sha256_hex, RunManifest, TaskTiming, VerdictRecord};
pub use runner::{
    run_assprime, run_capture, run_cmtest, run_colength, run_equi, run_estimate, run_function,
    run_hs, run_library, run_limits, run_monotone, RunControls, RunOutcome, LIBRARY_CASES,
};
