//! Instance generation, the experiment driver and report emission for
//! `tdkernel`.

pub mod agreement;
pub mod experiment;
pub mod generate;
pub mod report;

pub use experiment::{run_experiment, run_suite, suite, ExperimentConfig, Report, Row, Status};
pub use generate::{generate, Family, GeneratorSpec};
pub use report::{emit_report, parse_csv, Format};
