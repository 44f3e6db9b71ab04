//! Benchmark harness shared by the `groupds` binary and the acceptance
//! suite: build a structure, compare it against the Cayley table, and emit
//! a JSON report.

pub mod bench;

pub use bench::{oracle_check, run_bench, BenchReport, OracleOutcome};
