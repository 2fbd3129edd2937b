//! Batch verification of the h4-core structures.
//!
//! Every check is a list of named observations, each compared exactly
//! against an expected value. Reports and dumps are canonical JSON: object
//! keys are sorted, golden numbers are `[a, b]` pairs meaning `a + bφ`,
//! rationals are strings, and there are no floats.

pub mod checks;
pub mod context;
pub mod dump;
pub mod report;

pub use checks::{registry, select, Check};
pub use context::Context;
pub use report::{run_checks, CheckReport, Status};
