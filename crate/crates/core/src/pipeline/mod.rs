//! Classify a group, build a vertex-transitive normal bi-Cayley graph over
//! it by the matching construction, and certify the result.

mod build;
mod certificate;
mod sweep;

pub use build::{
    construct_normal_bicayley, construct_with, from_grr, PipelineOptions, Witness,
    DEFAULT_MAX_BUILD_ORDER,
};
pub use certificate::{
    verify_certificate, verify_certificate_text, Certificate, CheckItem, VerificationReport,
};
pub use sweep::{theorem_sweep, SweepReport, SweepRow, MAX_SWEEP_ORDER};
