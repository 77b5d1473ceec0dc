//! Tolerant adversarially robust PAC learning over `lp`-ball perturbation
//! types.
//!
//! The crate provides the building blocks for learners that trade a small
//! inflation of the adversary's perturbation radius (the *tolerance*) for
//! drastically simpler algorithms: exact robust-ERM oracles over toy
//! hypothesis classes, grid covers and their induced finite perturbation
//! types, sampled eta-nets, smoothing and nearest-neighbor discretization
//! post-processing, semi-supervised candidate enumeration with pruning, a
//! prime-sequence hardness class separating proper from almost-proper
//! learning, and an experiment harness with brute-force optimum oracles.
//!
//! Everything stochastic flows from an explicit [`geometry::RngSeed`]; no
//! operation reads ambient entropy, so runs are reproducible bit-for-bit.

pub mod discretization;
pub mod geometry;
pub mod hardness;
pub mod harness;
pub mod hypotheses;
pub mod learners;
pub mod losses;

use thiserror::Error;

/// Errors shared across the crate's oracles and builders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("metric mismatch: {0}")]
    MetricMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("grid would require {required} points (cap {cap})")]
    GridTooLarge { required: u128, cap: u128 },
    #[error("point outside cover box: {0}")]
    OutsideBox(String),
    #[error("empty perturbation set at {0}")]
    EmptyPerturbation(String),
    #[error("no perturbation entry for query point {0}")]
    MissingEntry(String),
    #[error("candidate explosion: {count} candidates (cap {cap})")]
    CandidateExplosion { count: u128, cap: u128 },
    #[error("size cap exceeded: {what} = {got} (cap {cap})")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("class kind {class} unsupported by {oracle}; use {hint}")]
    UnsupportedClass {
        class: String,
        oracle: &'static str,
        hint: &'static str,
    },
    #[error("hypothesis {0} has no exact 1-d evaluation")]
    UnsupportedHypothesis(String),
    #[error("no robustly realizable labeling of the unlabeled sample")]
    NonRealizable,
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
