//! Desk-scale experiments on homogeneous trees, built on [`hometree`].
//!
//! Each experiment takes a resolved [`ExperimentConfig`] and returns an
//! [`ExperimentReport`] whose verdict is a pure function of its checks. The
//! `hometree-lab` binary wraps [`experiments::run`] and writes the report and
//! its CSV tables to disk.

pub mod config;
pub mod error;
pub mod experiments;
pub mod report;
pub mod thresholds;

pub use config::{ConfigFile, ExperimentConfig, ExperimentKind};
pub use error::{LabError, LabResult};
pub use report::{Check, ExperimentReport, Verdict};
