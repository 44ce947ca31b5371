//! Exhaustive enumeration, a registry of extremal-ordering checks, and report
//! emitters on top of the `hyperspectra` core.

pub mod canon;
pub mod commands;
pub mod enumerate;
pub mod error;
pub mod registry;
pub mod report;

pub use error::{Result, VerifyError};
