//! Finite 2-categories and double categories, weak horizontal invertibility,
//! lifting properties, oriental shapes, and the nerve of a double category
//! computed level by level.

// Cell tables are indexed by cell number throughout.
#![allow(clippy::needless_range_loop)]

pub mod cat;
pub mod cli;
pub mod corpus;
pub mod dbl;
pub mod error;
pub mod interchange;
pub mod nerve;
pub mod present;
pub mod shapes;
mod table;
pub mod two;

pub use error::{Error, Result};

/// A yes/no answer with the first failing datum when the answer is no.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }
    pub fn fail(witness: impl Into<String>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness.into()),
        }
    }
}
