//! Generic initial ideals of complete intersections in three variables.

pub mod error;
pub mod gin;
pub mod hilbert;
pub mod lefschetz;
pub mod monomial;
pub mod oracle;
pub mod reference;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
