//! Hyper Zagreb index of generalized thorn graphs.
//!
//! The crate is split along the pipeline it implements:
//!
//! * [`graph`] holds the simple-graph value type, the base families and
//!   edge-list / DOT serialization.
//! * [`indices`] computes degree-based indices straight from their defining
//!   sums. These values are the ground truth for everything else.
//! * [`thorn`] builds the seven generalized thorn graphs.
//! * [`formulas`] evaluates each printed closed form for the hyper Zagreb
//!   index of those graphs, exactly as printed.
//! * [`audit`] sweeps parameter grids and compares the two.

/// Serde support through a type's `Display` / `FromStr` text form.
macro_rules! serde_as_str {
    ($ty:ty) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(
                &self,
                ser: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                ser.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(
                de: D,
            ) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(de)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

pub mod audit;
pub mod base;
mod error;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod thorn;

pub use error::{Error, Result};
pub use graph::Graph;
pub use indices::IndexKind;
pub use thorn::{DecoratedGraph, ThornCounts, ThornSpec, ThornType};

/// Crate version string, including the formula registry fingerprint.
pub fn version_string() -> String {
    format!(
        "{} (formula registry {})",
        env!("CARGO_PKG_VERSION"),
        formulas::registry_hash()
    )
}
