//! Synthetic Internet-like topologies and the structural measurements used
//! to compare them with the measured AS graph.
//!
//! * [`generators`]: fitness-weighted preferential attachment (FBA) and
//!   interactive growth (IG), both seeded and deterministic.
//! * [`metrics`]: degree CCDF and exponent fit, degree ranking, rich-club
//!   connectivity, triangle coefficients.
//! * [`robustness`]: giant-component decay under node attack.
//! * [`io`]: edge-list ingestion and CSV curves.

pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod robustness;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
