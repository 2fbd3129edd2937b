//! Exact computational geometry of the H4 polytopes.
//!
//! The 600-cell is built from the 120 icosians over Z[φ]; its inscribed
//! 16-, 8- and 24-cells, Schoute's ten partitions, the duad labels, the
//! symmetry group of order 14,400, embeddings into E8 by norm reduction and
//! the F4 geometry on E8/2E8 are all computed with exact arithmetic.

pub mod embed;
pub mod error;
pub mod golden;
pub mod icosian;
pub mod mod2;
pub mod polytopes;
pub mod symmetry;

pub use error::{Error, Result};
