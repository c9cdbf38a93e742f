//! Verification harness for Fibonacci `(p, r)`-cubes: a registry of claims
//! checked against brute force over a parameter grid, a persistent cache of
//! oracle values, graph exports and tables.
//!
//! ```
//! use fibcube::{cache::Cache, grid::{run_grid, GridSpec}};
//!
//! let spec = GridSpec {
//!     p: 2..=2,
//!     r: 2..=2,
//!     n: 1..=6,
//!     fixtures: false,
//!     ..GridSpec::default()
//! }
//! .with_claims(&["diameter-o", "order-o"])?;
//! let report = run_grid(&spec, &Cache::in_memory())?;
//! assert!(report.passed());
//! # Ok::<(), fibcube::Error>(())
//! ```

pub mod cache;
pub mod claims;
mod error;
pub mod export;
pub mod grid;
pub mod oracle;
pub mod probes;
pub mod register;
pub mod report;
pub mod table;

pub use error::{Error, Result};
