//! Fibonacci (p,r)-cubes.
//!
//! Two families of hypercube subgraphs on binary words of length `n`:
//!
//! * **O** (original): vertices are the codes of the Fibonacci
//!   (p,r)-numeration system, i.e. the integers `0..phi(p, r, n + p)`.
//! * **I** (imitative): words whose 1-blocks have length at most `r` and whose
//!   internal 0-blocks have length at least `p`.
//!
//! Two words are adjacent when they differ in exactly one position. This crate
//! enumerates both families, computes their invariants exactly by brute force
//! and evaluates the closed-form expressions for radius, center, diameter and
//! degrees so the two can be compared.
//!
//! ```
//! use fibcube_core::{build_graph, formulas, invariants, CubeParams};
//!
//! let params = CubeParams::o(2, 2, 7).unwrap();
//! let g = build_graph(&params, 10_000).unwrap();
//! let inv = invariants(&g, false);
//! assert_eq!(inv.radius, formulas::radius_o(2, 2, 7));
//! assert_eq!(inv.diameter, formulas::diameter_o(2, 2, 7));
//! ```

#![no_std]

extern crate alloc;

pub mod barrier;
pub mod connectivity;
mod error;
pub mod formulas;
pub mod graph;
pub mod iso;
pub mod numsys;
pub mod word;

pub use barrier::{find_distance_barriers, Barrier};
pub use connectivity::vertex_connectivity;
pub use error::Error;
pub use graph::{build_graph, invariants, CubeGraph, InvariantBundle, DEFAULT_VERTEX_BUDGET};
pub use iso::{are_isomorphic, find_isomorphism, DEFAULT_ISO_BUDGET};
pub use numsys::{
    decode, encode, enumerate_vertices, is_valid_word, order_estimate, phi, recursive_vertex_set,
    PhiTable,
};
pub use word::{CubeParams, Family, Word};
