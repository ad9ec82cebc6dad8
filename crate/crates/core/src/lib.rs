//! Exact combinatorics of dual resolution graphs of normal surface singularities.
//!
//! The crate works purely with the weighted graph: intersection numbers,
//! fundamental and canonical cycles, the rational/elliptic classification,
//! elliptic sequences, and point blow-ups. All arithmetic is exact. Analytic
//! invariants (`p_g`, `q(I)`, Gorenstein-ness) are never computed; where a
//! statement depends on them they enter as caller-supplied values.
//!
//! ```
//! use resgraph_core::{catalog, lattice, classify};
//!
//! let g = catalog::laufer_chain();
//! let z = lattice::fundamental_cycle_full(&g).unwrap();
//! assert_eq!(z.coeffs(), &[1, 1, 1]);
//! assert!(classify::is_elliptic(&g).unwrap());
//! ```

pub mod blowup;
pub mod catalog;
pub mod classify;
pub mod cycle;
pub mod elliptic;
pub mod error;
pub mod graph;
mod intersection;
pub mod lattice;
pub mod linalg;
pub mod reduction;

pub use blowup::{blow_up, BlowupRecord, Center};
pub use classify::{ClassificationReport, SingularityClass};
pub use cycle::{format_rational, parse_rational, Cycle, GraphTag, QCycle};
pub use elliptic::EllipticSequence;
pub use error::{Error, Result};
pub use graph::{DualGraph, Edge, Vertex};
pub use lattice::SupportSet;
pub use reduction::{ReductionNumber, ReductionReport};
