//! Exact line transversals to axis-parallel boxes in `R^d`.
//!
//! The key fact this crate is built around: in suitable coordinates — the
//! Cremona chart `y_i = x_i/v_i`, `w_i = 1/v_i` on the Grassmannian of
//! lines — the weakly ascending lines meeting a fixed box form a convex
//! set. Meeting constraints become linear, transversal search becomes
//! exact rational LP feasibility, and the classical Helly-type theorems
//! (`2d - 1` boxes per direction class for lines, `d + 1` for hyperplanes)
//! fall out of Helly's theorem in `R^{2d-2}`.
//!
//! Modules:
//! - [`geometry`]: boxes, lines, sign classes, exact meet predicates.
//! - [`cremona`]: the chart, its inverse, and Cremona-convex combinations.
//! - [`pluecker`]: Plücker coordinates, the linearizing Cremona
//!   transformation on Plücker space, `LG(d)`, indeterminacy classification.
//! - [`transversal`]: exact LP kernel, transversal solvers, Helly checks,
//!   and the sharpness-instance search.
//! - [`span`]: Cremona-affine spans of line families, determinantal scroll
//!   geometry, quadric cones of meeting lines, frame-convex hulls.
//! - [`dual_flats`]: ascending hyperplane transversals and the dual
//!   `(d-2)`-flat theory.
//! - [`oracles`]: independent brute-force cross-checks, shipped so the CLI
//!   can verify every certificate it prints.
//!
//! Everything is exact: no floating point participates in any decision.

pub mod cremona;
pub mod dual_flats;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod oracles;
pub mod pluecker;
pub mod rat;
pub mod sampling;
pub mod span;
pub mod transversal;

pub use error::{Error, Result};
pub use geometry::{BoxRd, RectLine, SignClass, VecD};
pub use rat::Rat;
