//! Exact LP feasibility for line transversals to box families, Helly
//! verification, and the global any-sign solver.

mod few_vars;
pub mod grunbaum;
pub mod helly;
pub mod lp;
pub mod solver;

pub use grunbaum::{grunbaum_search, verify_grunbaum, verify_sharpness};
pub use helly::{helly_check, HellyMode, HellyReport, SubsetStrategy};
pub use lp::{lp_feasible, lp_maximize, lp_maximize_past, Constraint, LpOutcome, LpProblem, Relation};
pub use solver::{
    ascending_transversal, combinations, santalo_transversal, separation_cycle,
    sign_transversal, support_order, InfeasibilityEvidence, SignOutcome,
    TransversalCertificate,
};
