//! Covering graphs by templates: recognition, certificates, exact solvers,
//! orientation bounds and explicit constructions.

pub mod classes;
pub mod construct;
pub mod cover;
pub mod error;
mod flow;
pub mod graph;
pub mod orient;
pub mod random;
pub mod report;
pub mod solver;

pub use classes::{recognize, TemplateClass};
pub use cover::{verify_cover, CoverCertificate, CoverReport, Mode};
pub use error::{Error, Result};
pub use graph::Graph;
pub use solver::{
    compute_number, compute_packing, decide_constrained_folded, decide_folded, decide_global, decide_local, Budget,
    SolveResult, Status,
};
