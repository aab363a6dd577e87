//! Exact and floating-point linear algebra around the maps `T_p`.

pub mod colinearity;
pub mod elements;
pub mod fusion;
pub mod matrix;
pub mod separation;
pub mod suites;
pub mod tp;

pub use colinearity::{colinearity_bound, ColinearityBound};
pub use elements::{make_element, ConcreteElement, ElementClass, ElementParams, Entries};
pub use fusion::{fusion_report, projective_lattice, FusionCase, FusionReport, ProjectiveLattice};
pub use matrix::{subspace_join_rank, ExactMatrix};
pub use separation::{separation_report, SeparationReport};
pub use suites::{run_suite, Suite, SuiteConfig, SuiteOutcome};
pub use tp::{check_intertwiner, tp_matrix, TpMatrix};
