//! Exact diagram calculus for two-coloured set partitions.
//!
//! The crate covers the partition data type and its operations, the
//! decomposition of row labelings into through-block classes, symbolic
//! emission of the relations a partition induces on matrix and vector
//! generators, bounded category closures with blockstability checks, and the
//! exact linear algebra used to verify rank and dimension claims.

pub mod category;
pub mod corpus;
pub mod error;
pub mod labeling;
pub mod numerics;
pub mod partition;
pub mod relations;

pub use error::{Error, Result};
pub use partition::{compose, Block, Colour, Partition, Rotation, Row};
