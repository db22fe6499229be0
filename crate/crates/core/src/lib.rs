//! Exact computations with transversely generalized complex structures on
//! Lie-algebra models of foliations.

pub mod canonical;
pub mod corpus;
pub mod expr;
pub mod exterior;
pub mod generalized;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod model_file;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod symplectic;
