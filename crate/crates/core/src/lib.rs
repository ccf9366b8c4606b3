//! Stable systoles, real cup-length and stable systolic category, computed exactly on
//! finite weighted cell complexes.
//!
//! Metrics are piecewise linear: each cell carries a positive rational volume. Homology
//! comes from Smith normal form, stable norms from an exact rational simplex solver, and
//! category bounds from partition combinatorics over symbolic dimension profiles.

pub mod category;
pub mod cohomology;
pub mod complex;
pub mod deformation;
pub mod error;
pub mod format;
pub mod homology;
pub mod library;
pub mod lp;
pub mod maps;
pub mod matrix;
pub mod rational;
pub mod snf;
pub mod stable_norm;

pub use complex::{mass, Cell, CellKind, Chain, DeformationFamily, Scaling, WeightedCellComplex};
pub use error::{Error, Result};
pub use homology::{homology, HomologyClass, HomologySummary};
pub use rational::Rational;
