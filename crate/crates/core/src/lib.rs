//! Exact symbolic computation with skew Schur functions, fat staircases and
//! sums of fat staircases.
//!
//! The building blocks are [`Partition`], [`SkewDiagram`] and
//! [`SchurExpansion`]; [`staircase`] holds the classification and
//! Schur-positivity checks built on top of them.

pub mod enumerate;
pub mod error;
pub mod exec;
pub mod report;
pub mod ring;
pub mod shape;
pub mod staircase;
pub mod sweep;
pub mod tableau;

pub use error::{Error, Result};
pub use exec::Execution;
pub use ring::{pieri_col, pieri_row, schur_product, schur_product_with, skew_schur, SchurExpansion};
pub use shape::{
    delta, delta_rotated, foundation_values, reverse_composition, with_foundation, Composition,
    FatStaircase, FoundationValues, Orientation, Partition, SkewDiagram, WeakComposition,
};
pub use tableau::{lattice_fillings, lr_coefficient, LatticeFillings, ReadingWord, Tableau};
