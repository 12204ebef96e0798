//! Partitions, compositions and skew diagram geometry.

pub mod diagram;
pub mod fat;
pub mod partition;

pub use diagram::SkewDiagram;
pub use fat::{
    delta, delta_rotated, foundation_values, reverse_composition, with_foundation, FatStaircase,
    FoundationValues, Orientation,
};
pub use partition::{Composition, Partition, WeakComposition};

/// Largest accepted diagram, in boxes.
pub const MAX_BOXES: usize = 1_000_000;
