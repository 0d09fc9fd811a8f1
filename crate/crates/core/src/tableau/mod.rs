//! Partitions, updown tableaux and the statistics attached to them.

mod partition;
mod stats;
mod updown;

pub use partition::{Cell, Partition};
pub use stats::{
    diagonal_stats, exponents, h_constant, psi, standard_fusion_constant, DiagonalStats,
    RemovalPrefactor, TableauStats,
};
pub use updown::{box_content, branching_contents, enumerate_updown, Step, UpdownTableau};
