//! Explicit families for the graph classes where the extremal answer is known.

mod base;
mod complete;
mod cylinder;
mod grid;
mod interval;
mod square;

pub use base::{base_cds, BaseGraph};
pub use complete::{complete_0l, complete_1l, dst_0l_complete, dst_1l_complete};
pub use cylinder::cylinder_trees;
pub use grid::{grid_rooted_cds, GridCds};
pub use interval::interval_cds;
pub use square::square_trees;
