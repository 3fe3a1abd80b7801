//! Exhaustive ground truth for small graphs.
//!
//! Every search runs under a [`SearchBudget`] and fails with
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) rather than
//! returning a truncated answer. Vertex and edge sets are `u128` masks, so
//! instances are limited to 128 vertices and 128 edges.

mod budget;
mod domatic;
mod enumerate;
mod family;
mod imbalance;

pub use budget::{SearchBudget, SearchStats};
pub use domatic::{connected_domatic, gamma_c};
pub use enumerate::{count_spanning_trees, enumerate_spanning_trees};
pub use family::{dst_value, exists_family, DstValue, Existence, FamilyOptions};
pub use imbalance::{min_imbalance, ImbalanceMode};
