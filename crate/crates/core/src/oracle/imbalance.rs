use super::budget::{SearchBudget, SearchStats, Tracker};
use super::domatic::all_cds_masks;
use super::enumerate::all_tree_masks;
use crate::error::{domain, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImbalanceMode {
    /// Disjoint connected dominating set pairs, by set sizes.
    CdsPair,
    /// Completely independent tree pairs, by inner-set sizes.
    CistPair,
}

/// Smallest size difference over all valid pairs; `None` when no pair exists.
pub fn min_imbalance(
    g: &Graph,
    mode: ImbalanceMode,
    budget: &SearchBudget,
) -> Result<(Option<usize>, SearchStats)> {
    if !g.is_connected() {
        return domain("imbalance search needs a connected graph");
    }
    let tracker = Tracker::new(*budget);
    let best = match mode {
        ImbalanceMode::CdsPair => {
            let sets = all_cds_masks(g, &tracker)?;
            let mut best: Option<usize> = None;
            for (x, &a) in sets.iter().enumerate() {
                tracker.tuple()?;
                for &b in &sets[x + 1..] {
                    if a & b == 0 {
                        let d = a.count_ones().abs_diff(b.count_ones()) as usize;
                        best = Some(best.map_or(d, |c| c.min(d)));
                    }
                }
            }
            best
        }
        ImbalanceMode::CistPair => {
            let trees = all_tree_masks(g, &tracker)?;
            let mut best: Option<usize> = None;
            for (x, a) in trees.iter().enumerate() {
                tracker.tuple()?;
                for b in &trees[x..] {
                    if a.edges & b.edges == 0 && a.inner & b.inner == 0 {
                        let d = a.inner.count_ones().abs_diff(b.inner.count_ones()) as usize;
                        best = Some(best.map_or(d, |c| c.min(d)));
                    }
                }
                if best == Some(0) {
                    break;
                }
            }
            best
        }
    };
    Ok((best, tracker.stats()))
}
