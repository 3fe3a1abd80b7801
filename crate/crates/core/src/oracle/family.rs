use rayon::prelude::*;

use super::budget::{SearchBudget, SearchStats, Tracker};
use super::domatic::gamma_c;
use super::enumerate::{all_tree_masks, check_mask_size, mask_to_tree, TreeMask};
use crate::bounds::edge_lower_bound;
use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::trees::TreeFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyOptions {
    /// Refute at once when the edge count is below the necessary bound.
    pub prune: bool,
    /// Require pairwise distinct trees.
    pub distinct: bool,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            prune: true,
            distinct: false,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Existence {
    Witness(TreeFamily),
    Refuted,
}

impl Existence {
    pub fn witness(&self) -> Option<&TreeFamily> {
        match self {
            Existence::Witness(f) => Some(f),
            Existence::Refuted => None,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Existence::Witness(_))
    }
}

/// Overlap bookkeeping of a partial tuple: vertices inner in one or more
/// (`seen_*`) and in two or more (`shared_*`) chosen trees.
#[derive(Clone, Copy, Default)]
struct Overlap {
    seen_inner: u128,
    shared_inner: u128,
    seen_edges: u128,
    shared_edges: u128,
}

impl Overlap {
    fn add(&self, t: &TreeMask) -> Overlap {
        Overlap {
            shared_inner: self.shared_inner | (self.seen_inner & t.inner),
            seen_inner: self.seen_inner | t.inner,
            shared_edges: self.shared_edges | (self.seen_edges & t.edges),
            seen_edges: self.seen_edges | t.edges,
        }
    }

    fn within(&self, i: usize, j: usize) -> bool {
        self.shared_inner.count_ones() as usize <= i && self.shared_edges.count_ones() as usize <= j
    }
}

/// Min-cost spanning tree of G[W] with 0/1 edge costs, each vertex of `leaves`
/// hung from W. Returns (cost, edge mask) or `None` when impossible.
fn cheapest_completion(g: &Graph, w: u128, leaves: u128, costly: u128) -> Option<(usize, u128)> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = w.count_ones() as usize;
    let mut mask = 0u128;
    let mut cost = 0;
    for pass in [false, true] {
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if (costly >> e & 1 == 1) != pass || w >> u & 1 == 0 || w >> v & 1 == 0 {
                continue;
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
                mask |= 1 << e;
                cost += usize::from(pass);
            }
        }
    }
    if comps != 1 {
        return None;
    }
    let mut rest = leaves;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut pick: Option<(bool, usize)> = None;
        for &y in g.neighbors(x) {
            if w >> y & 1 == 0 {
                continue;
            }
            let e = g.edge_index(x, y).expect("neighbor edge exists");
            let is_costly = costly >> e & 1 == 1;
            if pick.is_none_or(|(c, _)| c && !is_costly) {
                pick = Some((is_costly, e));
            }
        }
        let (c, e) = pick?;
        cost += usize::from(c);
        mask |= 1 << e;
    }
    Some((cost, mask))
}

/// Whether some spanning tree can join the partial tuple within (i, j).
fn complete(g: &Graph, ov: &Overlap, i: usize, j: usize) -> Option<u128> {
    let n = g.n();
    let i_left = i.checked_sub(ov.shared_inner.count_ones() as usize)?;
    let j_left = j.checked_sub(ov.shared_edges.count_ones() as usize)?;
    let candidates = ov.seen_inner & !ov.shared_inner;
    let costly = ov.seen_edges & !ov.shared_edges;
    let all: u128 = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let cand: Vec<usize> = (0..n).filter(|&v| candidates >> v & 1 == 1).collect();
    let allowed = i_left.min(cand.len());
    // a larger allowed set only relaxes the leaf constraints
    let mut pick: Vec<usize> = (0..allowed).collect();
    loop {
        let chosen = pick.iter().fold(0u128, |acc, &p| acc | 1u128 << cand[p]);
        let leaves = candidates & !chosen;
        let w = all & !leaves;
        if w != 0 {
            if let Some((cost, mask)) = cheapest_completion(g, w, leaves, costly) {
                if cost <= j_left {
                    return Some(mask);
                }
            }
        }
        // next combination of `allowed` out of cand.len()
        let k = allowed;
        let top = cand.len();
        let pos = (0..k).rev().find(|&p| pick[p] < top - k + p)?;
        pick[pos] += 1;
        for q in pos + 1..k {
            pick[q] = pick[q - 1] + 1;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    trees: &'a [TreeMask],
    k: usize,
    i: usize,
    j: usize,
    distinct: bool,
    tracker: &'a Tracker,
}

impl Search<'_> {
    /// Depth-first over nondecreasing tree indices; returns the chosen edge masks.
    fn dfs(&self, chosen: &mut Vec<usize>, ov: Overlap) -> Result<Option<Vec<u128>>> {
        let depth = chosen.len();
        let last = *chosen.last().expect("called with a first tree");
        if depth + 1 == self.k && !self.distinct && self.g.n() >= 3 {
            self.tracker.tuple()?;
            return Ok(complete(self.g, &ov, self.i, self.j).map(|m| {
                let mut out: Vec<u128> = chosen.iter().map(|&t| self.trees[t].edges).collect();
                out.push(m);
                out
            }));
        }
        let start = if self.distinct { last + 1 } else { last };
        for t in start..self.trees.len() {
            self.tracker.tuple()?;
            let next = ov.add(&self.trees[t]);
            if !next.within(self.i, self.j) {
                continue;
            }
            chosen.push(t);
            let found = if depth + 1 == self.k {
                Some(chosen.iter().map(|&x| self.trees[x].edges).collect())
            } else {
                self.dfs(chosen, next)?
            };
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Decides whether `g` has `k` (i,j)-disjoint spanning trees.
///
/// Duplicate trees are allowed unless `opts.distinct`. The first `k-1` trees
/// are searched exhaustively; the last is decided exactly by a 0/1 minimum
/// spanning tree over each admissible choice of new shared inner vertices.
pub fn exists_family(
    g: &Graph,
    k: usize,
    i: usize,
    j: usize,
    opts: FamilyOptions,
    budget: &SearchBudget,
) -> Result<(Existence, SearchStats)> {
    if k < 2 {
        return domain("family search needs k >= 2");
    }
    check_mask_size(g)?;
    let tracker = Tracker::new(*budget);
    if opts.prune && g.n() >= 2 && g.m() < edge_lower_bound(g.n(), k, i, j) {
        return Ok((Existence::Refuted, tracker.stats()));
    }
    let trees = all_tree_masks(g, &tracker)?;
    let search = Search {
        g,
        trees: &trees,
        k,
        i,
        j,
        distinct: opts.distinct,
        tracker: &tracker,
    };
    let found: Option<Result<Vec<u128>>> = (0..trees.len()).into_par_iter().find_map_first(|t| {
        let ov = Overlap::default().add(&trees[t]);
        match search.dfs(&mut vec![t], ov) {
            Ok(Some(masks)) => Some(Ok(masks)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let verdict = match found {
        None => Existence::Refuted,
        Some(Err(e)) => return Err(e),
        Some(Ok(masks)) => {
            let family = TreeFamily::new(masks.iter().map(|&m| mask_to_tree(g, m)).collect())?;
            debug_assert!(family.overlap_inner().len() <= i && family.overlap_edges().len() <= j);
            Existence::Witness(family)
        }
    };
    Ok((verdict, tracker.stats()))
}

#[derive(Clone, Debug)]
pub enum DstValue {
    /// Largest k with a witness, together with that witness (`None` for k = 1).
    Finite(usize, Option<TreeFamily>),
    Unbounded,
}

/// dst_{i,j}(g) up to `k_max` (unlimited when `None`).
///
/// Unbounded when i ≥ γ_c and j ≥ n−1. Otherwise the search stops at the
/// first refuted k, capped by the edge bound when j < n−1 and by n otherwise.
pub fn dst_value(
    g: &Graph,
    i: usize,
    j: usize,
    k_max: Option<usize>,
    opts: FamilyOptions,
    budget: &SearchBudget,
) -> Result<(DstValue, SearchStats)> {
    if k_max.is_some_and(|k| k < 2) {
        return domain("dst search needs k_max >= 2");
    }
    if !g.is_connected() {
        return domain("dst search needs a connected graph");
    }
    let n = g.n();
    let gamma = gamma_c(g)?;
    if i >= gamma && j + 1 >= n {
        return Ok((DstValue::Unbounded, SearchStats::default()));
    }
    let cap = if j + 1 < n {
        (1..)
            .take_while(|&k| edge_lower_bound(n, k, i, j) <= g.m())
            .last()
            .unwrap_or(1)
    } else {
        n
    };
    let cap = k_max.map_or(cap, |k| k.min(cap));
    let mut best = DstValue::Finite(1, None);
    let mut total = SearchStats::default();
    for k in 2..=cap {
        let (res, stats) = exists_family(g, k, i, j, opts, budget)?;
        total.trees += stats.trees;
        total.tuples += stats.tuples;
        total.seconds += stats.seconds;
        match res {
            Existence::Witness(f) => best = DstValue::Finite(k, Some(f)),
            Existence::Refuted => break,
        }
    }
    Ok((best, total))
}

impl From<DstValue> for Option<usize> {
    fn from(v: DstValue) -> Self {
        match v {
            DstValue::Finite(k, _) => Some(k),
            DstValue::Unbounded => None,
        }
    }
}
