use super::budget::{SearchBudget, SearchStats, Tracker};
use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::trees::SpanningTree;

/// A spanning tree as bit masks: bit `e` of `edges` is edge `e` of
/// [`Graph::edges`], bit `v` of `inner` is vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TreeMask {
    pub edges: u128,
    pub inner: u128,
}

pub(crate) fn check_mask_size(g: &Graph) -> Result<()> {
    if g.n() > 128 || g.m() > 128 {
        return domain("exact search supports at most 128 vertices and 128 edges");
    }
    Ok(())
}

pub(crate) fn inner_of(g: &Graph, edges: u128) -> u128 {
    let mut deg = [0u8; 128];
    let mut rest = edges;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = g.edges()[e];
        deg[u] += 1;
        deg[v] += 1;
    }
    (0..g.n())
        .filter(|&v| deg[v] >= 2)
        .fold(0, |acc, v| acc | 1u128 << v)
}

/// Union-find with undo, union by size, no path compression.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
    }

    fn undo(&mut self) {
        let (a, b) = self.history.pop().expect("undo after union");
        self.parent[b] = b;
        self.size[a] -= self.size[b];
    }
}

struct Walker<'a> {
    g: &'a Graph,
    dsu: RollbackDsu,
    chosen: u128,
    count: usize,
    tracker: &'a Tracker,
}

impl Walker<'_> {
    /// Whether the current components stay connected using only edges `from..`.
    fn completable(&self, from: usize) -> bool {
        let n = self.g.n();
        let mut roots: Vec<usize> = (0..n).map(|v| self.dsu.find(v)).collect();
        fn find(r: &mut [usize], mut x: usize) -> usize {
            while r[x] != x {
                r[x] = r[r[x]];
                x = r[x];
            }
            x
        }
        let mut comps = (0..n).filter(|&v| roots[v] == v).count();
        for &(u, v) in &self.g.edges()[from..] {
            let (a, b) = (find(&mut roots, u), find(&mut roots, v));
            if a != b {
                roots[a] = b;
                comps -= 1;
                if comps == 1 {
                    return true;
                }
            }
        }
        comps == 1
    }

    fn walk(&mut self, e: usize, emit: &mut dyn FnMut(u128) -> Result<()>) -> Result<()> {
        let n = self.g.n();
        if self.count + 1 == n {
            self.tracker.tree()?;
            return emit(self.chosen);
        }
        if e == self.g.m() {
            return Ok(());
        }
        let (u, v) = self.g.edges()[e];
        let separate = self.dsu.find(u) != self.dsu.find(v);
        if separate {
            self.dsu.union(u, v);
            self.chosen |= 1 << e;
            self.count += 1;
            self.walk(e + 1, emit)?;
            self.count -= 1;
            self.chosen &= !(1 << e);
            self.dsu.undo();
        }
        if !separate || self.completable(e + 1) {
            self.walk(e + 1, emit)?;
        }
        Ok(())
    }
}

/// Calls `emit` with every spanning tree's edge mask in lexicographic order of
/// sorted edge lists.
pub(crate) fn each_tree_mask(
    g: &Graph,
    tracker: &Tracker,
    emit: &mut dyn FnMut(u128) -> Result<()>,
) -> Result<()> {
    check_mask_size(g)?;
    if g.n() == 0 || !g.is_connected() {
        return Ok(());
    }
    let mut w = Walker {
        g,
        dsu: RollbackDsu::new(g.n()),
        chosen: 0,
        count: 0,
        tracker,
    };
    w.walk(0, emit)
}

pub(crate) fn all_tree_masks(g: &Graph, tracker: &Tracker) -> Result<Vec<TreeMask>> {
    let mut out = Vec::new();
    each_tree_mask(g, tracker, &mut |edges| {
        out.push(TreeMask {
            edges,
            inner: inner_of(g, edges),
        });
        Ok(())
    })?;
    Ok(out)
}

pub(crate) fn mask_to_tree(g: &Graph, edges: u128) -> SpanningTree {
    let list = (0..g.m())
        .filter(|&e| edges >> e & 1 == 1)
        .map(|e| g.edges()[e]);
    SpanningTree::new(g, list.collect::<Vec<_>>()).expect("enumerated masks are spanning trees")
}

/// Every spanning tree of a connected graph exactly once, in lexicographic
/// order of sorted edge lists.
pub fn enumerate_spanning_trees(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<(Vec<SpanningTree>, SearchStats)> {
    if !g.is_connected() {
        return domain("spanning-tree enumeration needs a connected graph");
    }
    let tracker = Tracker::new(*budget);
    let mut out = Vec::new();
    each_tree_mask(g, &tracker, &mut |edges| {
        out.push(mask_to_tree(g, edges));
        Ok(())
    })?;
    Ok((out, tracker.stats()))
}

/// Number of spanning trees, counted by enumeration under the budget.
pub fn count_spanning_trees(g: &Graph, budget: &SearchBudget) -> Result<u64> {
    if !g.is_connected() {
        return domain("spanning-tree enumeration needs a connected graph");
    }
    let tracker = Tracker::new(*budget);
    let mut count = 0u64;
    each_tree_mask(g, &tracker, &mut |_| {
        count += 1;
        Ok(())
    })?;
    Ok(count)
}
