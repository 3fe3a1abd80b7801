//! Spanning trees, tree families, vertex partitions and their verifiers.

mod cert;
mod convert;
pub mod properties;
mod verify;

pub use cert::{CdsCert, FamilyCert, PartitionCert};
pub use convert::{pair_from_rooted_cds, partition_from_family, trees_from_cds, trees_from_lcist};
pub use verify::{
    family_overlaps, verify_cds, verify_ij_disjoint, verify_lcist, verify_lrooted_partition,
    verify_rooted_cds, CdsReport, DisjointReport, LcistReport, RootedCdsReport,
    RootedPartitionReport,
};

use std::collections::VecDeque;

use crate::error::{domain, Error, Result};
use crate::graph::{key, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    host: String,
    edges: Vec<Edge>,
    degree: Vec<usize>,
    inner: Vec<usize>,
}

impl SpanningTree {
    /// Validates that `edges` are host edges forming a spanning tree.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<SpanningTree> {
        let n = g.n();
        let mut list: Vec<Edge> = edges.into_iter().map(|(u, v)| key(u, v)).collect();
        list.sort_unstable();
        list.dedup();
        if let Some(&(u, v)) = list.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidCertificate(format!(
                "({u},{v}) is not a host edge"
            )));
        }
        if n == 0 || list.len() + 1 != n {
            return Err(Error::InvalidCertificate(format!(
                "a spanning tree on {n} vertices needs {} edges, got {}",
                n.saturating_sub(1),
                list.len()
            )));
        }
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(d: &mut [usize], mut x: usize) -> usize {
            while d[x] != x {
                d[x] = d[d[x]];
                x = d[x];
            }
            x
        }
        for &(u, v) in &list {
            let (a, b) = (find(&mut dsu, u), find(&mut dsu, v));
            if a == b {
                return Err(Error::InvalidCertificate(format!(
                    "edge ({u},{v}) closes a cycle"
                )));
            }
            dsu[a] = b;
        }
        let mut degree = vec![0; n];
        for &(u, v) in &list {
            degree[u] += 1;
            degree[v] += 1;
        }
        let inner = (0..n).filter(|&v| degree[v] >= 2).collect();
        Ok(SpanningTree {
            host: g.fingerprint().to_string(),
            edges: list,
            degree,
            inner,
        })
    }

    pub fn host(&self) -> &str {
        &self.host
    }

    pub fn n(&self) -> usize {
        self.degree.len()
    }

    /// Sorted canonical edges.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&key(u, v)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// I(T): vertices of tree degree at least two, sorted.
    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn is_inner(&self, v: usize) -> bool {
        self.degree[v] >= 2
    }

    /// Vertices of the unique u-v path, starting at `u`.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![usize::MAX; n];
        parent[v] = v;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut out = vec![u];
        let mut x = u;
        while x != v {
            x = parent[x];
            out.push(x);
        }
        out
    }

    /// Edges of the unique u-v path, as canonical keys.
    pub fn path_edges(&self, u: usize, v: usize) -> Vec<Edge> {
        let p = self.path(u, v);
        p.windows(2).map(|w| key(w[0], w[1])).collect()
    }
}

/// Ordered spanning trees of one host with their cached overlaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeFamily {
    trees: Vec<SpanningTree>,
    overlap_inner: Vec<usize>,
    overlap_edges: Vec<Edge>,
}

impl TreeFamily {
    /// Fails with a domain error when the trees come from different hosts.
    pub fn new(trees: Vec<SpanningTree>) -> Result<TreeFamily> {
        if trees.is_empty() {
            return domain("a tree family needs at least one tree");
        }
        if trees.iter().any(|t| t.host != trees[0].host) {
            return domain("trees of a family must share one host graph");
        }
        let (overlap_inner, overlap_edges) = compute_overlaps(&trees);
        Ok(TreeFamily {
            trees,
            overlap_inner,
            overlap_edges,
        })
    }

    /// Builds each tree from its edge list over `g`.
    pub fn from_edge_lists(g: &Graph, lists: Vec<Vec<Edge>>) -> Result<TreeFamily> {
        let trees = lists
            .into_iter()
            .map(|edges| SpanningTree::new(g, edges))
            .collect::<Result<Vec<_>>>()?;
        TreeFamily::new(trees)
    }

    pub fn k(&self) -> usize {
        self.trees.len()
    }

    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    pub fn host(&self) -> &str {
        self.trees[0].host()
    }

    /// I(T_1..T_k): vertices inner in at least two trees.
    pub fn overlap_inner(&self) -> &[usize] {
        &self.overlap_inner
    }

    /// E(T_1..T_k): edges in at least two trees.
    pub fn overlap_edges(&self) -> &[Edge] {
        &self.overlap_edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<Edge>> {
        self.trees.iter().map(|t| t.edges.clone()).collect()
    }
}

pub(crate) fn compute_overlaps(trees: &[SpanningTree]) -> (Vec<usize>, Vec<Edge>) {
    let n = trees.first().map_or(0, SpanningTree::n);
    let mut inner_count = vec![0usize; n];
    let mut edge_count: std::collections::BTreeMap<Edge, usize> = Default::default();
    for t in trees {
        for &v in &t.inner {
            inner_count[v] += 1;
        }
        for &e in &t.edges {
            *edge_count.entry(e).or_default() += 1;
        }
    }
    let inner = (0..n).filter(|&v| inner_count[v] >= 2).collect();
    let edges = edge_count
        .into_iter()
        .filter(|&(_, c)| c >= 2)
        .map(|(e, _)| e)
        .collect();
    (inner, edges)
}

/// Disjoint blocks covering `0..n`, with an optional root block A kept last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    root: Option<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, root: Option<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        let mut root = root;
        for b in blocks.iter_mut().chain(root.iter_mut()) {
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n {
                    return domain(format!("partition names vertex {v} outside 0..{n}"));
                }
                if seen[v] {
                    return domain(format!("vertex {v} lies in two blocks"));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return domain(format!("vertex {v} is in no block"));
        }
        Ok(VertexPartition { blocks, root })
    }

    /// V_1..V_k, excluding the root block.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn root(&self) -> Option<&[usize]> {
        self.root.as_deref()
    }

    pub fn rooted_size(&self) -> Option<usize> {
        self.root.as_ref().map(Vec::len)
    }
}
