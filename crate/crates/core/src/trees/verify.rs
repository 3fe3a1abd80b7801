use serde::Serialize;

use super::{TreeFamily, VertexPartition};
use crate::error::{domain, Result};
use crate::graph::{Edge, Graph};

/// Overlap sets of a family: shared inner vertices and shared edges.
pub fn family_overlaps(f: &TreeFamily) -> (Vec<usize>, Vec<Edge>) {
    (f.overlap_inner().to_vec(), f.overlap_edges().to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointReport {
    pub i: usize,
    pub j: usize,
    /// Every vertex inner in two or more trees.
    pub shared_inner: Vec<usize>,
    /// Every edge in two or more trees.
    pub shared_edges: Vec<Edge>,
}

impl DisjointReport {
    pub fn is_ok(&self) -> bool {
        self.shared_inner.len() <= self.i && self.shared_edges.len() <= self.j
    }
}

pub fn verify_ij_disjoint(f: &TreeFamily, i: usize, j: usize) -> DisjointReport {
    DisjointReport {
        i,
        j,
        shared_inner: f.overlap_inner().to_vec(),
        shared_edges: f.overlap_edges().to_vec(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CdsReport {
    pub size: usize,
    pub connected: bool,
    pub undominated: Vec<usize>,
    /// Listed ids that are not host vertices.
    pub unknown: Vec<usize>,
}

impl CdsReport {
    pub fn is_ok(&self) -> bool {
        self.connected && self.undominated.is_empty() && self.unknown.is_empty()
    }
}

pub fn verify_cds(g: &Graph, d: &[usize]) -> CdsReport {
    let unknown: Vec<usize> = d.iter().copied().filter(|&v| v >= g.n()).collect();
    let known: Vec<usize> = d.iter().copied().filter(|&v| v < g.n()).collect();
    CdsReport {
        size: d.len(),
        connected: g.induces_connected(&known),
        undominated: g.undominated(&known),
        unknown,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedCdsReport {
    pub l: usize,
    pub sets: Vec<CdsReport>,
    /// Union of all pairwise intersections.
    pub shared: Vec<usize>,
}

impl RootedCdsReport {
    pub fn is_ok(&self) -> bool {
        self.sets.iter().all(CdsReport::is_ok) && self.shared.len() <= self.l
    }
}

pub fn verify_rooted_cds(g: &Graph, ds: &[Vec<usize>], l: usize) -> RootedCdsReport {
    let mut count = vec![0usize; g.n()];
    for d in ds {
        let mut s: Vec<usize> = d.iter().copied().filter(|&v| v < g.n()).collect();
        s.sort_unstable();
        s.dedup();
        for v in s {
            count[v] += 1;
        }
    }
    RootedCdsReport {
        l,
        sets: ds.iter().map(|d| verify_cds(g, d)).collect(),
        shared: (0..g.n()).filter(|&v| count[v] >= 2).collect(),
    }
}

/// One connected component of a cross bipartite graph B(V_i, V_j).
#[derive(Clone, Debug)]
pub(crate) struct CrossComponent {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl CrossComponent {
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }
}

/// Components of B(a, b) restricted to vertices not in `removed`, by smallest member.
pub(crate) fn cross_components(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    removed: &[bool],
) -> Vec<CrossComponent> {
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in a {
        side[v] = 1;
    }
    for &v in b {
        side[v] = 2;
    }
    for (s, &gone) in side.iter_mut().zip(removed) {
        if gone {
            *s = 0;
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if side[s] == 0 || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] == 0 || side[w] == side[u] {
                    continue;
                }
                if u < w {
                    edges.push((u, w));
                }
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    vertices.push(w);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        out.push(CrossComponent { vertices, edges });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatedVertex {
    /// Block indices (0-based) of the cross graph.
    pub pair: (usize, usize),
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub pair: (usize, usize),
    /// Components with at least one edge that are trees; isolated vertices are
    /// reported separately.
    pub tree_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcistReport {
    pub l: usize,
    pub disconnected_blocks: Vec<usize>,
    pub isolated: Vec<IsolatedVertex>,
    pub counts: Vec<PairCount>,
    pub total: usize,
}

impl LcistReport {
    pub fn is_ok(&self) -> bool {
        self.disconnected_blocks.is_empty() && self.isolated.is_empty() && self.total <= self.l
    }

    /// Conditions (i) and (ii) alone.
    pub fn is_structurally_ok(&self) -> bool {
        self.disconnected_blocks.is_empty() && self.isolated.is_empty()
    }
}

pub fn verify_lcist(g: &Graph, p: &VertexPartition, l: usize) -> Result<LcistReport> {
    if p.root().is_some() {
        return domain("an l-CIST partition has no root block");
    }
    let blocks = p.blocks();
    let disconnected_blocks = (0..blocks.len())
        .filter(|&i| !g.induces_connected(&blocks[i]))
        .collect();
    let mut isolated = Vec::new();
    let mut counts = Vec::new();
    let mut total = 0;
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let comps = cross_components(g, &blocks[i], &blocks[j], &[]);
            let mut c = 0;
            for comp in &comps {
                if comp.vertices.len() == 1 {
                    isolated.push(IsolatedVertex {
                        pair: (i, j),
                        vertex: comp.vertices[0],
                    });
                } else if comp.is_tree() {
                    c += 1;
                }
            }
            total += c;
            counts.push(PairCount {
                pair: (i, j),
                tree_components: c,
            });
        }
    }
    Ok(LcistReport {
        l,
        disconnected_blocks,
        isolated,
        counts,
        total,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedPartitionReport {
    pub l: usize,
    pub root_size: usize,
    /// Blocks i with G[V_i ∪ A] disconnected.
    pub disconnected_blocks: Vec<usize>,
    /// Isolated vertices of B(V_i,V_j) − N(A).
    pub isolated: Vec<IsolatedVertex>,
}

impl RootedPartitionReport {
    pub fn is_ok(&self) -> bool {
        self.root_size <= self.l && self.disconnected_blocks.is_empty() && self.isolated.is_empty()
    }
}

/// An empty B(V_i,V_j) − N(A) satisfies condition (iii) vacuously.
pub fn verify_lrooted_partition(
    g: &Graph,
    p: &VertexPartition,
    l: usize,
) -> Result<RootedPartitionReport> {
    let Some(root) = p.root() else {
        return domain("an l-rooted partition needs a root block");
    };
    let blocks = p.blocks();
    let disconnected_blocks = (0..blocks.len())
        .filter(|&i| {
            let mut s = blocks[i].clone();
            s.extend_from_slice(root);
            !g.induces_connected(&s)
        })
        .collect();
    let mut removed = vec![false; g.n()];
    for v in g.neighborhood(root) {
        removed[v] = true;
    }
    let mut isolated = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            for comp in cross_components(g, &blocks[i], &blocks[j], &removed) {
                if comp.vertices.len() == 1 {
                    isolated.push(IsolatedVertex {
                        pair: (i, j),
                        vertex: comp.vertices[0],
                    });
                }
            }
        }
    }
    Ok(RootedPartitionReport {
        l,
        root_size: root.len(),
        disconnected_blocks,
        isolated,
    })
}
