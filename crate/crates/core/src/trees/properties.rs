//! Structural properties every tree family of the right kind must satisfy.
//!
//! Each checker returns human-readable violations; an empty list means the
//! property holds. Checks apply to hosts with at least three vertices.

use super::TreeFamily;
use crate::graph::{Edge, Graph};

/// For internally disjoint families: every edge lies in at most two trees;
/// tree paths between non-adjacent vertices are edge-disjoint; and tree paths
/// sharing an edge never join two inner vertices of either tree.
#[allow(clippy::needless_range_loop)]
pub fn internally_disjoint_path_violations(g: &Graph, f: &TreeFamily) -> Vec<String> {
    let mut out = Vec::new();
    if g.n() < 3 || !f.overlap_inner().is_empty() {
        return out;
    }
    for &e in g.edges() {
        let c = f
            .trees()
            .iter()
            .filter(|t| t.contains_edge(e.0, e.1))
            .count();
        if c > 2 {
            out.push(format!("edge {e:?} lies in {c} trees"));
        }
    }
    let n = g.n();
    let paths: Vec<Vec<Vec<Vec<Edge>>>> = f
        .trees()
        .iter()
        .map(|t| {
            (0..n)
                .map(|u| {
                    (0..n)
                        .map(|v| {
                            let mut p = if u < v {
                                t.path_edges(u, v)
                            } else {
                                Vec::new()
                            };
                            p.sort_unstable();
                            p
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            for a in 0..f.k() {
                for b in a + 1..f.k() {
                    let (pa, pb) = (&paths[a][u][v], &paths[b][u][v]);
                    let meet = pa.iter().any(|e| pb.binary_search(e).is_ok());
                    if !meet {
                        continue;
                    }
                    if !g.has_edge(u, v) {
                        out.push(format!(
                            "non-adjacent {u},{v}: paths in T{a} and T{b} share an edge"
                        ));
                    }
                    for t in [a, b] {
                        let tree = &f.trees()[t];
                        if tree.is_inner(u) && tree.is_inner(v) {
                            out.push(format!(
                                "{u},{v} inner in T{t} while paths in T{a}, T{b} share an edge"
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every vertex outside I(T) has a neighbor in I(T); with diameter at least
/// three every vertex does.
pub fn inner_neighbor_violations(g: &Graph, f: &TreeFamily) -> Vec<String> {
    let mut out = Vec::new();
    if g.n() < 3 {
        return out;
    }
    let far = crate::graph::structure(g).diameter.is_some_and(|d| d >= 3);
    for (idx, t) in f.trees().iter().enumerate() {
        for u in 0..g.n() {
            let has = g.neighbors(u).iter().any(|&w| t.is_inner(w));
            if !has && (!t.is_inner(u) || far) {
                out.push(format!("vertex {u} has no neighbor in I(T{idx})"));
            }
        }
    }
    out
}
