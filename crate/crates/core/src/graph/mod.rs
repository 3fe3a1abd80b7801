//! Undirected simple graphs on dense vertex ids `0..n`.

mod catalog;
mod clique_path;
mod generate;
mod io;
mod iso;
mod structure;

pub use catalog::connected_graphs;
pub use clique_path::{interval_graph, CliquePath};
pub use generate::{
    cartesian_product, clique_blowup, complete, complete_bipartite, cycle, cylinder, generate,
    glued_cliques, grid, kriesell, path, pn_plus, pn_star, square, star, Blowup, Family, Hub,
};
pub use io::{parse_edge_list, to_dot, to_edge_list};
pub use iso::{canonical_code, find_isomorphism, is_isomorphic};
pub use structure::{bridges_and_articulations, structure, StructureReport};

use std::collections::VecDeque;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{domain, Result};

/// Canonical edge key with `u < v`.
pub type Edge = (usize, usize);

pub fn key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    fingerprint: OnceLock<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj.len() == other.adj.len() && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            fingerprint: OnceLock::new(),
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return domain(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return domain(format!("self-loop at vertex {u}"));
            }
            list.push(key(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return domain(format!("duplicate edge ({},{})", w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges: list,
            fingerprint: OnceLock::new(),
        })
    }

    /// Like [`Graph::from_edges`] but merges repeated edges instead of failing.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list: Vec<Edge> = edges.into_iter().map(|(u, v)| key(u, v)).collect();
        list.sort_unstable();
        list.dedup();
        Graph::from_edges(n, list)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted canonical edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&key(u, v)).ok()
    }

    /// Hex SHA-256 of the edge-list serialization; identifies the host of a certificate.
    pub fn fingerprint(&self) -> &str {
        self.fingerprint.get_or_init(|| {
            let digest = Sha256::digest(to_edge_list(self).as_bytes());
            digest.iter().map(|b| format!("{b:02x}")).collect()
        })
    }

    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Whether the subgraph induced by `set` is connected; the empty set is not.
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let Some(&start) = set.first() else {
            return false;
        };
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        count == distinct
    }

    /// Whether every vertex outside `set` has a neighbor in it.
    pub fn dominates(&self, set: &[usize]) -> bool {
        self.undominated(set).is_empty()
    }

    pub fn undominated(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        (0..self.n())
            .filter(|&v| !inside[v] && !self.adj[v].iter().any(|&w| inside[w]))
            .collect()
    }

    /// Open neighborhood N(A): vertices outside `set` adjacent to it.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        (0..self.n())
            .filter(|&v| !inside[v] && self.adj[v].iter().any(|&w| inside[w]))
            .collect()
    }

    /// Induced subgraph on `set` (sorted ids relabelled to `0..`) with the id map.
    pub fn induced(&self, set: &[usize]) -> (Graph, Vec<usize>) {
        let mut ids: Vec<usize> = set.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        let g = Graph::from_edges(ids.len(), edges).expect("induced subgraph of a simple graph");
        (g, ids)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let e = key(u, v);
        Graph::from_edges(self.n(), self.edges.iter().copied().filter(|&f| f != e))
            .expect("edge removal keeps the graph simple")
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// BFS spanning tree edges of the subgraph induced by `set`, rooted at its lowest id.
    pub fn bfs_tree_edges(&self, set: &[usize]) -> Vec<Edge> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let Some(root) = (0..self.n()).find(|&v| inside[v]) else {
            return Vec::new();
        };
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut edges = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    edges.push(key(u, w));
                    queue.push_back(w);
                }
            }
        }
        edges
    }
}
