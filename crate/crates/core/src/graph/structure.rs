use serde::Serialize;

use super::{key, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub components: Vec<Vec<usize>>,
    pub articulation_vertices: Vec<usize>,
    pub bridges: Vec<Edge>,
    pub min_degree: usize,
    /// `None` when the graph is disconnected or empty.
    pub diameter: Option<usize>,
    /// Articulation vertices incident to no bridge.
    pub a: usize,
    /// Number of bridges.
    pub b: usize,
}

/// Articulation vertices and bridges by iterative low-link DFS, both sorted.
pub fn bridges_and_articulations(g: &Graph) -> (Vec<usize>, Vec<Edge>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, parent, pos) = *top;
            if pos < g.degree(u) {
                top.2 += 1;
                let w = g.neighbors(u)[pos];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        bridges.push(key(parent, u));
                    }
                    if parent != root && low[u] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    bridges.sort_unstable();
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (cuts, bridges)
}

pub fn structure(g: &Graph) -> StructureReport {
    let components = g.components();
    let (articulation_vertices, bridges) = bridges_and_articulations(g);
    let mut on_bridge = vec![false; g.n()];
    for &(u, v) in &bridges {
        on_bridge[u] = true;
        on_bridge[v] = true;
    }
    let a = articulation_vertices
        .iter()
        .filter(|&&v| !on_bridge[v])
        .count();
    let diameter = if components.len() == 1 {
        (0..g.n())
            .map(|s| g.bfs_distances(s).into_iter().flatten().max().unwrap_or(0))
            .max()
    } else {
        None
    };
    StructureReport {
        components,
        b: bridges.len(),
        articulation_vertices,
        bridges,
        min_degree: g.min_degree(),
        diameter,
        a,
    }
}
