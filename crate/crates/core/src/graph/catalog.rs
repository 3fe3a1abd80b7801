use std::collections::BTreeMap;

use super::{canonical_code, Graph};
use crate::error::{domain, Result};

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, ordered by edge count and then canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each class of order `n-1` by a new vertex with every nonempty
/// neighbourhood reaches all classes.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 9 {
        return domain("catalog supports 1 <= n <= 9");
    }
    let mut level = vec![Graph::empty(1)];
    for order in 2..=n {
        let mut found: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
        let new = order - 1;
        for g in &level {
            for mask in 1u32..(1u32 << new) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..new).filter(|&v| mask >> v & 1 == 1).map(|v| (v, new)));
                let h = Graph::from_edges(order, edges).expect("extension stays simple");
                found.entry((h.m(), canonical_code(&h))).or_insert(h);
            }
        }
        level = found.into_values().collect();
    }
    Ok(level)
}
