use crate::error::{domain, Result};
use crate::graph::{bridges_and_articulations, key, square, Graph};
use crate::trees::{trees_from_lcist, verify_lcist, TreeFamily, VertexPartition};

/// Colour classes of a BFS tree depth parity.
fn parity_partition(n: usize, dist: &[Option<usize>]) -> Result<VertexPartition> {
    let even: Vec<usize> = (0..n)
        .filter(|&v| dist[v].is_some_and(|d| d % 2 == 0))
        .collect();
    let odd: Vec<usize> = (0..n)
        .filter(|&v| dist[v].is_some_and(|d| d % 2 == 1))
        .collect();
    VertexPartition::new(n, vec![even, odd], None)
}

/// Two spanning trees of G², completely independent when g has a cycle
/// other than a triangle and (0,1)-disjoint otherwise.
///
/// A tree g uses the bipartition of g itself. Otherwise a cycle edge uw is
/// removed and the bipartition of a BFS tree of g − uw is tried as a 0-CIST
/// partition of G², over the non-bridge edges in order. If none qualifies
/// (only the triangle) the bipartition of a BFS tree of g is a 1-CIST
/// partition.
pub fn square_trees(g: &Graph) -> Result<TreeFamily> {
    let n = g.n();
    if n < 3 {
        return domain("square_trees needs at least 3 vertices");
    }
    let h = square(g)?;
    let fallback = || -> Result<TreeFamily> {
        let p = parity_partition(n, &g.bfs_distances(0))?;
        trees_from_lcist(&h, &p)
    };
    if g.m() + 1 == n {
        return fallback();
    }
    let (_, bridges) = bridges_and_articulations(g);
    for &(u, w) in g.edges() {
        if bridges.binary_search(&key(u, w)).is_ok() {
            continue;
        }
        let rest = g.without_edge(u, w);
        for root in [u, w] {
            let p = parity_partition(n, &rest.bfs_distances(root))?;
            if verify_lcist(&h, &p, 0)?.is_ok() {
                return trees_from_lcist(&h, &p);
            }
        }
    }
    log::info!("no 0-CIST bipartition of the square found; using a 1-CIST partition");
    fallback()
}
