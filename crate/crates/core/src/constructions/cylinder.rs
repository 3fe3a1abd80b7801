use crate::error::Result;
use crate::graph::{cylinder, key, Edge};
use crate::trees::TreeFamily;

/// Two (0, n1−2)-disjoint spanning trees of C(n1,n2), with ids `row * n2 + col`.
///
/// T1 takes row 0, the columns of even index, rows 1..n1−2 towards the next
/// odd column, and the wrap edges of odd columns. T2 mirrors it from row
/// n1−1 with the parities swapped, plus the edges (i,0)(i,1) of the middle
/// rows, which are the shared ones.
pub fn cylinder_trees(n1: usize, n2: usize) -> Result<TreeFamily> {
    let g = cylinder(n1, n2)?;
    let id = |r: usize, c: usize| r * n2 + c;
    let mut t1: Vec<Edge> = Vec::new();
    let mut t2: Vec<Edge> = Vec::new();
    for c in 0..n2 {
        let own = if c % 2 == 0 { &mut t1 } else { &mut t2 };
        own.extend((0..n1 - 1).map(|r| key(id(r, c), id(r + 1, c))));
        if c + 1 < n2 {
            own.extend((1..n1 - 1).map(|r| key(id(r, c), id(r, c + 1))));
        }
        let wrap = if c % 2 == 1 { &mut t1 } else { &mut t2 };
        wrap.push(key(id(0, c), id(n1 - 1, c)));
    }
    for c in 0..n2 - 1 {
        t1.push(key(id(0, c), id(0, c + 1)));
        t2.push(key(id(n1 - 1, c), id(n1 - 1, c + 1)));
    }
    t2.extend((1..n1 - 1).map(|r| key(id(r, 0), id(r, 1))));
    TreeFamily::from_edge_lists(&g, vec![t1, t2])
}
