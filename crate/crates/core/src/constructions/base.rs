use crate::graph::{complete_bipartite, cycle, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseGraph {
    C4,
    K33,
}

/// The small hosts with disjoint connected dominating sets but no two
/// completely independent spanning trees, with their dominating sets.
///
/// C4 is the cycle 0-1-2-3; K33 has sides {0,1,2} and {3,4,5}.
pub fn base_cds(which: BaseGraph) -> (Graph, Vec<Vec<usize>>) {
    match which {
        BaseGraph::C4 => (cycle(4).expect("C4"), vec![vec![0, 1], vec![2, 3]]),
        BaseGraph::K33 => (
            complete_bipartite(3, 3).expect("K33"),
            vec![vec![0, 3], vec![1, 4], vec![2, 5]],
        ),
    }
}
