use super::Graph;
use crate::error::{domain, Result};

/// Ordered clique bags X_1..X_l of an interval graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePath {
    bags: Vec<Vec<usize>>,
}

impl CliquePath {
    /// Validates that every bag is a clique of `g`, bags cover all vertices and
    /// edges, and each vertex occupies a contiguous run of bags.
    pub fn new(g: &Graph, bags: Vec<Vec<usize>>) -> Result<CliquePath> {
        if bags.is_empty() {
            return domain("clique path needs at least one bag");
        }
        let mut bags = bags;
        for (t, bag) in bags.iter_mut().enumerate() {
            bag.sort_unstable();
            bag.dedup();
            if bag.is_empty() {
                return domain(format!("bag {t} is empty"));
            }
            if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
                return domain(format!("bag {t} contains unknown vertex {v}"));
            }
            for (i, &u) in bag.iter().enumerate() {
                if let Some(&v) = bag[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                    return domain(format!(
                        "bag {t} is not a clique: {u} and {v} are not adjacent"
                    ));
                }
            }
        }
        let mut first = vec![usize::MAX; g.n()];
        let mut last = vec![0; g.n()];
        for (t, bag) in bags.iter().enumerate() {
            for &v in bag {
                if first[v] == usize::MAX {
                    first[v] = t;
                } else if last[v] + 1 != t {
                    return domain(format!("vertex {v} does not occupy consecutive bags"));
                }
                last[v] = t;
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| first[v] == usize::MAX) {
            return domain(format!("vertex {v} lies in no bag"));
        }
        for &(u, v) in g.edges() {
            if first[u].max(first[v]) > last[u].min(last[v]) {
                return domain(format!("edge ({u},{v}) lies in no bag"));
            }
        }
        Ok(CliquePath { bags })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    /// X_t ∩ X_{t+1}, sorted.
    pub fn junction(&self, t: usize) -> Vec<usize> {
        let next = &self.bags[t + 1];
        self.bags[t]
            .iter()
            .copied()
            .filter(|v| next.binary_search(v).is_ok())
            .collect()
    }
}

/// Interval graph of closed intervals `[lo, hi]` together with its clique path.
///
/// Vertex `i` is interval `i`. Bags are the maximal cliques in left-to-right order.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Result<(Graph, CliquePath)> {
    if intervals.is_empty() {
        return domain("interval graph needs at least one interval");
    }
    if let Some(i) = intervals.iter().position(|&(lo, hi)| lo > hi) {
        return domain(format!("interval {i} has lo > hi"));
    }
    let n = intervals.len();
    let meets = |a: usize, b: usize| {
        let (x, y) = (intervals[a], intervals[b]);
        x.0.max(y.0) <= x.1.min(y.1)
    };
    let edges = (0..n).flat_map(|a| {
        (a + 1..n)
            .filter(move |&b| meets(a, b))
            .map(move |b| (a, b))
    });
    let g = Graph::from_edges(n, edges.collect::<Vec<_>>())?;
    let mut points: Vec<i64> = intervals.iter().map(|&(lo, _)| lo).collect();
    points.sort_unstable();
    points.dedup();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    for p in points {
        let bag: Vec<usize> = (0..n)
            .filter(|&i| intervals[i].0 <= p && p <= intervals[i].1)
            .collect();
        if let Some(prev) = bags.last() {
            if bag.iter().all(|v| prev.binary_search(v).is_ok()) {
                continue;
            }
            if prev.iter().all(|v| bag.binary_search(v).is_ok()) {
                bags.pop();
            }
        }
        bags.push(bag);
    }
    let path = CliquePath::new(&g, bags)?;
    Ok((g, path))
}
