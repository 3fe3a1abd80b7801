use super::{key, Edge, Graph};
use crate::error::{domain, Result};

/// Named graph families accepted by [`generate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Grid(usize, usize),
    Cylinder(usize, usize),
    CompleteBipartite(usize, usize),
    GluedCliques(usize),
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Complete(n) => complete(n),
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Star(leaves) => star(leaves),
        Family::Grid(n1, n2) => grid(n1, n2),
        Family::Cylinder(n1, n2) => cylinder(n1, n2),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::GluedCliques(n) => glued_cliques(n),
    }
}

fn build(n: usize, edges: Vec<Edge>) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits a simple graph")
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return domain("complete graph needs n >= 1");
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(build(n, edges))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return domain("path needs n >= 1");
    }
    Ok(build(n, (1..n).map(|v| (v - 1, v)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return domain("cycle needs n >= 3");
    }
    let mut edges: Vec<Edge> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Ok(build(n, edges))
}

/// K_{1,leaves} with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return domain("star needs at least one leaf");
    }
    Ok(build(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()))
}

/// K_{a,b}: side one is `0..a`, side two is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return domain("complete bipartite graph needs both sides nonempty");
    }
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Ok(build(a + b, edges))
}

/// Vertex `(a, x)` of the product gets id `a * h.n() + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return domain("cartesian product needs two nonempty graphs");
    }
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.m() + nh * g.m());
    for a in 0..g.n() {
        for &(x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    for &(a, b) in g.edges() {
        for x in 0..nh {
            edges.push((a * nh + x, b * nh + x));
        }
    }
    Ok(build(g.n() * nh, edges))
}

/// G(n1,n2) = P_{n1} □ P_{n2}; vertex (row, col) has id `row * n2 + col`.
pub fn grid(n1: usize, n2: usize) -> Result<Graph> {
    if n1 < 3 || n2 < 3 {
        return domain(format!("grid needs n1, n2 >= 3 (got {n1}x{n2})"));
    }
    cartesian_product(&path(n1)?, &path(n2)?)
}

/// C(n1,n2) = C_{n1} □ P_{n2}; rows `0..n1` form the cycle, id `row * n2 + col`.
pub fn cylinder(n1: usize, n2: usize) -> Result<Graph> {
    if n1 < 3 || n2 < 3 {
        return domain(format!("cylinder needs n1, n2 >= 3 (got {n1}x{n2})"));
    }
    cartesian_product(&cycle(n1)?, &path(n2)?)
}

/// Two cliques K_a and K_b, a = ⌊(n+1)/2⌋, b = ⌈(n+1)/2⌉, sharing vertex 0.
///
/// The first clique is `{0} ∪ 1..a`, the second `{0} ∪ a..n`.
pub fn glued_cliques(n: usize) -> Result<Graph> {
    if n < 3 {
        return domain("glued cliques need n >= 3");
    }
    let a = n.div_ceil(2);
    let first: Vec<usize> = (0..a).collect();
    let second: Vec<usize> = std::iter::once(0).chain(a..n).collect();
    let mut edges = Vec::new();
    for clique in [&first, &second] {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                edges.push(key(u, v));
            }
        }
    }
    Ok(build(n, edges))
}

/// Incidence graph of the complete k-uniform hypergraph on `l` points.
///
/// Points are `0..l`; set-vertices follow in lexicographic order of their subsets.
pub fn kriesell(k: usize, l: usize) -> Result<Graph> {
    if k == 0 || l < k {
        return domain(format!(
            "kriesell graph needs l >= k >= 1 (got k={k}, l={l})"
        ));
    }
    let mut edges = Vec::new();
    let mut next = l;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        for &p in &subset {
            edges.push((p, next));
        }
        next += 1;
        // advance to the next k-subset in lexicographic order
        let Some(pos) = (0..k).rev().find(|&i| subset[i] < l - k + i) else {
            break;
        };
        subset[pos] += 1;
        for i in pos + 1..k {
            subset[i] = subset[i - 1] + 1;
        }
    }
    Ok(build(next, edges))
}

pub fn square(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return domain("square needs a connected graph");
    }
    let mut edges = g.edges().to_vec();
    for v in 0..g.n() {
        for &a in g.neighbors(v) {
            for &b in g.neighbors(v) {
                if a < b && !g.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
    }
    Graph::from_edges_dedup(g.n(), edges)
}

/// Result of [`clique_blowup`]: the new graph and the source vertex of every new vertex.
#[derive(Clone, Debug)]
pub struct Blowup {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

/// G(k,A): each vertex of `a` becomes a k-clique joined to the clique of every neighbor.
///
/// A replaced vertex keeps its id for the first clique member; the other
/// `k-1` members are appended in order of the sorted replacement set.
pub fn clique_blowup(g: &Graph, a: &[usize], k: usize) -> Result<Blowup> {
    if k == 0 {
        return domain("clique blow-up needs k >= 1");
    }
    if let Some(&bad) = a.iter().find(|&&v| v >= g.n()) {
        return domain(format!("vertex {bad} is not in the graph"));
    }
    let mut set: Vec<usize> = a.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut origin: Vec<usize> = (0..g.n()).collect();
    let mut copies: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    for &v in &set {
        for _ in 1..k {
            copies[v].push(origin.len());
            origin.push(v);
        }
    }
    let mut edges = Vec::new();
    for v in &set {
        let c = &copies[*v];
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                edges.push((x, y));
            }
        }
    }
    for &(u, v) in g.edges() {
        for &x in &copies[u] {
            for &y in &copies[v] {
                edges.push((x, y));
            }
        }
    }
    Ok(Blowup {
        graph: build(origin.len(), edges),
        origin,
    })
}

/// A graph with its distinguished hub vertices.
#[derive(Clone, Debug)]
pub struct Hub {
    pub graph: Graph,
    pub u: usize,
    pub v: Option<usize>,
}

/// P_n*: the path `0..n` plus a vertex `u = n` joined to every path vertex.
pub fn pn_star(n: usize) -> Result<Hub> {
    if n < 3 {
        return domain("P_n* needs n >= 3");
    }
    let mut edges: Vec<Edge> = (1..n).map(|x| (x - 1, x)).collect();
    edges.extend((0..n).map(|x| (x, n)));
    Ok(Hub {
        graph: build(n + 1, edges),
        u: n,
        v: None,
    })
}

/// P_n⁺: P_n* plus `v = n + 1` joined to `u` and to both path ends.
pub fn pn_plus(n: usize) -> Result<Hub> {
    let star = pn_star(n)?;
    let v = n + 1;
    let mut edges = star.graph.edges().to_vec();
    edges.extend([(n, v), (0, v), (n - 1, v)]);
    Ok(Hub {
        graph: build(n + 2, edges),
        u: n,
        v: Some(v),
    })
}
