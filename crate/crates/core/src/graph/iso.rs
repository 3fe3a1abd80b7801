//! Small-instance isomorphism: colour refinement plus exhaustive search.

use super::Graph;

/// Stable colour refinement: iterated (colour, sorted neighbour colours) until
/// the partition stops splitting. Colour names are canonical ranks.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colour);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("signature present"))
            .collect();
        let now = sorted.len();
        colour = next;
        if now == classes {
            return colour;
        }
        classes = now;
    }
}

fn count_distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Canonical adjacency code for graphs with at most 11 vertices: the maximum
/// upper-triangle bit code over all orderings that list colour classes in
/// colour order. Equal codes (and orders) mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_code supports at most 11 vertices");
    let colour = refine(g);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    for v in order {
        match classes.last_mut() {
            Some(c) if colour[c[0]] == colour[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &classes, 0, &mut perm, &mut used, &mut best);
    best
}

fn search(
    g: &Graph,
    classes: &[Vec<usize>],
    ci: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u64,
) {
    if ci == classes.len() {
        *best = (*best).max(code_of(g, perm));
        return;
    }
    let class = &classes[ci];
    let placed = class.iter().filter(|&&v| used[v]).count();
    if placed == class.len() {
        search(g, classes, ci + 1, perm, used, best);
        return;
    }
    for &v in class {
        if !used[v] {
            used[v] = true;
            perm.push(v);
            search(g, classes, ci, perm, used, best);
            perm.pop();
            used[v] = false;
        }
    }
}

fn code_of(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            code <<= 1;
            if g.has_edge(perm[i], perm[j]) {
                code |= 1;
            }
        }
    }
    code
}

/// A map `phi` with `u ~ v` in `g` iff `phi[u] ~ phi[v]` in `h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let n = g.n();
    // refine both graphs jointly so colour names agree
    let union = disjoint_union(g, h);
    let colour = refine(&union);
    let (cg, ch) = colour.split_at(n);
    let mut a = cg.to_vec();
    let mut b = ch.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    // visit g's vertices in BFS order so each new vertex has mapped neighbors
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    if extend(g, h, cg, ch, &order, 0, &mut phi, &mut taken) {
        Some(phi)
    } else {
        None
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    pos: usize,
    phi: &mut [usize],
    taken: &mut [bool],
) -> bool {
    let Some(&u) = order.get(pos) else {
        return true;
    };
    for x in 0..h.n() {
        if taken[x] || ch[x] != cg[u] {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&w| g.has_edge(u, w) == h.has_edge(x, phi[w]));
        if !consistent {
            continue;
        }
        phi[u] = x;
        taken[x] = true;
        if extend(g, h, cg, ch, order, pos + 1, phi, taken) {
            return true;
        }
        taken[x] = false;
        phi[u] = usize::MAX;
    }
    false
}

fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + n, v + n)));
    Graph::from_edges(n + h.n(), edges.collect::<Vec<_>>()).expect("disjoint union is simple")
}
