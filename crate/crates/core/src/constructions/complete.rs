use crate::error::{domain, Error, Result};
use crate::graph::{complete, key, Edge};
use crate::trees::TreeFamily;

/// Number of stars beyond the ⌊n/2⌋ base: min(⌊l/(n−1) + 1_odd(n)/2⌋, ⌈n/2⌉).
fn star_level(n: usize, l: usize) -> usize {
    let raw = if n.is_multiple_of(2) {
        l / (n - 1)
    } else {
        (2 * l + n - 1) / (2 * (n - 1))
    };
    raw.min(n.div_ceil(2))
}

/// dst_{0,l}(K_n) for n ≥ 3.
pub fn dst_0l_complete(n: usize, l: usize) -> usize {
    n / 2 + star_level(n, l)
}

/// dst_{1,l}(K_n) for n ≥ 4 and 1 ≤ l < n−1: ⌊n/2⌋ + ⌊l/2 − 1_even(n)/2⌋.
pub fn dst_1l_complete(n: usize, l: usize) -> usize {
    n / 2 + hub_level(n, l)
}

fn hub_level(n: usize, l: usize) -> usize {
    if n.is_multiple_of(2) {
        (l - 1) / 2
    } else {
        l / 2
    }
}

/// Double-star trees on consecutive pairs of `pool`, each spanning `pool`
/// and edge-disjoint from one another. An odd leftover hangs from every x_t.
fn double_stars(pool: &[usize]) -> Vec<Vec<Edge>> {
    let pairs: Vec<(usize, usize)> = pool.chunks_exact(2).map(|p| (p[0], p[1])).collect();
    let spare = (pool.len() % 2 == 1).then(|| pool[pool.len() - 1]);
    let mut trees: Vec<Vec<Edge>> = pairs.iter().map(|&(x, y)| vec![key(x, y)]).collect();
    for t in 0..pairs.len() {
        let (xt, yt) = pairs[t];
        for (s, &(xs, ys)) in pairs.iter().enumerate().skip(t + 1) {
            trees[t].extend([key(xt, xs), key(yt, ys)]);
            trees[s].extend([key(xt, ys), key(yt, xs)]);
        }
        if let Some(z) = spare {
            trees[t].push(key(xt, z));
        }
    }
    trees
}

/// dst_{0,l}(K_n) trees that are (0,l)-disjoint.
///
/// Vertices 0..s are star centres, s = 2i for even n and 2i − 1 for odd n,
/// and every star centre hangs from x_t in each double-star. That shares
/// i(n−1) edges for even n and (2i−1)(n−1)/2 for odd n.
pub fn complete_0l(n: usize, l: usize) -> Result<TreeFamily> {
    if n < 3 {
        return domain("complete_0l needs n >= 3");
    }
    let i = star_level(n, l);
    let stars = if n.is_multiple_of(2) {
        2 * i
    } else {
        (2 * i).saturating_sub(1)
    };
    let pool: Vec<usize> = (stars..n).collect();
    let mut lists: Vec<Vec<Edge>> = (0..stars)
        .map(|c| (0..n).filter(|&v| v != c).map(|v| key(c, v)).collect())
        .collect();
    for mut t in double_stars(&pool) {
        let x = t[0].0;
        t.extend((0..stars).map(|c| key(c, x)));
        lists.push(t);
    }
    TreeFamily::from_edge_lists(&complete(n)?, lists)
}

/// dst_{1,l}(K_n) trees that are (1,l)-disjoint.
///
/// B is the lowest-id block of n − 2i − 2 (even n) or n − 2i − 1 (odd n)
/// vertices and the hub u is n − 1. Double-stars inside B reach the rest
/// through u; each remaining vertex u_k gives a tree with inner set {u, u_k}.
/// Every tree uses u's edges to the vertices outside B, so only u is shared
/// and the shared edges number n − 1 − |B|.
pub fn complete_1l(n: usize, l: usize) -> Result<TreeFamily> {
    if n < 4 || l < 1 {
        return domain("complete_1l needs n >= 4 and l >= 1");
    }
    if l + 1 >= n {
        return Err(Error::Unbounded(format!(
            "dst_1,{l}(K_{n}) is not finite for l >= n-1"
        )));
    }
    let i = hub_level(n, l);
    let b = if n.is_multiple_of(2) {
        n - 2 * i - 2
    } else {
        n - 2 * i - 1
    };
    let hub = n - 1;
    let block: Vec<usize> = (0..b).collect();
    let rest: Vec<usize> = (b..hub).collect();
    let spokes: Vec<Edge> = rest.iter().map(|&r| key(r, hub)).collect();
    let mut lists = Vec::new();
    for mut t in double_stars(&block) {
        let x = t[0].0;
        t.push(key(x, hub));
        t.extend_from_slice(&spokes);
        lists.push(t);
    }
    for &uk in &rest {
        let mut t = spokes.clone();
        t.extend(block.iter().map(|&v| key(v, uk)));
        lists.push(t);
    }
    TreeFamily::from_edge_lists(&complete(n)?, lists)
}
