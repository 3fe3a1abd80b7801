use super::budget::{SearchBudget, SearchStats, Tracker};
use super::enumerate::check_mask_size;
use crate::error::{domain, Result};
use crate::graph::Graph;

fn closed_neighborhoods(g: &Graph) -> Vec<u128> {
    (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u128 << v, |acc, &w| acc | 1u128 << w)
        })
        .collect()
}

fn full(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Whether the vertex mask is a connected dominating set.
pub(crate) fn is_cds_mask(nb: &[u128], n: usize, set: u128) -> bool {
    if set == 0 {
        return false;
    }
    let mut covered = 0u128;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        covered |= nb[v];
    }
    if covered != full(n) {
        return false;
    }
    let mut reach = 1u128 << set.trailing_zeros();
    loop {
        let mut grow = reach;
        let mut rest = reach;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow |= nb[v] & set;
        }
        if grow == reach {
            return reach == set;
        }
        reach = grow;
    }
}

/// Every connected dominating set as a mask, in increasing mask order.
pub(crate) fn all_cds_masks(g: &Graph, tracker: &Tracker) -> Result<Vec<u32>> {
    let n = g.n();
    if n == 0 || n > 24 {
        return domain("subset enumeration supports 1 <= n <= 24");
    }
    let nb = closed_neighborhoods(g);
    let mut out = Vec::new();
    for set in 1u32..(1u32 << n) {
        if set & 0xfff == 0 {
            tracker.tuple()?;
        }
        if is_cds_mask(&nb, n, u128::from(set)) {
            out.push(set);
        }
    }
    Ok(out)
}

/// Size of a smallest connected dominating set, searched by increasing size.
pub fn gamma_c(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return domain("a connected dominating set needs a connected nonempty graph");
    }
    check_mask_size(g)?;
    let nb = closed_neighborhoods(g);
    for size in 1..=n {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let set = pick.iter().fold(0u128, |acc, &v| acc | 1u128 << v);
            if is_cds_mask(&nb, n, set) {
                return Ok(size);
            }
            let Some(pos) = (0..size).rev().find(|&p| pick[p] < n - size + p) else {
                break;
            };
            pick[pos] += 1;
            for q in pos + 1..size {
                pick[q] = pick[q - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set of a connected graph is a CDS")
}

/// Connected domatic number d_c: the most pairwise disjoint connected
/// dominating sets. Packs inclusion-minimal sets, pruned by ⌊n/γ_c⌋.
pub fn connected_domatic(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<(usize, Vec<Vec<usize>>, SearchStats)> {
    if !g.is_connected() {
        return domain("connected domatic number needs a connected graph");
    }
    let tracker = Tracker::new(*budget);
    let n = g.n();
    let all = all_cds_masks(g, &tracker)?;
    let is_cds: std::collections::HashSet<u32> = all.iter().copied().collect();
    let minimal: Vec<u32> = all
        .iter()
        .copied()
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || !is_cds.contains(&(s & !(1 << v)))))
        .collect();
    let gamma = minimal
        .iter()
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n);
    let cap = n / gamma;
    let mut best: Vec<u32> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    pack(
        &minimal,
        0,
        0,
        gamma,
        cap,
        n,
        &mut current,
        &mut best,
        &tracker,
    )?;
    let sets = best
        .iter()
        .map(|&s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    Ok((best.len(), sets, tracker.stats()))
}

#[allow(clippy::too_many_arguments)]
fn pack(
    sets: &[u32],
    from: usize,
    used: u32,
    gamma: usize,
    cap: usize,
    n: usize,
    current: &mut Vec<u32>,
    best: &mut Vec<u32>,
    tracker: &Tracker,
) -> Result<()> {
    tracker.tuple()?;
    if current.len() > best.len() {
        *best = current.clone();
    }
    if best.len() == cap {
        return Ok(());
    }
    let free = n - used.count_ones() as usize;
    if current.len() + free / gamma <= best.len() {
        return Ok(());
    }
    for idx in from..sets.len() {
        let s = sets[idx];
        if s & used != 0 {
            continue;
        }
        current.push(s);
        pack(
            sets,
            idx + 1,
            used | s,
            gamma,
            cap,
            n,
            current,
            best,
            tracker,
        )?;
        current.pop();
        if best.len() == cap {
            return Ok(());
        }
    }
    Ok(())
}
