use crate::error::{domain, Error, Result};
use crate::graph::CliquePath;

/// k disjoint connected dominating sets of a k-connected interval graph.
///
/// Sweeps the junctions X_t ∩ X_{t+1} left to right. Each set keeps its
/// current representative while it lies in the junction; otherwise it takes
/// the lowest-id junction vertex not already holding another set's
/// representative and not used by another set. A single bag yields k
/// singletons.
pub fn interval_cds(cp: &CliquePath, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return domain("interval_cds needs k >= 1");
    }
    let bags = cp.bags();
    if bags.len() == 1 {
        if bags[0].len() < k {
            return domain(format!("the single bag has fewer than {k} vertices"));
        }
        return Ok(bags[0][..k].iter().map(|&v| vec![v]).collect());
    }
    let n = bags.iter().flatten().copied().max().map_or(0, |m| m + 1);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut current: Vec<Option<usize>> = vec![None; k];
    for t in 0..bags.len() - 1 {
        let junction = cp.junction(t);
        if junction.len() < k {
            return domain(format!(
                "junction between bags {t} and {} has {} < {k} vertices",
                t + 1,
                junction.len()
            ));
        }
        let mut next: Vec<Option<usize>> = vec![None; k];
        for s in 0..k {
            if let Some(v) = current[s].filter(|v| junction.binary_search(v).is_ok()) {
                next[s] = Some(v);
            }
        }
        for s in 0..k {
            if next[s].is_some() {
                continue;
            }
            let pick = junction
                .iter()
                .copied()
                .find(|&v| owner[v].is_none_or(|o| o == s) && !next.contains(&Some(v)))
                .ok_or_else(|| Error::Domain(format!("no free vertex in junction {t}")))?;
            next[s] = Some(pick);
        }
        for s in 0..k {
            let v = next[s].expect("filled above");
            if owner[v].is_none() {
                owner[v] = Some(s);
                sets[s].push(v);
            }
        }
        current = next;
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    Ok(sets)
}
