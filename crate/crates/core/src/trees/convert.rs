use std::collections::{BTreeMap, VecDeque};

use super::verify::{cross_components, verify_cds, verify_lcist, CrossComponent};
use super::{TreeFamily, VertexPartition};
use crate::error::{domain, Error, Result};
use crate::graph::{bridges_and_articulations, key, Edge, Graph};

/// Adjacency of one cross component, in host ids.
struct Local {
    adj: BTreeMap<usize, Vec<usize>>,
}

impl Local {
    fn new(c: &CrossComponent) -> Local {
        let mut adj: BTreeMap<usize, Vec<usize>> =
            c.vertices.iter().map(|&v| (v, vec![])).collect();
        for &(u, v) in &c.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        for nb in adj.values_mut() {
            nb.sort_unstable();
        }
        Local { adj }
    }

    /// (child, parent) pairs in BFS order from `root`, never using edge `skip`.
    fn bfs(&self, root: usize, skip: Option<Edge>) -> Vec<(usize, usize)> {
        let mut seen = BTreeMap::new();
        seen.insert(root, ());
        let mut queue = VecDeque::from([root]);
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[&u] {
                if Some(key(u, w)) == skip || seen.contains_key(&w) {
                    continue;
                }
                seen.insert(w, ());
                out.push((w, u));
                queue.push_back(w);
            }
        }
        out
    }

    /// Non-bridge edges of the component, sorted.
    fn cycle_edges(&self, c: &CrossComponent) -> Vec<Edge> {
        let local: BTreeMap<usize, usize> = c
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let g = Graph::from_edges(
            c.vertices.len(),
            c.edges
                .iter()
                .map(|&(u, v)| (local[&u], local[&v]))
                .collect::<Vec<_>>(),
        )
        .expect("component of a simple graph");
        let (_, bridges) = bridges_and_articulations(&g);
        c.edges
            .iter()
            .copied()
            .filter(|&(u, v)| bridges.binary_search(&key(local[&u], local[&v])).is_err())
            .collect()
    }
}

/// k spanning trees from an l-CIST partition; the result is (0, Σc)-disjoint.
///
/// Each T_i is a BFS tree of G[V_i] plus, for every component D of each
/// B(V_i,V_j), the BFS layers of D from an anchor u ∈ D ∩ V_i: odd layers hang
/// from T_i, even layers from T_j. A tree component shares the lowest edge at
/// u; otherwise the lowest non-bridge edge at u is withheld from the BFS and
/// given to T_j alone.
pub fn trees_from_lcist(g: &Graph, p: &VertexPartition) -> Result<TreeFamily> {
    let report = verify_lcist(g, p, usize::MAX)?;
    if !report.is_structurally_ok() {
        return Err(Error::InvalidCertificate(format!(
            "partition fails the l-CIST conditions: disconnected blocks {:?}, isolated {:?}",
            report.disconnected_blocks, report.isolated
        )));
    }
    let blocks = p.blocks();
    let mut block_of = vec![0; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let mut lists: Vec<Vec<Edge>> = blocks.iter().map(|b| g.bfs_tree_edges(b)).collect();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            for comp in cross_components(g, &blocks[i], &blocks[j], &[]) {
                let local = Local::new(&comp);
                let in_i = |v: usize| block_of[v] == i;
                let (u, skip) = if comp.is_tree() {
                    let u = *comp
                        .vertices
                        .iter()
                        .find(|&&v| in_i(v))
                        .expect("component meets V_i");
                    (u, None)
                } else {
                    let cyc = local.cycle_edges(&comp);
                    let u = *comp
                        .vertices
                        .iter()
                        .find(|&&v| in_i(v) && cyc.iter().any(|&(a, b)| a == v || b == v))
                        .expect("a cyclic component has a cycle vertex on each side");
                    let e = *cyc
                        .iter()
                        .find(|&&(a, b)| a == u || b == u)
                        .expect("u lies on a cycle");
                    (u, Some(e))
                };
                for (w, parent) in local.bfs(u, skip) {
                    let target = if in_i(w) { j } else { i };
                    lists[target].push(key(w, parent));
                }
                match skip {
                    Some(e) => lists[j].push(e),
                    None => {
                        let x = local.adj[&u][0];
                        lists[j].push(key(u, x));
                    }
                }
            }
        }
    }
    TreeFamily::from_edge_lists(g, lists)
}

/// The converse direction: V_i = I(T_i), vertices inner in no tree join V_1.
pub fn partition_from_family(g: &Graph, f: &TreeFamily) -> Result<VertexPartition> {
    if g.n() < 3 {
        return domain("partition extraction needs at least three vertices");
    }
    if !f.overlap_inner().is_empty() {
        return Err(Error::InvalidCertificate(
            "family shares inner vertices; it is not (0,*)-disjoint".into(),
        ));
    }
    let mut blocks: Vec<Vec<usize>> = f.trees().iter().map(|t| t.inner().to_vec()).collect();
    let mut inner_somewhere = vec![false; g.n()];
    for b in &blocks {
        for &v in b {
            inner_somewhere[v] = true;
        }
    }
    blocks[0].extend((0..g.n()).filter(|&v| !inner_somewhere[v]));
    VertexPartition::new(g.n(), blocks, None)
}

fn check_cds_list(g: &Graph, ds: &[Vec<usize>]) -> Result<()> {
    for (idx, d) in ds.iter().enumerate() {
        let r = verify_cds(g, d);
        if !r.is_ok() {
            return Err(Error::InvalidCertificate(format!(
                "set {idx} is not a connected dominating set: {r:?}"
            )));
        }
    }
    Ok(())
}

/// T_i is a BFS tree of G[D_i] with each outside vertex hung from its lowest
/// neighbor in D_i.
pub fn trees_from_cds(g: &Graph, ds: &[Vec<usize>]) -> Result<TreeFamily> {
    check_cds_list(g, ds)?;
    let mut owner = vec![usize::MAX; g.n()];
    for (idx, d) in ds.iter().enumerate() {
        for &v in d {
            if owner[v] != usize::MAX && owner[v] != idx {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {v} lies in two of the sets"
                )));
            }
            owner[v] = idx;
        }
    }
    let lists = ds
        .iter()
        .enumerate()
        .map(|(idx, d)| {
            let mut edges = g.bfs_tree_edges(d);
            for v in 0..g.n() {
                if owner[v] != idx {
                    let w = *g
                        .neighbors(v)
                        .iter()
                        .find(|&&w| owner[w] == idx)
                        .expect("dominated vertex has a neighbor in the set");
                    edges.push(key(v, w));
                }
            }
            edges
        })
        .collect();
    TreeFamily::from_edge_lists(g, lists)
}

/// Root-edge choice combinations examined before falling back to the first one.
const CHOICE_LIMIT: usize = 4096;

/// Two trees with I(T_1) ⊆ D_1, I(T_2) ⊆ D_2 sharing as few edges as possible,
/// for connected dominating sets meeting in at most one vertex r.
///
/// The root joins each component of G[D_i − r] by one chosen edge. A neighbor
/// of r whose root edge is unused by its own tree may hang from r in the other
/// tree; a component of B(D_1 − r, D_2 − r) costs one shared edge exactly when
/// it is a tree without such a neighbor.
pub fn pair_from_rooted_cds(g: &Graph, d1: &[usize], d2: &[usize]) -> Result<TreeFamily> {
    check_cds_list(g, &[d1.to_vec(), d2.to_vec()])?;
    let n = g.n();
    let mut member = vec![0u8; n];
    for &v in d1 {
        member[v] |= 1;
    }
    for &v in d2 {
        member[v] |= 2;
    }
    let shared: Vec<usize> = (0..n).filter(|&v| member[v] == 3).collect();
    if shared.len() > 1 {
        return domain("the sets may share at most one vertex");
    }
    let root = shared.first().copied();
    let a1: Vec<usize> = (0..n).filter(|&v| member[v] == 1).collect();
    let a2: Vec<usize> = (0..n).filter(|&v| member[v] == 2).collect();
    let side_components = |a: &[usize]| -> Vec<Vec<usize>> {
        let (sub, ids) = g.induced(a);
        sub.components()
            .into_iter()
            .map(|c| c.into_iter().map(|x| ids[x]).collect())
            .collect()
    };
    let comps = [side_components(&a1), side_components(&a2)];
    let b_comps = cross_components(g, &a1, &a2, &[]);

    // per component of G[D_i − r], the neighbors of r inside it
    let options: Vec<Vec<usize>> = match root {
        Some(r) => comps
            .iter()
            .flatten()
            .map(|c| c.iter().copied().filter(|&v| g.has_edge(r, v)).collect())
            .collect(),
        None => Vec::new(),
    };
    let combos: usize = options
        .iter()
        .map(Vec::len)
        .try_fold(1usize, |acc, x| acc.checked_mul(x))
        .unwrap_or(usize::MAX);
    let choice_cost = |pick: &[usize]| -> usize {
        let mut used = vec![false; n];
        for &v in pick {
            used[v] = true;
        }
        b_comps
            .iter()
            .filter(|c| {
                c.is_tree()
                    && !c
                        .vertices
                        .iter()
                        .any(|&v| root.is_some_and(|r| g.has_edge(r, v)) && !used[v])
            })
            .count()
    };
    let mut best: Vec<usize> = options.iter().map(|o| o[0]).collect();
    if combos <= CHOICE_LIMIT {
        let mut best_cost = choice_cost(&best);
        let mut idx = vec![0usize; options.len()];
        'outer: loop {
            let mut pos = options.len();
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < options[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
            let pick: Vec<usize> = (0..options.len()).map(|t| options[t][idx[t]]).collect();
            let c = choice_cost(&pick);
            if c < best_cost {
                best_cost = c;
                best = pick;
            }
        }
    }
    let mut used = vec![false; n];
    for &v in &best {
        used[v] = true;
    }

    let mut lists: [Vec<Edge>; 2] = [Vec::new(), Vec::new()];
    match root {
        Some(r) => {
            for (s, side) in comps.iter().enumerate() {
                for c in side {
                    lists[s].extend(g.bfs_tree_edges(c));
                    let pick = *c
                        .iter()
                        .find(|&&v| used[v])
                        .expect("one root edge per component");
                    lists[s].push(key(r, pick));
                }
            }
        }
        None => {
            lists[0] = g.bfs_tree_edges(d1);
            lists[1] = g.bfs_tree_edges(d2);
        }
    }
    // a vertex of D_1 − r hangs in T_2 and vice versa
    let other = |v: usize| if member[v] == 1 { 1 } else { 0 };
    let is_free = |v: usize| root.is_some_and(|r| g.has_edge(r, v)) && !used[v];
    for comp in &b_comps {
        let local = Local::new(comp);
        if let Some(&f) = comp.vertices.iter().find(|&&v| is_free(v)) {
            let r = root.expect("free vertices need a root");
            lists[other(f)].push(key(f, r));
            for (w, parent) in local.bfs(f, None) {
                lists[other(w)].push(key(w, parent));
            }
        } else if !comp.is_tree() {
            let e = local.cycle_edges(comp)[0];
            for (w, parent) in local.bfs(e.0, Some(e)) {
                lists[other(w)].push(key(w, parent));
            }
            lists[other(e.0)].push(e);
        } else {
            let s = comp.vertices[0];
            for (w, parent) in local.bfs(s, None) {
                lists[other(w)].push(key(w, parent));
            }
            match local.adj[&s].first() {
                Some(&x) => lists[other(s)].push(key(s, x)),
                None => {
                    let r = root.ok_or_else(|| {
                        Error::InvalidCertificate(format!("vertex {s} is not dominated"))
                    })?;
                    lists[other(s)].push(key(s, r));
                }
            }
        }
    }
    for v in (0..n).filter(|&v| member[v] == 0) {
        for (s, a) in [(0usize, 1u8), (1, 2)] {
            let w = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&w| member[w] == a)
                .or_else(|| g.neighbors(v).iter().copied().find(|&w| member[w] == 3))
                .expect("dominated vertex");
            lists[s].push(key(v, w));
        }
    }
    let [t1, t2] = lists;
    TreeFamily::from_edge_lists(g, vec![t1, t2])
}
