use std::collections::BTreeSet;

use crate::error::{domain, Result};
use crate::graph::{grid, Graph};
use crate::trees::{pair_from_rooted_cds, verify_rooted_cds, TreeFamily};

type Cell = (usize, usize);

/// Two 1-rooted connected dominating sets of G(n1,n2) sharing `root`.
#[derive(Clone, Debug)]
pub struct GridCds {
    pub n1: usize,
    pub n2: usize,
    pub d1: Vec<usize>,
    pub d2: Vec<usize>,
    pub root: usize,
    /// Set when the closed-form D1 failed and a repaired set was used.
    pub repair: Option<String>,
}

impl GridCds {
    /// The induced tree pair with the fewest shared edges.
    pub fn trees(&self) -> Result<TreeFamily> {
        pair_from_rooted_cds(&grid(self.n1, self.n2)?, &self.d1, &self.d2)
    }
}

/// Closed-form D1 for n1 ≥ 4 with each clause clipped to the grid.
fn formula(n1: usize, n2: usize) -> BTreeSet<Cell> {
    let (a, b) = (n1 as i64, n2 as i64);
    let mut s: Vec<(i64, i64)> = (0..b).map(|c| (0, c)).collect();
    for i in 0..=(a + 1) / 4 {
        s.extend((2 * i + 1..=b - 2 - 2 * i).map(|c| (a - 1 - 2 * i, c)));
    }
    for i in 0..=(a - 1) / 4 {
        s.extend((2 * i + 1..=b - 4 - 2 * i).map(|c| (2 + 2 * i, c)));
    }
    for j in 0..=a / 4 {
        s.extend((2 * j + 2..=a - 1 - 2 * j).map(|r| (r, 1 + 2 * j)));
    }
    for j in 0..=(a + 2) / 4 {
        s.extend((2 * j..=a - 1 - 2 * j).map(|r| (r, b - 2 - 2 * j)));
    }
    s.into_iter()
        .filter(|&(r, c)| (0..a).contains(&r) && (0..b).contains(&c))
        .map(|(r, c)| (r as usize, c as usize))
        .collect()
}

/// A D1 for four rows, rooted at (1,1); valid for n2 ≥ 6.
fn four_rows(n2: usize) -> BTreeSet<Cell> {
    let mut s = BTreeSet::from([(0, n2 - 1), (1, 0), (1, n2 - 1), (2, 0), (3, 0)]);
    s.extend((1..n2 - 2).map(|c| (1, c)));
    s.extend((2..n2).map(|c| (2, c)));
    s
}

fn ids(n2: usize, cells: &BTreeSet<Cell>) -> Vec<usize> {
    cells.iter().map(|&(r, c)| r * n2 + c).collect()
}

/// D2 = V − D1 + root; returns both sets when they pass the rooted check.
fn check(
    g: &Graph,
    n2: usize,
    d1: &BTreeSet<Cell>,
    root: Cell,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if !d1.contains(&root) {
        return None;
    }
    let r = root.0 * n2 + root.1;
    let a = ids(n2, d1);
    let b: Vec<usize> = (0..g.n())
        .filter(|&v| v == r || a.binary_search(&v).is_err())
        .collect();
    let sets = [a, b];
    verify_rooted_cds(g, &sets, 1).is_ok().then(|| {
        let [a, b] = sets;
        (a, b)
    })
}

/// Widens a valid n1×w solution to n1×n2 by repeating a column c that equals
/// column c+1, neither holding the root.
fn stretch(
    n1: usize,
    w: usize,
    d1: &BTreeSet<Cell>,
    root: Cell,
    n2: usize,
) -> Vec<(usize, BTreeSet<Cell>, Cell)> {
    let column = |c: usize| -> Vec<bool> { (0..n1).map(|r| d1.contains(&(r, c))).collect() };
    let k = n2 - w;
    let mut out = Vec::new();
    for c in 0..w - 1 {
        if root.1 == c || root.1 == c + 1 || column(c) != column(c + 1) {
            continue;
        }
        let moved = |(r, x): Cell| if x <= c { (r, x) } else { (r, x + k) };
        let mut nd: BTreeSet<Cell> = d1.iter().map(|&p| moved(p)).collect();
        for r in 0..n1 {
            if d1.contains(&(r, c)) {
                nd.extend((1..=k).map(|t| (r, c + t)));
            }
        }
        out.push((c, nd, moved(root)));
    }
    out
}

/// Two 1-rooted connected dominating sets in G(n1,n2) for n1, n2 ≥ 3.
///
/// Rows are the shorter side; for n1 > n2 the n2×n1 solution is transposed.
/// For n1 ≥ 4 the closed-form D1 rooted at (1, n2−2) is tried first. It fails
/// for even n1 on long grids; then a four-row pattern or a column stretch of
/// a narrower valid solution is used and recorded in `repair`.
pub fn grid_rooted_cds(n1: usize, n2: usize) -> Result<GridCds> {
    if n1 < 3 || n2 < 3 {
        return domain(format!("grid needs n1, n2 >= 3 (got {n1}x{n2})"));
    }
    if n1 > n2 {
        let t = grid_rooted_cds(n2, n1)?;
        let flip = |v: usize| (v % n1) * n2 + v / n1;
        let mut d1: Vec<usize> = t.d1.iter().map(|&v| flip(v)).collect();
        let mut d2: Vec<usize> = t.d2.iter().map(|&v| flip(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        return Ok(GridCds {
            n1,
            n2,
            d1,
            d2,
            root: flip(t.root),
            repair: t.repair.map(|r| format!("{r} (transposed)")),
        });
    }
    let g = grid(n1, n2)?;
    let done = |d1: Vec<usize>, d2: Vec<usize>, root: Cell, repair: Option<String>| {
        if let Some(note) = &repair {
            log::warn!("grid {n1}x{n2}: closed-form D1 failed; {note}");
        }
        GridCds {
            n1,
            n2,
            d1,
            d2,
            root: root.0 * n2 + root.1,
            repair,
        }
    };
    if n1 == 3 {
        let d1: BTreeSet<Cell> = (0..n2).map(|c| (1, c)).collect();
        if let Some((a, b)) = check(&g, n2, &d1, (1, 0)) {
            return Ok(done(a, b, (1, 0), None));
        }
        return domain(format!("three-row sets failed on 3x{n2}"));
    }
    let root = (1, n2 - 2);
    if let Some((a, b)) = check(&g, n2, &formula(n1, n2), root) {
        return Ok(done(a, b, root, None));
    }
    if n1 == 4 && n2 >= 6 {
        if let Some((a, b)) = check(&g, n2, &four_rows(n2), (1, 1)) {
            return Ok(done(
                a,
                b,
                (1, 1),
                Some("used the four-row pattern rooted at (1,1)".into()),
            ));
        }
    }
    for w in (3..n2).rev() {
        let narrow = grid(n1, w)?;
        let base = formula(n1, w);
        let base_root = (1, w - 2);
        if check(&narrow, w, &base, base_root).is_none() {
            continue;
        }
        for (c, d1, r) in stretch(n1, w, &base, base_root, n2) {
            if let Some((a, b)) = check(&g, n2, &d1, r) {
                let note = format!("stretched the {n1}x{w} solution by repeating column {c}");
                return Ok(done(a, b, r, Some(note)));
            }
        }
    }
    domain(format!("no 1-rooted pair found for {n1}x{n2}"))
}
