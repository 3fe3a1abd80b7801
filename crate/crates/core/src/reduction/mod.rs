//! Gadget chain that turns a two-port CIST question into an (i,j) question.
//!
//! H_{i,j} is H, then i−1 H-adds, then j H'-adds, then the H+ cap. Each add
//! identifies the new block's entry ports with the previous exit ports.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{key, Edge, Graph};
use crate::trees::{verify_ij_disjoint, TreeFamily};

const H_DATA: &str = include_str!("data/h.gadget");
const HPRIME_DATA: &str = include_str!("data/hprime.gadget");
const HPLUS_DATA: &str = include_str!("data/hplus.gadget");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    H,
    Hprime,
    Hplus,
}

/// Tree receiving a gadget edge when a CIST pair is lifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    T1,
    T2,
    Both,
}

/// One gadget as transcribed in its data file.
#[derive(Clone, Debug)]
struct Table {
    name: String,
    vertices: Vec<String>,
    entry: [usize; 2],
    exit: Option<[usize; 2]>,
    edges: Vec<(usize, usize, Role)>,
}

fn parse_table(text: &str) -> Result<Table> {
    let mut format = None;
    let mut name = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut entry = None;
    let mut exit = None;
    let mut edges = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let bad = |msg: String| Error::Parse { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut words = body.split_whitespace();
        let head = words.next().expect("nonempty line");
        let rest: Vec<&str> = words.collect();
        let index = |w: &str| {
            vertices
                .iter()
                .position(|v| v == w)
                .ok_or_else(|| bad(format!("unknown vertex {w}")))
        };
        match head {
            "format" => format = rest.first().map(|s| s.to_string()),
            "gadget" => name = rest.first().map(|s| s.to_string()),
            "vertices" => vertices = rest.iter().map(|s| s.to_string()).collect(),
            "entry" | "exit" => {
                let pair = match rest.as_slice() {
                    [] if head == "exit" => None,
                    [a, b] => Some([index(a)?, index(b)?]),
                    _ => return Err(bad(format!("{head} takes two vertices"))),
                };
                if head == "entry" {
                    entry = pair;
                } else {
                    exit = pair;
                }
            }
            "edge" => {
                let [a, b, role] = rest.as_slice() else {
                    return Err(bad("edge takes two vertices and a role".into()));
                };
                let role = match *role {
                    "t1" => Role::T1,
                    "t2" => Role::T2,
                    "both" => Role::Both,
                    other => return Err(bad(format!("unknown role {other}"))),
                };
                edges.push((index(a)?, index(b)?, role));
            }
            other => return Err(bad(format!("unknown directive {other}"))),
        }
    }
    if format.as_deref() != Some("1") {
        return Err(Error::Parse {
            line: 0,
            msg: "unsupported gadget format".into(),
        });
    }
    Ok(Table {
        name: name.ok_or_else(|| Error::Parse {
            line: 0,
            msg: "missing gadget name".into(),
        })?,
        vertices,
        entry: entry.ok_or_else(|| Error::Parse {
            line: 0,
            msg: "missing entry ports".into(),
        })?,
        exit,
        edges,
    })
}

fn table(kind: GadgetKind) -> Table {
    let text = match kind {
        GadgetKind::H => H_DATA,
        GadgetKind::Hprime => HPRIME_DATA,
        GadgetKind::Hplus => HPLUS_DATA,
    };
    parse_table(text).expect("bundled gadget tables parse")
}

/// A gadget or chain with its two attachment ports.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub port1: usize,
    pub port2: usize,
    /// Number of H blocks.
    pub h_blocks: usize,
    /// Number of H' blocks.
    pub hprime_blocks: usize,
    pub capped: bool,
    /// Vertex labels such as `H1.apex` or `Hprime2.y'`.
    pub labels: Vec<String>,
    /// Lifting role of every edge, keyed by sorted endpoints.
    pub roles: BTreeMap<Edge, Role>,
}

struct ChainBuilder {
    labels: Vec<String>,
    roles: BTreeMap<Edge, Role>,
    ports: [usize; 2],
    exit: Option<[usize; 2]>,
    counts: BTreeMap<String, usize>,
}

impl ChainBuilder {
    fn start(kind: GadgetKind) -> ChainBuilder {
        let mut b = ChainBuilder {
            labels: Vec::new(),
            roles: BTreeMap::new(),
            ports: [0, 0],
            exit: None,
            counts: BTreeMap::new(),
        };
        b.add(kind, None);
        b
    }

    fn add(&mut self, kind: GadgetKind, attach: Option<[usize; 2]>) {
        let t = table(kind);
        let count = self.counts.entry(t.name.clone()).or_insert(0);
        *count += 1;
        let prefix = format!("{}{}", t.name, count);
        let mut ids = vec![usize::MAX; t.vertices.len()];
        if let Some(at) = attach {
            ids[t.entry[0]] = at[0];
            ids[t.entry[1]] = at[1];
        }
        for (x, name) in t.vertices.iter().enumerate() {
            if ids[x] == usize::MAX {
                ids[x] = self.labels.len();
                self.labels.push(format!("{prefix}.{name}"));
            }
        }
        for &(a, b, role) in &t.edges {
            self.roles.insert(key(ids[a], ids[b]), role);
        }
        if attach.is_none() {
            self.ports = [ids[t.entry[0]], ids[t.entry[1]]];
        }
        self.exit = t.exit.map(|[a, b]| [ids[a], ids[b]]);
    }

    fn extend(&mut self, kind: GadgetKind) -> Result<()> {
        let Some(at) = self.exit else {
            return domain("the chain is capped");
        };
        self.add(kind, Some(at));
        Ok(())
    }

    fn finish(self, h_blocks: usize, hprime_blocks: usize, capped: bool) -> GadgetInstance {
        let graph = Graph::from_edges(
            self.labels.len(),
            self.roles.keys().copied().collect::<Vec<_>>(),
        )
        .expect("gadget tables describe simple graphs");
        GadgetInstance {
            graph,
            port1: self.ports[0],
            port2: self.ports[1],
            h_blocks,
            hprime_blocks,
            capped,
            labels: self.labels,
            roles: self.roles,
        }
    }
}

/// A single gadget; its ports are the entry vertices p1, p2.
pub fn build_gadget(kind: GadgetKind) -> GadgetInstance {
    let b = ChainBuilder::start(kind);
    let (h, hp, cap) = match kind {
        GadgetKind::H => (1, 0, false),
        GadgetKind::Hprime => (0, 1, false),
        GadgetKind::Hplus => (0, 0, true),
    };
    b.finish(h, hp, cap)
}

/// H_{i,j} on 5i + 6j + 3 vertices.
pub fn build_chain(i: usize, j: usize) -> Result<GadgetInstance> {
    if i < 1 || j < 1 {
        return domain("build_chain needs i >= 1 and j >= 1");
    }
    let mut b = ChainBuilder::start(GadgetKind::H);
    for _ in 1..i {
        b.extend(GadgetKind::H)?;
    }
    for _ in 0..j {
        b.extend(GadgetKind::Hprime)?;
    }
    b.extend(GadgetKind::Hplus)?;
    Ok(b.finish(i, j, true))
}

/// G' together with where every chain vertex landed.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    pub i: usize,
    pub j: usize,
    /// Chain vertex id to G' vertex id.
    pub chain_to_host: Vec<usize>,
    pub chain: GadgetInstance,
}

#[derive(Serialize)]
pub struct PortMap {
    pub u: usize,
    pub v: usize,
    pub i: usize,
    pub j: usize,
    /// Chain vertex label to G' id.
    pub vertices: BTreeMap<String, usize>,
}

impl Reduction {
    pub fn port_map(&self) -> PortMap {
        PortMap {
            u: self.u,
            v: self.v,
            i: self.i,
            j: self.j,
            vertices: self
                .chain
                .labels
                .iter()
                .cloned()
                .zip(self.chain_to_host.iter().copied())
                .collect(),
        }
    }
}

/// G' = g ∪ H_{i,j} with port1 identified with u and port2 with v. Vertices
/// of g keep their ids; the other chain vertices follow in chain order.
pub fn reduce(g: &Graph, u: usize, v: usize, i: usize, j: usize) -> Result<Reduction> {
    if u == v {
        return domain("reduce needs distinct u and v");
    }
    if u >= g.n() || v >= g.n() {
        return domain("u and v must be vertices of g");
    }
    let chain = build_chain(i, j)?;
    let mut next = g.n();
    let chain_to_host: Vec<usize> = (0..chain.graph.n())
        .map(|x| {
            if x == chain.port1 {
                u
            } else if x == chain.port2 {
                v
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.extend(
        chain
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| key(chain_to_host[a], chain_to_host[b])),
    );
    let graph = Graph::from_edges(next, edges)?;
    Ok(Reduction {
        graph,
        u,
        v,
        i,
        j,
        chain_to_host,
        chain,
    })
}

/// Extends two CISTs of g with u ∈ I(T1), v ∈ I(T2) to two
/// (i,j)-disjoint spanning trees of G' by the per-gadget edge roles.
pub fn lift_trees(g: &Graph, cists: &TreeFamily, red: &Reduction) -> Result<TreeFamily> {
    let invalid = |msg: &str| Err(Error::InvalidCertificate(msg.to_string()));
    if cists.host() != g.fingerprint() {
        return invalid("the trees do not span g");
    }
    if cists.k() != 2 {
        return invalid("lifting needs exactly two trees");
    }
    if !verify_ij_disjoint(cists, 0, 0).is_ok() {
        return invalid("the trees are not completely independent");
    }
    let [t1, t2] = [&cists.trees()[0], &cists.trees()[1]];
    if !t1.is_inner(red.u) || !t2.is_inner(red.v) {
        return invalid("u must be inner in T1 and v inner in T2");
    }
    let mut lists = [t1.edges().to_vec(), t2.edges().to_vec()];
    for (&(a, b), &role) in &red.chain.roles {
        let e = key(red.chain_to_host[a], red.chain_to_host[b]);
        if matches!(role, Role::T1 | Role::Both) {
            lists[0].push(e);
        }
        if matches!(role, Role::T2 | Role::Both) {
            lists[1].push(e);
        }
    }
    let [a, b] = lists;
    TreeFamily::from_edge_lists(&red.graph, vec![a, b])
}
