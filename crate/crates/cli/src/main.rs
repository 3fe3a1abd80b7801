//! `dst`: generators, constructions, verifiers, exact oracles, bounds and the
//! gadget reduction for (i,j)-disjoint spanning trees.
//!
//! Exit status: 0 claim holds or artifact written, 1 claim refuted, 2 usage,
//! parse or domain error, 3 search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dst_core::bounds;
use dst_core::constructions::{self, BaseGraph};
use dst_core::graph::{self, CliquePath, Edge, Graph};
use dst_core::oracle::{self, DstValue, Existence, FamilyOptions, ImbalanceMode, SearchBudget};
use dst_core::reduction;
use dst_core::trees::{
    verify_ij_disjoint, verify_lcist, verify_lrooted_partition, verify_rooted_cds, CdsCert,
    FamilyCert, PartitionCert, TreeFamily,
};
use dst_core::Error;

#[derive(Parser)]
#[command(
    name = "dst",
    version,
    about = "Tools for (i,j)-disjoint spanning trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Build a family or set certificate for a known graph class.
    Construct(ConstructArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Run an exhaustive search.
    Oracle(OracleArgs),
    /// Evaluate a bound or predicate.
    Bounds(BoundsArgs),
    /// Attach the gadget chain H_{i,j} to a graph at u and v.
    Reduce(ReduceArgs),
    /// Write a graph, optionally with a tree family, in DOT.
    ExportDot(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Complete,
    Path,
    Cycle,
    Star,
    Grid,
    Cylinder,
    CompleteBipartite,
    GluedCliques,
    Kriesell,
    PnStar,
    PnPlus,
    Square,
}

#[derive(Args)]
struct GenArgs {
    family: GenFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Base graph for `square`.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructName {
    #[value(name = "complete-0l")]
    Complete0l,
    #[value(name = "complete-1l")]
    Complete1l,
    Cylinder,
    Grid,
    Square,
    Interval,
    Base,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseChoice {
    C4,
    K33,
}

#[derive(Args)]
struct ConstructArgs {
    name: ConstructName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Base graph for `square`.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Closed intervals for `interval`, as `lo:hi,lo:hi,...`.
    #[arg(long)]
    intervals: Option<String>,
    #[arg(long, value_enum)]
    which: Option<BaseChoice>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the host graph with the trees styled per index.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Also write the host graph as an edge list.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    /// Tree family against (i, j).
    Ij,
    /// Pairwise disjoint connected dominating sets.
    Cds,
    /// l-rooted connected dominating sets.
    RootedCds,
    /// l-CIST partition.
    Lcist,
    /// l-rooted partition.
    Rooted,
}

#[derive(Args)]
struct VerifyArgs {
    kind: VerifyKind,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cert: PathBuf,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    /// Overrides the l recorded in the certificate.
    #[arg(long)]
    l: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleQuery {
    Exists,
    Dst,
    Domatic,
    Imbalance,
    Trees,
}

#[derive(Clone, Copy, ValueEnum)]
enum ImbalanceChoice {
    CdsPair,
    CistPair,
}

#[derive(Args)]
struct OracleArgs {
    query: OracleQuery,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    i: usize,
    #[arg(long, default_value_t = 0)]
    j: usize,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<ImbalanceChoice>,
    /// `trees:N,tuples:N,seconds:S`
    #[arg(long)]
    budget: Option<String>,
    /// Only families of pairwise distinct trees.
    #[arg(long)]
    distinct: bool,
    /// Skip the edge-count refutation.
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundName {
    Edge,
    HartnellRall,
    Dirac,
    Ore,
    Kriesell,
    Audit,
}

#[derive(Args)]
struct BoundsArgs {
    name: BoundName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    i: usize,
    #[arg(long, default_value_t = 0)]
    j: usize,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family certificate for `audit`.
    #[arg(long)]
    family: Option<PathBuf>,
    #[arg(long)]
    budget: Option<String>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    /// Edge list of G'; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON port map; standard error when absent.
    #[arg(long)]
    port_map: Option<PathBuf>,
    /// Two CISTs of the input graph to lift onto G'.
    #[arg(long)]
    family: Option<PathBuf>,
    /// Where to write the lifted family certificate.
    #[arg(long, requires = "family")]
    lifted_out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    family: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Result of a subcommand that ran to completion.
enum Outcome {
    Holds,
    Refuted,
}

fn need<T>(v: Option<T>, flag: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| Error::Domain(format!("--{flag} is required")).into())
}

fn read_graph(p: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    Ok(graph::parse_edge_list(&text)?)
}

fn read_json<T: serde::de::DeserializeOwned>(p: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        }
        .into()
    })
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, v: &Value) -> anyhow::Result<()> {
    emit(out, &format!("{}\n", serde_json::to_string_pretty(v)?))
}

fn family_cert(f: &TreeFamily) -> Value {
    serde_json::to_value(FamilyCert::from_family(f)).expect("certificates serialize")
}

fn budget_of(s: &Option<String>) -> anyhow::Result<SearchBudget> {
    Ok(match s {
        Some(s) => s.parse()?,
        None => SearchBudget::default(),
    })
}

fn gen(a: GenArgs) -> anyhow::Result<Outcome> {
    let g = match a.family {
        GenFamily::Complete => graph::complete(need(a.n, "n")?)?,
        GenFamily::Path => graph::path(need(a.n, "n")?)?,
        GenFamily::Cycle => graph::cycle(need(a.n, "n")?)?,
        GenFamily::Star => graph::star(need(a.n, "n")?)?,
        GenFamily::Grid => graph::grid(need(a.n1, "n1")?, need(a.n2, "n2")?)?,
        GenFamily::Cylinder => graph::cylinder(need(a.n1, "n1")?, need(a.n2, "n2")?)?,
        GenFamily::CompleteBipartite => {
            graph::complete_bipartite(need(a.a, "a")?, need(a.b, "b")?)?
        }
        GenFamily::GluedCliques => graph::glued_cliques(need(a.n, "n")?)?,
        GenFamily::Kriesell => graph::kriesell(need(a.k, "k")?, need(a.l, "l")?)?,
        GenFamily::PnStar => graph::pn_star(need(a.n, "n")?)?.graph,
        GenFamily::PnPlus => graph::pn_plus(need(a.n, "n")?)?.graph,
        GenFamily::Square => graph::square(&read_graph(&need(a.graph, "graph")?)?)?,
    };
    emit(a.out.as_deref(), &graph::to_edge_list(&g))?;
    Ok(Outcome::Holds)
}

fn parse_intervals(s: &str) -> anyhow::Result<Vec<(i64, i64)>> {
    s.split(',')
        .map(|part| {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| Error::Domain(format!("interval `{part}` is not lo:hi")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Domain(format!("interval `{part}` has a bad endpoint")))
            };
            Ok((num(lo)?, num(hi)?))
        })
        .collect()
}

fn construct(a: ConstructArgs) -> anyhow::Result<Outcome> {
    let (host, cert, trees): (Graph, Value, Option<Vec<Vec<Edge>>>) = match a.name {
        ConstructName::Complete0l | ConstructName::Complete1l => {
            let (n, l) = (need(a.n, "n")?, need(a.l, "l")?);
            let f = match a.name {
                ConstructName::Complete0l => constructions::complete_0l(n, l)?,
                _ => constructions::complete_1l(n, l)?,
            };
            (graph::complete(n)?, family_cert(&f), Some(f.edge_lists()))
        }
        ConstructName::Cylinder => {
            let (n1, n2) = (need(a.n1, "n1")?, need(a.n2, "n2")?);
            let f = constructions::cylinder_trees(n1, n2)?;
            (
                graph::cylinder(n1, n2)?,
                family_cert(&f),
                Some(f.edge_lists()),
            )
        }
        ConstructName::Grid => {
            let (n1, n2) = (need(a.n1, "n1")?, need(a.n2, "n2")?);
            let r = constructions::grid_rooted_cds(n1, n2)?;
            let f = r.trees()?;
            let cert = json!({
                "sets": CdsCert { sets: vec![r.d1.clone(), r.d2.clone()], l: 1 },
                "root": r.root,
                "repair": r.repair,
                "trees": family_cert(&f),
            });
            (graph::grid(n1, n2)?, cert, Some(f.edge_lists()))
        }
        ConstructName::Square => {
            let base = read_graph(&need(a.graph, "graph")?)?;
            let f = constructions::square_trees(&base)?;
            (graph::square(&base)?, family_cert(&f), Some(f.edge_lists()))
        }
        ConstructName::Interval => {
            let ivs = parse_intervals(&need(a.intervals, "intervals")?)?;
            let k = need(a.k, "k")?;
            let (g, cp): (Graph, CliquePath) = graph::interval_graph(&ivs)?;
            let sets = constructions::interval_cds(&cp, k)?;
            let cert = serde_json::to_value(CdsCert { sets, l: 0 })?;
            (g, cert, None)
        }
        ConstructName::Base => {
            let which = match need(a.which, "which")? {
                BaseChoice::C4 => BaseGraph::C4,
                BaseChoice::K33 => BaseGraph::K33,
            };
            let (g, sets) = constructions::base_cds(which);
            (g, serde_json::to_value(CdsCert { sets, l: 0 })?, None)
        }
    };
    emit_json(a.out.as_deref(), &cert)?;
    if let Some(p) = &a.dot {
        fs::write(p, graph::to_dot(&host, trees.as_deref()))?;
    }
    if let Some(p) = &a.graph_out {
        fs::write(p, graph::to_edge_list(&host))?;
    }
    Ok(Outcome::Holds)
}

fn verdict(ok: bool, report: Value) -> anyhow::Result<Outcome> {
    emit_json(None, &json!({ "holds": ok, "report": report }))?;
    Ok(if ok { Outcome::Holds } else { Outcome::Refuted })
}

fn verify(a: VerifyArgs) -> anyhow::Result<Outcome> {
    let g = read_graph(&a.graph)?;
    match a.kind {
        VerifyKind::Ij => {
            let cert: FamilyCert = read_json(&a.cert)?;
            let f = match cert.to_family(&g) {
                Ok(f) => f,
                Err(e @ Error::InvalidCertificate(_)) => {
                    return verdict(false, json!({ "error": e.to_string() }));
                }
                Err(e) => return Err(e.into()),
            };
            let r = verify_ij_disjoint(&f, need(a.i, "i")?, need(a.j, "j")?);
            verdict(r.is_ok(), serde_json::to_value(&r)?)
        }
        VerifyKind::Cds | VerifyKind::RootedCds => {
            let cert: CdsCert = read_json(&a.cert)?;
            let l = match a.kind {
                VerifyKind::Cds => 0,
                _ => a.l.unwrap_or(cert.l),
            };
            let r = verify_rooted_cds(&g, &cert.sets, l);
            verdict(r.is_ok(), serde_json::to_value(&r)?)
        }
        VerifyKind::Lcist | VerifyKind::Rooted => {
            let cert: PartitionCert = read_json(&a.cert)?;
            let l = a.l.unwrap_or(cert.l);
            let p = cert.to_partition(g.n())?;
            if let VerifyKind::Lcist = a.kind {
                let r = verify_lcist(&g, &p, l)?;
                verdict(r.is_ok(), serde_json::to_value(&r)?)
            } else {
                let r = verify_lrooted_partition(&g, &p, l)?;
                verdict(r.is_ok(), serde_json::to_value(&r)?)
            }
        }
    }
}

fn oracle_cmd(a: OracleArgs) -> anyhow::Result<Outcome> {
    let g = read_graph(&a.graph)?;
    let budget = budget_of(&a.budget)?;
    let opts = FamilyOptions {
        prune: !a.no_prune,
        distinct: a.distinct,
    };
    let (query, verdict, witness, stats, holds) = match a.query {
        OracleQuery::Exists => {
            let k = need(a.k, "k")?;
            let (res, stats) = oracle::exists_family(&g, k, a.i, a.j, opts, &budget)?;
            let q = json!({ "kind": "exists", "k": k, "i": a.i, "j": a.j });
            match res {
                Existence::Witness(f) => (q, "witness", family_cert(&f), stats, true),
                Existence::Refuted => (q, "refuted", Value::Null, stats, false),
            }
        }
        OracleQuery::Dst => {
            let (res, stats) = oracle::dst_value(&g, a.i, a.j, a.k_max, opts, &budget)?;
            let mut q = json!({ "kind": "dst", "i": a.i, "j": a.j, "k_max": a.k_max });
            match res {
                DstValue::Unbounded => (q, "unbounded", Value::Null, stats, true),
                DstValue::Finite(k, f) => {
                    q["value"] = json!(k);
                    (
                        q,
                        "witness",
                        f.as_ref().map_or(Value::Null, family_cert),
                        stats,
                        true,
                    )
                }
            }
        }
        OracleQuery::Domatic => {
            let (d, sets, stats) = oracle::connected_domatic(&g, &budget)?;
            let q = json!({ "kind": "domatic", "value": d });
            (
                q,
                "witness",
                serde_json::to_value(CdsCert { sets, l: 0 })?,
                stats,
                true,
            )
        }
        OracleQuery::Imbalance => {
            let mode = match need(a.mode, "mode")? {
                ImbalanceChoice::CdsPair => ImbalanceMode::CdsPair,
                ImbalanceChoice::CistPair => ImbalanceMode::CistPair,
            };
            let (best, stats) = oracle::min_imbalance(&g, mode, &budget)?;
            let name = match mode {
                ImbalanceMode::CdsPair => "cds-pair",
                ImbalanceMode::CistPair => "cist-pair",
            };
            let q = json!({ "kind": "imbalance", "mode": name, "value": best });
            match best {
                Some(_) => (q, "witness", Value::Null, stats, true),
                None => (q, "refuted", Value::Null, stats, false),
            }
        }
        OracleQuery::Trees => {
            let (trees, stats) = oracle::enumerate_spanning_trees(&g, &budget)?;
            let q = json!({ "kind": "trees", "value": trees.len() });
            (q, "witness", Value::Null, stats, true)
        }
    };
    let body = json!({
        "query": query,
        "verdict": verdict,
        "witness": witness,
        "stats": serde_json::to_value(stats)?,
    });
    emit_json(a.out.as_deref(), &body)?;
    Ok(if holds {
        Outcome::Holds
    } else {
        Outcome::Refuted
    })
}

fn bounds_cmd(a: BoundsArgs) -> anyhow::Result<Outcome> {
    let (body, holds) = match a.name {
        BoundName::Edge => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let b = bounds::edge_lower_bound(n, k, a.i, a.j);
            (
                json!({ "n": n, "k": k, "i": a.i, "j": a.j, "edge_lower_bound": b }),
                true,
            )
        }
        BoundName::HartnellRall => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            (
                json!({ "n": n, "k": k, "bound": bounds::hartnell_rall_bound(n, k) }),
                true,
            )
        }
        BoundName::Dirac | BoundName::Ore => {
            let g = read_graph(&need(a.graph, "graph")?)?;
            let holds = match a.name {
                BoundName::Dirac => bounds::dirac_holds(&g),
                _ => bounds::ore_holds(&g),
            };
            (
                json!({ "holds": holds, "min_degree": g.min_degree(), "n": g.n() }),
                holds,
            )
        }
        BoundName::Kriesell => {
            let (k, l) = (need(a.k, "k")?, need(a.l, "l")?);
            let check = bounds::certify_kriesell_negative(k, a.i, l, &budget_of(&a.budget)?)?;
            (serde_json::to_value(&check)?, check.confirms())
        }
        BoundName::Audit => {
            let g = read_graph(&need(a.graph, "graph")?)?;
            let cert: FamilyCert = read_json(&need(a.family, "family")?)?;
            let f = cert.to_family(&g)?;
            let rows = bounds::audit_family("input", &g, &f);
            let holds = rows.iter().all(|r| r.satisfied);
            (serde_json::to_value(&rows)?, holds)
        }
    };
    emit_json(None, &body)?;
    Ok(if holds {
        Outcome::Holds
    } else {
        Outcome::Refuted
    })
}

fn reduce_cmd(a: ReduceArgs) -> anyhow::Result<Outcome> {
    let g = read_graph(&a.graph)?;
    let red = reduction::reduce(&g, a.u, a.v, a.i, a.j)?;
    emit(a.out.as_deref(), &graph::to_edge_list(&red.graph))?;
    let map = serde_json::to_string_pretty(&red.port_map())?;
    match &a.port_map {
        Some(p) => fs::write(p, format!("{map}\n"))?,
        None => eprintln!("{map}"),
    }
    if let Some(p) = &a.family {
        let cert: FamilyCert = read_json(p)?;
        let f = cert.to_family(&g)?;
        let lifted = reduction::lift_trees(&g, &f, &red)?;
        let text = format!("{}\n", serde_json::to_string_pretty(&family_cert(&lifted))?);
        match &a.lifted_out {
            Some(out) => fs::write(out, text)?,
            None => eprint!("{text}"),
        }
    }
    Ok(Outcome::Holds)
}

fn export_dot(a: ExportArgs) -> anyhow::Result<Outcome> {
    let g = read_graph(&a.graph)?;
    let trees = match &a.family {
        Some(p) => {
            let cert: FamilyCert = read_json(p)?;
            Some(cert.to_family(&g)?.edge_lists())
        }
        None => None,
    };
    emit(a.out.as_deref(), &graph::to_dot(&g, trees.as_deref()))?;
    Ok(Outcome::Holds)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle_cmd(a),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Reduce(a) => reduce_cmd(a),
        Command::ExportDot(a) => export_dot(a),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded(_)) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Refuted) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
