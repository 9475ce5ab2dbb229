use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use supergraph::analytics::{components, diameter, reduced_graph, verify_group, Diameter, GroupReport};
use supergraph::catalog::{default_catalog, parse_catalog, parse_group_with_budget};
use supergraph::group::DEFAULT_BUDGET;
use supergraph::scan::{conjecture_scan, scan_degree};
use supergraph::spectrum::{
    dominant_orders, predict_connectivity, quotient_components, quotient_diameter, quotient_graph, spectrum_family,
    Family, DEFAULT_CAP,
};
use supergraph::supergraph::build;
use supergraph::{BaseGraph, Error, GraphKind, Relation};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "supergraph", version, about = "Super graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one super graph of an explicit group.
    Build(BuildArgs),
    /// Check every characterisation over a group catalog.
    Verify(VerifyArgs),
    /// Order spectrum and reduced quotient analysis of S_n or A_n.
    Spectrum(SpectrumArgs),
    /// Connectivity and diameter scan over a range of degrees.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Power,
    EnhancedPower,
    Commuting,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Equality,
    Conjugacy,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Symmetric,
    Alternating,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct BuildArgs {
    /// Group label such as D14, Q8, S4 or Z2xZ6.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum)]
    graph: GraphArg,
    #[arg(long, value_enum, default_value = "equality")]
    relation: RelationArg,
    /// Drop dominant vertices.
    #[arg(long)]
    reduced: bool,
    #[arg(long, value_enum, default_value = "dot")]
    format: GraphFormat,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Largest group order built explicitly.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive)]
    budget: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// One group label per line; `#` starts a comment. Defaults to the built-in catalog.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive)]
    budget: usize,
    /// Also check the symbolic predictions for S_n and A_n with 4 <= n <= this degree.
    #[arg(long)]
    symbolic: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = positive)]
    cap: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = positive)]
    cap: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl From<GraphArg> for BaseGraph {
    fn from(g: GraphArg) -> Self {
        match g {
            GraphArg::Power => BaseGraph::Power,
            GraphArg::EnhancedPower => BaseGraph::EnhancedPower,
            GraphArg::Commuting => BaseGraph::Commuting,
        }
    }
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Self {
        match r {
            RelationArg::Equality => Relation::Equality,
            RelationArg::Conjugacy => Relation::Conjugacy,
            RelationArg::Order => Relation::Order,
        }
    }
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Symmetric => Family::Symmetric,
            FamilyArg::Alternating => Family::Alternating,
        }
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Mismatch(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialise");
    s.push('\n');
    s
}

fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidParameter("--workers must be positive".into()).into()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn cmd_build(a: BuildArgs) -> Result<(), Failure> {
    let g = parse_group_with_budget(&a.group, a.budget)?;
    let kind = GraphKind::new(a.graph.into(), a.relation.into());
    let mut gr = build(&g, kind);
    if a.reduced {
        gr = reduced_graph(&gr);
    }
    let name = format!("{} {}{}", g.label(), kind, if a.reduced { " reduced" } else { "" });
    let text = match a.format {
        GraphFormat::Dot => gr.to_dot(&name, |v| {
            let x = gr.label(v);
            format!("{x} o={}", g.order_of(x))
        }),
        GraphFormat::Json => {
            let vertices: Vec<Value> = (0..gr.n_vertices())
                .map(|v| json!({ "id": v, "element": gr.label(v), "order": g.order_of(gr.label(v)) }))
                .collect();
            let edges: Vec<[usize; 2]> = gr.edges().map(|(u, v)| [u, v]).collect();
            pretty(&json!({
                "group": g.label(),
                "group_order": g.len(),
                "graph": kind.to_string(),
                "reduced": a.reduced,
                "vertices": vertices,
                "edges": edges,
                "components": components(&gr),
                "diameter": diameter(&gr).to_string(),
            }))
        }
    };
    emit(&a.output, &text)
}

/// Symbolic checks for one degree: predicted vs computed components,
/// dominance by the identity alone, and the diameter bound.
fn symbolic_row(family: Family, n: usize) -> Result<(Value, Vec<String>), Error> {
    let s = spectrum_family(family, n, DEFAULT_CAP)?;
    let q = quotient_graph(&s, true);
    let comps = quotient_components(&q);
    let d = quotient_diameter(&q);
    let predicted = predict_connectivity(n, family)?;
    let row = scan_degree(family, n, DEFAULT_CAP)?;
    let dominant = dominant_orders(&s);
    let mut bad = Vec::new();
    if dominant != [1] {
        bad.push(format!("{family} {n}: dominant orders {dominant:?}, expected [1] (dominance)"));
    }
    if predicted.is_connected != comps.is_connected || predicted.components != comps.count {
        bad.push(format!(
            "{family} {n}: {} components computed, {} predicted (connectivity)",
            comps.count, predicted.components
        ));
    }
    if comps.is_connected && (d.value().is_none_or(|v| v > 3) || row.witness.is_some() != (d == Diameter::Finite(3))) {
        bad.push(format!("{family} {n}: diameter {d}, witness {} (diameter)", row.witness.is_some()));
    }
    let value = json!({
        "family": family,
        "n": n,
        "dominant_orders": dominant,
        "components": comps.count,
        "predicted_components": predicted.components,
        "diameter": d.to_string(),
        "witness": row.witness,
        "consistent": bad.is_empty(),
    });
    Ok((value, bad))
}

fn report_csv(reports: &[GroupReport]) -> String {
    let mut s = String::from("group,check,subject,observed,predicted,condition,theorem_id,consistent\n");
    let opt = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
    for r in reports {
        for v in &r.equalities {
            s += &format!(
                "{},equality,{}={},{},{},{},{},{}\n",
                r.label,
                v.pair.0,
                v.pair.1,
                v.graphs_equal,
                opt(v.predicted),
                v.condition_name.as_deref().unwrap_or(""),
                v.theorem_id,
                v.consistent()
            );
        }
        for v in &r.completeness {
            s += &format!(
                "{},complete,{},{},{},{},,{}\n",
                r.label,
                v.graph,
                v.complete,
                v.predicted,
                v.condition_name,
                v.consistent()
            );
        }
        for c in &r.containments {
            s += &format!("{},contained,{}<={},{},true,,,{}\n", r.label, c.smaller, c.larger, c.holds, c.holds);
        }
        let d = &r.dominance;
        s += &format!("{},dominant,{},{},{},l={},,{}\n", r.label, COMMUTING_ORDER, d.dominant.len(), d.predicted.len(), d.l, d.consistent());
    }
    s
}

const COMMUTING_ORDER: GraphKind = GraphKind::new(BaseGraph::Commuting, Relation::Order);

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let labels = match &a.catalog {
        Some(path) => parse_catalog(&fs::read_to_string(path)?)?,
        None => default_catalog(),
    };
    let groups = labels
        .iter()
        .map(|l| parse_group_with_budget(l, a.budget))
        .collect::<Result<Vec<_>, Error>>()?;
    let reports: Vec<GroupReport> = with_workers(a.workers, || groups.par_iter().map(verify_group).collect())?;
    let mut mismatches: Vec<String> = reports.iter().flat_map(GroupReport::mismatches).collect();

    let mut symbolic = Vec::new();
    if let Some(to) = a.symbolic {
        let degrees: Vec<(Family, usize)> = [Family::Symmetric, Family::Alternating]
            .into_iter()
            .flat_map(|f| (4..=to).map(move |n| (f, n)))
            .collect();
        let rows = with_workers(a.workers, || {
            degrees.par_iter().map(|&(f, n)| symbolic_row(f, n)).collect::<Result<Vec<_>, Error>>()
        })??;
        for (v, bad) in rows {
            symbolic.push(v);
            mismatches.extend(bad);
        }
    }

    let text = match a.format {
        ReportFormat::Json => pretty(&json!({
            "groups": reports,
            "symbolic": symbolic,
            "mismatches": mismatches,
            "consistent": mismatches.is_empty(),
        })),
        ReportFormat::Csv => report_csv(&reports),
    };
    emit(&a.output, &text)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(mismatches))
    }
}

fn cmd_spectrum(a: SpectrumArgs) -> Result<(), Failure> {
    let family: Family = a.family.into();
    let s = spectrum_family(family, a.n, a.cap)?;
    let q = quotient_graph(&s, true);
    let comps = quotient_components(&q);
    let mut v = json!({
        "family": family,
        "n": a.n,
        "orders": s.orders,
        "maximal_orders": s.mu,
        "l": s.l(),
        "dominant_orders": dominant_orders(&s),
        "counts": s.counts,
        "reduced_quotient": {
            "orders": q.orders,
            "edges": q.graph.edges().map(|(u, w)| [q.orders[u], q.orders[w]]).collect::<Vec<_>>(),
            "components": comps,
            "diameter": quotient_diameter(&q).to_string(),
        },
    });
    if a.n >= 4 {
        let row = scan_degree(family, a.n, a.cap)?;
        v["predicted"] = json!(predict_connectivity(a.n, family)?);
        v["witness"] = json!(row.witness);
    }
    emit(&a.output, &pretty(&v))
}

fn cmd_scan(a: ScanArgs) -> Result<(), Failure> {
    let report = with_workers(a.workers, || conjecture_scan(a.family.into(), a.from, a.to, a.cap))??;
    emit(&a.output, &report.to_csv())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Scan(a) => cmd_scan(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(list)) => {
            for m in &list {
                eprintln!("mismatch: {m}");
            }
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::BudgetExceeded { .. }) { EXIT_BUDGET } else { EXIT_USAGE })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
