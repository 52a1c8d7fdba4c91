mod factor;
mod render;
mod search;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use wreathlab::invariants::is_complete;
use wreathlab::metric::{antipodal, antipodal_of_wreath, hamiltonian_antipodal, WreathMetric};
use wreathlab::products::{cartesian_product, direct_product, wreath_product};
use wreathlab::report::{wreath_report, FactorInfo, ReportOptions};
use wreathlab::tsp::{rho_closed_form, ClosedFamily};
use wreathlab::{
    Budget, Error, Graph, Invariant, InvariantReport, MethodFilter, RhoSolver, VertexSubset,
    WreathCodec,
};

use factor::{parse_labels, resolve, Factor};
use render::{GraphFormat, Labels, TableFormat};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Budget(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "wreathlab",
    version,
    about = "Wreath products of graphs and their distance-based invariants"
)]
struct Cli {
    /// Largest product (in vertices) that may be built explicitly
    #[arg(long, global = true, env = "WREATHLAB_BUDGET")]
    max_vertices: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    /// Base graph G: family:size, file:PATH or paw
    #[arg(long)]
    g: String,
    /// Lamp graph H
    #[arg(long)]
    h: String,
}

#[derive(Args)]
struct Sink {
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductArg {
    Wreath,
    Cartesian,
    Direct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AntipodalKind {
    /// A(G): pairs at distance diam(G)
    Classic,
    /// A_Ha(G): pairs at Hamiltonian distance diam_Ha(G), loops allowed
    Hamiltonian,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AntipodalMethod {
    /// A(H)^{×n} × A_Ha(G), relabelled to product order
    Formula,
    /// Antipodal graph of the built product
    Bruteforce,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RhoMethod {
    /// Held-Karp dynamic programme
    Dp,
    /// Case formulas for complete graphs and naturally labelled paths
    Closed,
    /// Every visiting order (small sets only)
    Permutation,
}

#[derive(Subcommand)]
enum Command {
    /// Build a product graph and print it
    Build {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = ProductArg::Wreath)]
        product: ProductArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Compute invariants of G ≀ H
    Index {
        #[command(flatten)]
        pair: Pair,
        /// zagreb1, zagreb2, zagreb, wiener, szeged, diameter or all
        #[arg(long, value_delimiter = ',', default_value = "all")]
        invariant: Vec<String>,
        /// bruteforce, formula or all
        #[arg(long, default_value = "all")]
        method: String,
        /// Vouch that G is edge-transitive, enabling the one-edge Szeged shortcut
        #[arg(long)]
        edge_transitive: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        /// Omit timings
        #[arg(long)]
        canonical: bool,
        #[command(flatten)]
        sink: Sink,
    },
    /// Compare formulas with brute force on one pair or on the built-in corpus
    Verify {
        #[arg(long, requires = "h")]
        g: Option<String>,
        #[arg(long, requires = "g")]
        h: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "all")]
        invariant: Vec<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        #[arg(long)]
        canonical: bool,
        #[command(flatten)]
        sink: Sink,
    },
    /// Antipodal graph of G, or of G ≀ H when --h is given
    Antipodal {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: Option<String>,
        #[arg(long, value_enum, default_value_t = AntipodalKind::Classic)]
        kind: AntipodalKind,
        #[arg(long, value_enum, default_value_t = AntipodalMethod::Formula)]
        method: AntipodalMethod,
        #[arg(long, value_enum, default_value_t = GraphFormat::Table)]
        format: GraphFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Print the matrix of shortest walk lengths through a vertex set
    Rho {
        #[arg(long)]
        g: String,
        /// Comma-separated 1-based labels
        #[arg(long, conflicts_with = "hamiltonian")]
        set: Option<String>,
        /// Use every vertex (Hamiltonian distance)
        #[arg(long)]
        hamiltonian: bool,
        #[arg(long, value_enum, default_value_t = RhoMethod::Dp)]
        method: RhoMethod,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Write a graph or product as DOT
    Export {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: Option<String>,
        #[arg(long, value_enum, default_value_t = ProductArg::Wreath)]
        product: ProductArg,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        sink: Sink,
    },
    /// List non-isomorphic connected graphs with equal Wiener vectors
    SearchWienerVector {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        #[command(flatten)]
        sink: Sink,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) | CliError::Budget(m) | CliError::Io(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(sink: &Sink, text: &str) -> Result<(), CliError> {
    match &sink.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_invariants(names: &[String]) -> Result<Vec<Invariant>, CliError> {
    let mut out = Vec::new();
    for name in names {
        match name.as_str() {
            "all" => out.extend(Invariant::ALL),
            "zagreb" => out.extend([Invariant::FirstZagreb, Invariant::SecondZagreb]),
            other => out.push(other.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn build_product(
    g: &Graph,
    h: &Graph,
    kind: ProductArg,
    budget: &Budget,
) -> Result<(Graph, Labels), CliError> {
    let pair_size = (g.vertex_count() as u128) * (h.vertex_count() as u128);
    Ok(match kind {
        ProductArg::Wreath => {
            let product = wreath_product(g, h, budget)?;
            let codec = WreathCodec::new(g.vertex_count(), h.vertex_count())?;
            (product, Labels::Wreath(codec))
        }
        ProductArg::Cartesian | ProductArg::Direct => {
            if pair_size > budget.max_product_vertices as u128 {
                return Err(CliError::Budget(format!(
                    "product vertices: requested {pair_size}, budget allows {}",
                    budget.max_product_vertices
                )));
            }
            let product = match kind {
                ProductArg::Cartesian => cartesian_product(g, h)?,
                _ => direct_product(g, h),
            };
            (product, Labels::Plain)
        }
    })
}

fn render_report(report: &InvariantReport, format: TableFormat) -> String {
    match format {
        TableFormat::Table => report.to_table(),
        TableFormat::Json => report.to_json(),
        TableFormat::Csv => report.to_csv(),
        TableFormat::Text => report.to_text(),
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let mut budget = Budget::default();
    if let Some(limit) = cli.max_vertices {
        budget.max_product_vertices = limit;
    }
    match cli.command {
        Command::Build {
            pair,
            product,
            format,
            sink,
        } => {
            let (g, h) = (resolve(&pair.g)?, resolve(&pair.h)?);
            let (graph, labels) = build_product(&g.graph, &h.graph, product, &budget)?;
            emit(&sink, &render::graph(&graph, format, "product", &labels))?;
            Ok(true)
        }
        Command::Index {
            pair,
            invariant,
            method,
            edge_transitive,
            format,
            canonical,
            sink,
        } => {
            let (g, h) = (resolve(&pair.g)?, resolve(&pair.h)?);
            let invariants = parse_invariants(&invariant)?;
            let filter: MethodFilter = method.parse()?;
            let options = ReportOptions {
                budget,
                edge_transitive,
                timings: !canonical,
            };
            let report = pair_report(&g, &h, &invariants, filter, &options)?;
            emit(&sink, &render_report(&report, format))?;
            Ok(true)
        }
        Command::Verify {
            g,
            h,
            invariant,
            format,
            canonical,
            sink,
        } => {
            let invariants = parse_invariants(&invariant)?;
            let pairs = match (g, h) {
                (Some(g), Some(h)) => vec![(resolve(&g)?, resolve(&h)?)],
                _ => default_corpus()?,
            };
            let options = ReportOptions {
                budget,
                edge_transitive: false,
                timings: !canonical,
            };
            let (text, ok) = verify(&pairs, &invariants, &options, format)?;
            emit(&sink, &text)?;
            Ok(ok)
        }
        Command::Antipodal {
            g,
            h,
            kind,
            method,
            format,
            sink,
        } => {
            let g = resolve(&g)?;
            let text = match h {
                None => {
                    let graph = match kind {
                        AntipodalKind::Classic => antipodal(&g.graph)?,
                        AntipodalKind::Hamiltonian => hamiltonian_antipodal(&g.graph)?,
                    };
                    render::graph(&graph, format, "antipodal", &Labels::Plain)
                }
                Some(h) => {
                    let h = resolve(&h)?;
                    let codec = WreathCodec::new(g.graph.vertex_count(), h.graph.vertex_count())?;
                    let labels = Labels::Wreath(codec);
                    match method {
                        AntipodalMethod::Formula => {
                            let built = antipodal_of_wreath(&g.graph, &h.graph, &budget)?;
                            let mut text =
                                render::graph(&built.graph, format, "antipodal", &labels);
                            if format == GraphFormat::Table {
                                let _ = writeln!(
                                    text,
                                    "predicted connected: {}",
                                    built.predicted_connected
                                );
                            }
                            text
                        }
                        AntipodalMethod::Bruteforce => {
                            let product = wreath_product(&g.graph, &h.graph, &budget)?;
                            render::graph(&antipodal(&product)?, format, "antipodal", &labels)
                        }
                    }
                }
            };
            emit(&sink, &text)?;
            Ok(true)
        }
        Command::Rho {
            g,
            set,
            hamiltonian,
            method,
            format,
            sink,
        } => {
            let g = resolve(&g)?;
            let n = g.graph.vertex_count();
            let members = if hamiltonian {
                (0..n).collect()
            } else {
                parse_labels(set.as_deref().unwrap_or(""), n)?
            };
            let subset = VertexSubset::from_vertices(n, &members)?;
            let matrix = rho_matrix(&g.graph, &subset, method, &budget)?;
            emit(
                &sink,
                &render::rho_matrix(&matrix, &members, format, &g.spec),
            )?;
            Ok(true)
        }
        Command::Export {
            g,
            h,
            product,
            name,
            sink,
        } => {
            let g = resolve(&g)?;
            let graph = match h {
                None => g.graph,
                Some(h) => build_product(&g.graph, &resolve(&h)?.graph, product, &budget)?.0,
            };
            let name = name.unwrap_or_else(|| "G".to_string());
            emit(&sink, &wreathlab::format::to_dot(&graph, &name))?;
            Ok(true)
        }
        Command::SearchWienerVector {
            min_n,
            max_n,
            format,
            sink,
        } => {
            if max_n > search::MAX_ORDER {
                return Err(CliError::Budget(format!(
                    "search order: requested {max_n}, limit is {}",
                    search::MAX_ORDER
                )));
            }
            let summary = search::search(min_n, max_n);
            emit(&sink, &render_search(&summary, format))?;
            Ok(true)
        }
    }
}

fn pair_report(
    g: &Factor,
    h: &Factor,
    invariants: &[Invariant],
    filter: MethodFilter,
    options: &ReportOptions,
) -> Result<InvariantReport, CliError> {
    let factors = vec![
        FactorInfo::new("g", &g.spec, &g.graph),
        FactorInfo::new("h", &h.spec, &h.graph),
    ];
    Ok(wreath_report(
        &g.graph, &h.graph, factors, invariants, filter, options,
    )?)
}

fn rho_matrix(
    g: &Graph,
    subset: &VertexSubset,
    method: RhoMethod,
    budget: &Budget,
) -> Result<wreathlab::RhoMatrix, CliError> {
    let solver = RhoSolver::new(g, budget)?;
    let n = g.vertex_count();
    let entry: Box<dyn Fn(usize, usize) -> Result<u32, CliError>> = match method {
        RhoMethod::Dp => return Ok(solver.rho_matrix(subset)?),
        RhoMethod::Permutation => Box::new(|u, v| Ok(solver.rho_bruteforce(subset, u, v)?)),
        RhoMethod::Closed => {
            let family = if is_complete(g) {
                ClosedFamily::Complete
            } else if *g == Graph::path(n) {
                ClosedFamily::Path
            } else {
                return Err(CliError::Usage(
                    "closed forms exist only for complete graphs and paths labelled in order"
                        .into(),
                ));
            };
            Box::new(move |u, v| Ok(rho_closed_form(family, n, subset, u, v)?))
        }
    };
    let mut rows = Vec::with_capacity(n);
    for u in 0..n {
        rows.push(
            (0..n)
                .map(|v| entry(u, v))
                .collect::<Result<Vec<u32>, _>>()?,
        );
    }
    Ok(wreathlab::RhoMatrix::from_rows(rows)?)
}

const CORPUS_LIMIT: usize = 2500;
const DISTANCE_CHECK_LIMIT: usize = 200;

fn default_corpus() -> Result<Vec<(Factor, Factor)>, CliError> {
    let bases = ["complete:2", "complete:3", "path:3", "cycle:3", "cycle:4"];
    let lamps = ["complete:2", "complete:3", "path:3", "cycle:3", "paw"];
    let mut pairs = Vec::new();
    for g in bases {
        for h in lamps {
            pairs.push((resolve(g)?, resolve(h)?));
        }
    }
    Ok(pairs)
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

/// Per-vertex-pair distances and the antipodal graph, formula against brute force.
fn structural_checks(g: &Graph, h: &Graph, budget: &Budget) -> Result<Vec<Check>, CliError> {
    let product = wreath_product(g, h, budget)?;
    let codec = WreathCodec::new(g.vertex_count(), h.vertex_count())?;
    let metric = WreathMetric::new(g, h, budget)?;
    let dist = product.all_pairs_distances();
    let size = codec.vertex_count();
    let mut bad = 0usize;
    for i in 0..size {
        let u = codec.decode(i);
        for j in 0..size {
            if metric.distance(&u, &codec.decode(j))? != dist.get(i, j) {
                bad += 1;
            }
        }
    }
    let built = antipodal_of_wreath(g, h, budget)?;
    let brute = antipodal(&product)?;
    let same_edges = built.graph.edge_list() == brute.edge_list();
    let connected = brute.is_connected();
    Ok(vec![
        Check {
            name: "wreath_distance",
            passed: bad == 0,
            detail: format!("{} pairs, {bad} disagreements", size * size),
        },
        Check {
            name: "antipodal",
            passed: same_edges,
            detail: format!("{} edges", brute.edge_count()),
        },
        Check {
            name: "antipodal_connectivity",
            passed: built.predicted_connected == connected,
            detail: format!(
                "predicted {}, observed {}",
                built.predicted_connected, connected
            ),
        },
    ])
}

fn verify(
    pairs: &[(Factor, Factor)],
    invariants: &[Invariant],
    options: &ReportOptions,
    format: TableFormat,
) -> Result<(String, bool), CliError> {
    let mut ok = true;
    let mut table = String::new();
    let mut csv = String::from("g,h,check,method,variant,value,status\n");
    let mut text = String::new();
    let mut json_pairs = Vec::new();
    let mut skipped = Vec::new();
    for (g, h) in pairs {
        let size = WreathCodec::new(g.graph.vertex_count(), h.graph.vertex_count())
            .map(|c| c.vertex_count())
            .unwrap_or(usize::MAX);
        if size > CORPUS_LIMIT.min(options.budget.max_product_vertices) {
            skipped.push(json!({"g": g.spec, "h": h.spec, "vertices": size}));
            let _ = writeln!(table, "{} wr {}: skipped ({size} vertices)", g.spec, h.spec);
            continue;
        }
        let report = pair_report(g, h, invariants, MethodFilter::Both, options)?;
        let mismatches = report.mismatches();
        let checks = if size <= DISTANCE_CHECK_LIMIT {
            structural_checks(&g.graph, &h.graph, &options.budget)?
        } else {
            Vec::new()
        };
        let pair_ok = mismatches.is_empty() && checks.iter().all(|c| c.passed);
        ok &= pair_ok;
        let status = if pair_ok { "ok" } else { "MISMATCH" };

        let _ = writeln!(
            table,
            "{} wr {} ({size} vertices): {status}",
            g.spec, h.spec
        );
        for e in &report.entries {
            let agree = !mismatches.iter().any(|m| m.invariant == e.invariant);
            let method = if e.variant.is_empty() {
                e.method.name().to_string()
            } else {
                format!("{}:{}", e.method.name(), e.variant)
            };
            let _ = writeln!(table, "  {:<9} {:<26} {}", e.invariant, method, e.value);
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{},{}",
                g.spec,
                h.spec,
                e.invariant,
                e.method.name(),
                e.variant,
                e.value,
                if agree { "ok" } else { "mismatch" }
            );
            let _ = writeln!(
                text,
                "g={} h={} invariant={} method={} variant={} value={} agree={agree}",
                g.spec,
                h.spec,
                e.invariant,
                e.method.name(),
                if e.variant.is_empty() {
                    "-"
                } else {
                    &e.variant
                },
                e.value
            );
        }
        for c in &checks {
            let verdict = if c.passed { "ok" } else { "mismatch" };
            let _ = writeln!(table, "  {:<36} {verdict} ({})", c.name, c.detail);
            let _ = writeln!(
                csv,
                "{},{},{},check,,{},{verdict}",
                g.spec, h.spec, c.name, c.detail
            );
            let _ = writeln!(
                text,
                "g={} h={} check={} passed={} detail={:?}",
                g.spec, h.spec, c.name, c.passed, c.detail
            );
        }
        let check_docs: Vec<_> = checks
            .iter()
            .map(|c| json!({"check": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        json_pairs.push(json!({
            "factors": report.factors,
            "entries": report.entries,
            "checks": check_docs,
            "status": status,
        }));
    }
    let verdict = if ok {
        "all checks agree"
    } else {
        "MISMATCHES FOUND"
    };
    let _ = writeln!(table, "{verdict}");
    let _ = writeln!(text, "result={}", if ok { "ok" } else { "mismatch" });
    let output = match format {
        TableFormat::Table => table,
        TableFormat::Csv => csv,
        TableFormat::Text => text,
        TableFormat::Json => {
            let doc = json!({"pairs": json_pairs, "skipped": skipped, "ok": ok});
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
    };
    Ok((output, ok))
}

fn render_search(summary: &search::SearchSummary, format: TableFormat) -> String {
    let edges = |g: &Graph| -> Vec<[usize; 2]> { g.edges().map(|(u, v)| [u + 1, v + 1]).collect() };
    match format {
        TableFormat::Json => {
            let collisions: Vec<_> = summary
                .collisions
                .iter()
                .map(|c| {
                    json!({
                        "order": c.order,
                        "vector": c.vector.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "graphs": c.graphs.iter().map(edges).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let classes: Vec<_> = summary
                .classes
                .iter()
                .map(|(n, count)| json!({"order": n, "classes": count}))
                .collect();
            let doc = json!({"classes": classes, "collisions": collisions});
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        TableFormat::Csv => {
            let mut out = String::from("order,group,vector,edges\n");
            for (i, c) in summary.collisions.iter().enumerate() {
                for g in &c.graphs {
                    let list: Vec<String> =
                        edges(g).iter().map(|[u, v]| format!("{u}-{v}")).collect();
                    let _ = writeln!(
                        out,
                        "{},{},\"{}\",{}",
                        c.order,
                        i + 1,
                        c.vector,
                        list.join(" ")
                    );
                }
            }
            out
        }
        TableFormat::Table | TableFormat::Text => {
            let mut out = String::new();
            for (n, count) in &summary.classes {
                let _ = writeln!(out, "order {n}: {count} connected graphs up to isomorphism");
            }
            if summary.collisions.is_empty() {
                let _ = writeln!(out, "no two of them share a Wiener vector");
            }
            for c in &summary.collisions {
                let _ = writeln!(out, "order {} vector {}:", c.order, c.vector);
                for g in &c.graphs {
                    let list: Vec<String> =
                        edges(g).iter().map(|[u, v]| format!("{u}-{v}")).collect();
                    let _ = writeln!(out, "  {}", list.join(" "));
                }
            }
            out
        }
    }
}
