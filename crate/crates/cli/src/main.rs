//! Command-line driver for the `linpow` library: single computations on
//! monomial ideals and graphs, Rees-ideal certificates, built-in ideal
//! families, exhaustive scans, the per-power probe, and the named
//! reproduction suites.
//!
//! Exit codes: 0 when every requested check passes (or for plain queries),
//! 1 on a mathematical mismatch or input error, 2 when the only failures
//! were inconclusive because a search budget or degree cap ran out.

use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use linpow::betti::{graded_betti, has_linear_resolution, regularity};
use linpow::complex::alexander_dual;
use linpow::families::{
    betti_splitting_check, sturmfels_family, sturmfels_ideal, terai_family, terai_ideal,
    FamilyParams,
};
use linpow::graph::{complementary_ideal_equivalence, edge_ideal_equivalence};
use linpow::lq::{find_lq_order, verify_lq_order, LqVerdict, SearchOutcome};
use linpow::rees::{
    buchberger_capped, format_groebner, rees_generators_capped, x_condition_check,
    ReesPresentation,
};
use linpow::suites::{
    conjecture_probe, labeled_graphs_with_edges, run_suite, sampled_connected_graphs,
    scan_graphs, SCAN_CSV_HEADER, SUITE_NAMES,
};
use linpow::textio::{format_ideal, parse_graph, parse_ideal};
use linpow::torder::OrderSpec;
use linpow::{FieldSpec, MonomialIdeal};

#[derive(Parser)]
#[command(
    name = "linpow",
    version,
    about = "Exact linear-resolution, linear-quotients, and Rees-ideal computations for monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field (repeatable): q, f2, f3, or any f<p>.
    /// Defaults to q and f2.
    #[arg(long = "field", global = true, value_parser = parse_field_arg)]
    field: Vec<FieldSpec>,

    /// Largest power examined by power-sensitive commands.
    #[arg(long, global = true, default_value_t = 3,
          value_parser = clap::value_parser!(u32).range(1..))]
    kmax: u32,

    /// y-degree cap for capped Rees Gröbner computations.
    #[arg(long, global = true, default_value_t = 3,
          value_parser = clap::value_parser!(u32).range(1..))]
    cap: u32,

    /// Node budget for linear-quotients order searches.
    #[arg(long, global = true, default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Output format for reports; ideal-valued results always use the
    /// monomial text format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the data-parallel kernels (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Seed for sampled modes, recorded in report headers.
    #[arg(long, global = true, default_value_t = 0x1729)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table over each selected field.
    Betti {
        /// Ideal file; `-` or omitted reads stdin.
        input: Option<PathBuf>,
    },
    /// Castelnuovo–Mumford regularity over each selected field.
    Reg { input: Option<PathBuf> },
    /// Decide linear resolution over each selected field.
    Linres { input: Option<PathBuf> },
    /// Linear-quotients orders: verify a given order or search for one.
    #[command(subcommand)]
    Lq(LqCmd),
    /// k-th power of an ideal, minimally generated.
    Power {
        /// Exponent (k ≥ 1).
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        input: Option<PathBuf>,
    },
    /// Squarefree polarization.
    Polarize { input: Option<PathBuf> },
    /// Alexander dual of a squarefree ideal.
    Dual { input: Option<PathBuf> },
    /// Edge-ideal constructions and per-graph equivalence checks.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Rees presentation ideals: generators, Gröbner bases, x-condition.
    #[command(subcommand)]
    Rees(ReesCmd),
    /// Built-in ideal families, emitted in the monomial text format.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Betti-splitting checks.
    #[command(subcommand)]
    Split(SplitCmd),
    /// Exhaustive or sampled scans.
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Per-power linear-resolution and linear-quotients probe of an
    /// equigenerated ideal. Reports only the computed rows.
    Probe { input: Option<PathBuf> },
    /// Run a named reproduction suite: terai, sturmfels, thmA, thmB,
    /// thmC, thmD, splitting, xcond, or oracle.
    Suite { name: String },
}

#[derive(Subcommand)]
enum LqCmd {
    /// Verify that a generator order has linear quotients.
    Verify {
        /// Comma-separated 0-based indices into the canonical generator
        /// list, e.g. 2,0,1.
        #[arg(long, required = true, value_delimiter = ',')]
        order: Vec<usize>,
        input: Option<PathBuf>,
    },
    /// Search for a linear-quotients order within the node budget.
    Search { input: Option<PathBuf> },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Edge ideal I(G).
    Edge { input: Option<PathBuf> },
    /// Complementary edge ideal I_c(G), generated by the non-edges.
    Comp { input: Option<PathBuf> },
    /// Check linear resolution of I(G) against chordality of the
    /// complement, searching powers up to --kmax for quotient orders.
    #[command(name = "thmA")]
    ThmA { input: Option<PathBuf> },
    /// Check linear resolution of I_c(G) against the nontrivial component
    /// count, with lex quotient certificates for powers up to --kmax.
    #[command(name = "thmB")]
    ThmB { input: Option<PathBuf> },
    /// Connected elimination labeling of a connected graph.
    Label { input: Option<PathBuf> },
}

#[derive(Subcommand)]
enum ReesCmd {
    /// Presentation-ideal generators up to the y-degree cap.
    Gens { input: Option<PathBuf> },
    /// Capped Gröbner basis under a named order.
    Gb {
        /// Order name `kind-block`: lex-x, lex-y, purelex-x, purelex-y,
        /// revlex-x, revlex-y, product-x, product-y.
        #[arg(long, default_value = "lex-x")]
        order: String,
        input: Option<PathBuf>,
    },
    /// x-condition certificate for the capped Gröbner basis.
    Xcond {
        #[arg(long, default_value = "lex-x")]
        order: String,
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Ten-generator cubic ideal whose regularity depends on the field.
    Terai,
    /// Eight-generator cubic ideal with linear quotients but a nonlinear
    /// square; the order is emitted as a trailing comment.
    Sturmfels,
    /// Prefix family over the ten-generator ideal (n ≥ 6, 3 ≤ d ≤ n−3).
    #[command(name = "thmC")]
    ThmC { n: usize, d: u32 },
    /// Prefix family over the eight-generator ideal, with its
    /// linear-quotients order as a trailing comment.
    #[command(name = "thmD")]
    ThmD { n: usize, d: u32 },
}

#[derive(Subcommand)]
enum SplitCmd {
    /// Check Betti-number additivity for a partition of the generators of
    /// WHOLE into LEFT and RIGHT, over each selected field.
    Check {
        whole: PathBuf,
        left: PathBuf,
        right: PathBuf,
    },
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Scan labeled graphs on n vertices: all graphs with an edge for
    /// n ≤ 5, a seeded sample of 200 connected graphs at n = 6.
    Graphs {
        /// Vertex count, 2–6.
        n: usize,
    },
}

fn parse_field_arg(s: &str) -> std::result::Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    configure_workers(cli.jobs);
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_exhaustion(&err) { 2 } else { 1 })
        }
    }
}

/// Die quietly instead of panicking when stdout is a closed pipe
/// (`linpow scan graphs 5 | head`).
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

#[cfg(feature = "parallel")]
fn configure_workers(jobs: usize) {
    if jobs > 0 {
        // Only fails if a global pool already exists; the default pool is
        // fine in that case.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_workers(_jobs: usize) {}

/// Cap and degree-bound errors are inconclusive outcomes, not mismatches.
fn is_exhaustion(err: &anyhow::Error) -> bool {
    matches!(
        err.downcast_ref::<linpow::Error>(),
        Some(
            linpow::Error::CapTooSmall(_, _)
                | linpow::Error::DegreeBoundTooSmall(_, _)
                | linpow::Error::XDegreeBoundExceeded(_, _)
        )
    )
}

fn selected_fields(cli: &Cli) -> Vec<FieldSpec> {
    if cli.field.is_empty() {
        vec![FieldSpec::Q, FieldSpec::F2]
    } else {
        cli.field.clone()
    }
}

fn read_text(input: &Option<PathBuf>) -> Result<String> {
    match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display())),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn read_ideal(input: &Option<PathBuf>) -> Result<MonomialIdeal> {
    Ok(parse_ideal(&read_text(input)?, None)?)
}

fn read_ideal_file(path: &PathBuf, ambient: Option<usize>) -> Result<MonomialIdeal> {
    Ok(parse_ideal(
        &fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        ambient,
    )?)
}

fn read_graph(input: &Option<PathBuf>) -> Result<linpow::graph::Graph> {
    Ok(parse_graph(&read_text(input)?)?)
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_ideal_with_order(ideal: &MonomialIdeal, order: Option<&[usize]>) {
    print!("{}", format_ideal(ideal));
    if let Some(order) = order {
        let joined: Vec<String> = order.iter().map(ToString::to_string).collect();
        println!("# linear-quotients order: {}", joined.join(" "));
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Betti { input } => cmd_betti(cli, input),
        Command::Reg { input } => cmd_reg(cli, input),
        Command::Linres { input } => cmd_linres(cli, input),
        Command::Lq(sub) => match sub {
            LqCmd::Verify { order, input } => cmd_lq_verify(cli, order, input),
            LqCmd::Search { input } => cmd_lq_search(cli, input),
        },
        Command::Power { k, input } => {
            let ideal = read_ideal(input)?;
            print!("{}", format_ideal(&ideal.power(*k)?));
            Ok(0)
        }
        Command::Polarize { input } => {
            let ideal = read_ideal(input)?;
            print!("{}", format_ideal(&ideal.polarize()?.0));
            Ok(0)
        }
        Command::Dual { input } => {
            let ideal = read_ideal(input)?;
            print!("{}", format_ideal(&alexander_dual(&ideal)?));
            Ok(0)
        }
        Command::Graph(sub) => match sub {
            GraphCmd::Edge { input } => {
                print!("{}", format_ideal(&read_graph(input)?.edge_ideal()?));
                Ok(0)
            }
            GraphCmd::Comp { input } => {
                print!("{}", format_ideal(&read_graph(input)?.complementary_edge_ideal()?));
                Ok(0)
            }
            GraphCmd::ThmA { input } => cmd_graph_edge_check(cli, input),
            GraphCmd::ThmB { input } => cmd_graph_comp_check(cli, input),
            GraphCmd::Label { input } => {
                let labeling = read_graph(input)?.connected_elimination_labeling()?;
                let joined: Vec<String> = labeling.iter().map(ToString::to_string).collect();
                println!("{}", joined.join(" "));
                Ok(0)
            }
        },
        Command::Rees(sub) => match sub {
            ReesCmd::Gens { input } => cmd_rees_gens(cli, input),
            ReesCmd::Gb { order, input } => cmd_rees_gb(cli, order, input, false),
            ReesCmd::Xcond { order, input } => cmd_rees_gb(cli, order, input, true),
        },
        Command::Family(sub) => cmd_family(sub),
        Command::Split(SplitCmd::Check { whole, left, right }) => {
            cmd_split_check(cli, whole, left, right)
        }
        Command::Scan(ScanCmd::Graphs { n }) => cmd_scan_graphs(cli, *n),
        Command::Probe { input } => cmd_probe(cli, input),
        Command::Suite { name } => cmd_suite(cli, name),
    }
}

fn cmd_betti(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let ideal = read_ideal(input)?;
    let mut tables = Vec::new();
    for field in selected_fields(cli) {
        tables.push((field, graded_betti(&ideal, field)?));
    }
    match cli.format {
        Format::Text => {
            for (field, table) in &tables {
                println!("field {field}: regularity {}", table.regularity());
                for ((i, j), value) in table.entries() {
                    println!("  beta({i}, {j}) = {value}");
                }
            }
        }
        Format::Json => {
            let value: Vec<_> = tables
                .iter()
                .map(|(field, table)| {
                    serde_json::json!({ "field": field.to_string(), "table": table })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => {
            println!("field,i,j,beta");
            for (field, table) in &tables {
                for ((i, j), value) in table.entries() {
                    println!("{field},{i},{j},{value}");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_reg(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let ideal = read_ideal(input)?;
    let mut rows = Vec::new();
    for field in selected_fields(cli) {
        rows.push((field, regularity(&ideal, field)?));
    }
    match cli.format {
        Format::Text => {
            for (field, reg) in &rows {
                println!("{field}: {reg}");
            }
        }
        Format::Json => {
            let value: Vec<_> = rows
                .iter()
                .map(|(f, r)| serde_json::json!({ "field": f.to_string(), "regularity": r }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => {
            println!("field,regularity");
            for (field, reg) in &rows {
                println!("{field},{reg}");
            }
        }
    }
    Ok(0)
}

fn cmd_linres(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let ideal = read_ideal(input)?;
    let degree = ideal.equigenerated_degree();
    let mut rows = Vec::new();
    for field in selected_fields(cli) {
        rows.push((field, has_linear_resolution(&ideal, field)?));
    }
    match cli.format {
        Format::Text => {
            match degree {
                Some(d) => println!("equigenerated in degree {d}"),
                None => println!("not equigenerated"),
            }
            for (field, linear) in &rows {
                println!("{field}: linear resolution = {linear}");
            }
        }
        Format::Json => {
            let value: Vec<_> = rows
                .iter()
                .map(|(f, l)| serde_json::json!({ "field": f.to_string(), "linear": l }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => {
            println!("field,linear-resolution");
            for (field, linear) in &rows {
                println!("{field},{linear}");
            }
        }
    }
    Ok(0)
}

fn cmd_lq_verify(cli: &Cli, order: &[usize], input: &Option<PathBuf>) -> Result<u8> {
    let ideal = read_ideal(input)?;
    let verdict = verify_lq_order(&ideal, order)?;
    match (&verdict, cli.format) {
        (LqVerdict::Linear, Format::Json) => {
            println!("{}", serde_json::json!({ "linear": true }));
        }
        (LqVerdict::Linear, _) => {
            println!("linear quotients: yes ({} generators)", ideal.num_generators());
        }
        (LqVerdict::Fails { position, witness }, Format::Json) => {
            println!(
                "{}",
                serde_json::json!({
                    "linear": false,
                    "position": position,
                    "witness": witness.to_string(),
                })
            );
        }
        (LqVerdict::Fails { position, witness }, _) => {
            println!("linear quotients: no — fails at position {position}, colon witness {witness}");
        }
    }
    Ok(if verdict.is_linear() { 0 } else { 1 })
}

fn cmd_lq_search(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let ideal = read_ideal(input)?;
    let search = find_lq_order(&ideal, cli.budget)?;
    match search.outcome {
        SearchOutcome::Found(order) => {
            let joined: Vec<String> = order.iter().map(ToString::to_string).collect();
            if cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({ "outcome": "found", "order": order, "nodes": search.nodes })
                );
            } else {
                println!("order found after {} nodes: {}", search.nodes, joined.join(" "));
            }
            Ok(0)
        }
        SearchOutcome::NoneExists => {
            if cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({ "outcome": "none", "nodes": search.nodes })
                );
            } else {
                println!("no linear-quotients order exists (search exhausted, {} nodes)", search.nodes);
            }
            Ok(0)
        }
        SearchOutcome::BudgetExhausted => {
            if cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({ "outcome": "budget", "nodes": search.nodes })
                );
            } else {
                println!("inconclusive: budget of {} nodes exhausted", cli.budget);
            }
            Ok(2)
        }
    }
}

fn cmd_graph_edge_check(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let g = read_graph(input)?;
    let report = edge_ideal_equivalence(&g, cli.kmax, cli.budget)?;
    if cli.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!(
            "graph {}: {} vertices, {} edges",
            g.encode(),
            report.vertex_count,
            report.edge_count
        );
        println!("complement chordal: {}", report.complement_chordal);
        println!(
            "linear resolution: Q = {}, F2 = {}",
            report.linres_q, report.linres_f2
        );
        for row in &report.power_lq {
            let tag = match row.consistent {
                Some(true) => "consistent",
                Some(false) => "MISMATCH",
                None => "inconclusive",
            };
            println!("power k = {}: {} ({} nodes) — {tag}", row.k, row.outcome, row.nodes);
        }
        println!("holds: {}", report.holds);
    }
    let mismatch = report.complement_chordal != report.linres_q
        || report.complement_chordal != report.linres_f2
        || report.power_lq.iter().any(|r| r.consistent == Some(false));
    let inconclusive = report.power_lq.iter().any(|r| r.consistent.is_none());
    Ok(if mismatch {
        1
    } else if inconclusive {
        2
    } else {
        0
    })
}

fn cmd_graph_comp_check(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let g = read_graph(input)?;
    let report = complementary_ideal_equivalence(&g, cli.kmax)?;
    if cli.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!(
            "graph {}: {} vertices, {} edges, {} nontrivial components",
            g.encode(),
            report.vertex_count,
            report.edge_count,
            report.c_count
        );
        println!(
            "linear resolution of the complementary ideal: Q = {}, F2 = {}",
            report.linres_q, report.linres_f2
        );
        if let Some(priority) = &report.priority {
            let joined: Vec<String> = priority.iter().map(ToString::to_string).collect();
            println!("elimination priority: {}", joined.join(" "));
        }
        for (k, ok) in &report.lex_lq {
            println!("power k = {k}: lex linear quotients = {ok}");
        }
        println!("holds: {}", report.holds);
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_rees_gens(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let pres = ReesPresentation::new(read_ideal(input)?)?;
    let gens = rees_generators_capped(&pres, cli.cap)?;
    if cli.format == Format::Json {
        let strings: Vec<String> = gens.iter().map(ToString::to_string).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(
                &serde_json::json!({ "cap": cli.cap, "generators": strings })
            )?
        );
    } else {
        println!("# cap {}, {} generators", cli.cap, gens.len());
        for b in &gens {
            println!("{b}");
        }
    }
    Ok(0)
}

fn cmd_rees_gb(cli: &Cli, order: &str, input: &Option<PathBuf>, xcond: bool) -> Result<u8> {
    let pres = ReesPresentation::new(read_ideal(input)?)?;
    let ord = OrderSpec::parse(order, pres.xvars(), pres.yvars())?;
    let gens = rees_generators_capped(&pres, cli.cap)?;
    let gb = buchberger_capped(&pres, &gens, &ord, cli.cap)?;
    if !xcond {
        print!("{}", format_groebner(&gb));
        return Ok(0);
    }
    let report = x_condition_check(&gb);
    if cli.format == Format::Json {
        let witness = report.witness.as_ref().map(ToString::to_string);
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "holds": report.holds,
                "cap": report.cap,
                "witness": witness,
            }))?
        );
    } else if report.holds {
        println!("x-condition holds up to y-degree {}", report.cap);
    } else {
        let witness = report.witness.expect("failing check carries a witness");
        println!("x-condition fails: initial generator {witness} has x-degree > 1");
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_family(sub: &FamilyCmd) -> Result<u8> {
    match sub {
        FamilyCmd::Terai => print_ideal_with_order(&terai_ideal(), None),
        FamilyCmd::Sturmfels => {
            let (ideal, order) = sturmfels_ideal();
            print_ideal_with_order(&ideal, Some(&order));
        }
        FamilyCmd::ThmC { n, d } => {
            let ideal = terai_family(FamilyParams { n: *n, d: *d })?;
            print_ideal_with_order(&ideal, None);
        }
        FamilyCmd::ThmD { n, d } => {
            let (ideal, order) = sturmfels_family(FamilyParams { n: *n, d: *d })?;
            print_ideal_with_order(&ideal, Some(&order));
        }
    }
    Ok(0)
}

fn cmd_split_check(cli: &Cli, whole: &PathBuf, left: &PathBuf, right: &PathBuf) -> Result<u8> {
    let whole = read_ideal_file(whole, None)?;
    let left = read_ideal_file(left, Some(whole.ambient()))?;
    let right = read_ideal_file(right, Some(whole.ambient()))?;
    let mut all_hold = true;
    let mut rows = Vec::new();
    for field in selected_fields(cli) {
        let report = betti_splitting_check(&whole, &left, &right, field)?;
        all_hold &= report.holds;
        rows.push((field, report));
    }
    match cli.format {
        Format::Json => {
            let value: Vec<_> = rows
                .iter()
                .map(|(f, r)| serde_json::json!({ "field": f.to_string(), "report": r }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        _ => {
            for (field, report) in &rows {
                if report.holds {
                    println!("field {field}: Betti splitting holds");
                } else {
                    println!("field {field}: not a Betti splitting; residuals at:");
                    for (i, j, r) in &report.residuals {
                        println!("  (i, j) = ({i}, {j}): {r}");
                    }
                }
            }
        }
    }
    Ok(if all_hold { 0 } else { 1 })
}

fn cmd_scan_graphs(cli: &Cli, n: usize) -> Result<u8> {
    let (graphs, sampled) = match n {
        2..=5 => (labeled_graphs_with_edges(n)?, false),
        6 => (sampled_connected_graphs(6, 200, cli.seed), true),
        _ => bail!("scan supports 2 ≤ n ≤ 6 vertices"),
    };
    let rows = scan_graphs(&graphs, cli.kmax, cli.budget)?;
    match cli.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "n": n,
                    "sampled": sampled,
                    "seed": cli.seed,
                    "rows": rows,
                }))?
            );
        }
        _ => {
            if sampled {
                println!("# sampled 200 connected graphs, seed {}", cli.seed);
            }
            println!("{SCAN_CSV_HEADER}");
            for row in &rows {
                println!("{}", row.csv());
            }
        }
    }
    Ok(0)
}

fn cmd_probe(cli: &Cli, input: &Option<PathBuf>) -> Result<u8> {
    let ideal = read_ideal(input)?;
    let fields = selected_fields(cli);
    let rows = conjecture_probe(&ideal, cli.kmax, cli.budget, &fields)?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        Format::Csv => {
            let field_cols: Vec<String> =
                fields.iter().map(|f| format!("linres-{f}")).collect();
            println!("k,{},lq-outcome,nodes", field_cols.join(","));
            for row in &rows {
                let flags: Vec<String> =
                    row.linres.iter().map(|(_, ok)| ok.to_string()).collect();
                println!("{},{},{},{}", row.k, flags.join(","), row.lq_outcome, row.nodes);
            }
        }
        Format::Text => {
            for row in &rows {
                let flags: Vec<String> = row
                    .linres
                    .iter()
                    .map(|(f, ok)| format!("{f} = {ok}"))
                    .collect();
                println!(
                    "k = {}: linear resolution {}; quotients search: {} ({} nodes)",
                    row.k,
                    flags.join(", "),
                    row.lq_outcome,
                    row.nodes
                );
            }
        }
    }
    Ok(if rows.iter().any(|r| r.lq_outcome == "budget") { 2 } else { 0 })
}

fn cmd_suite(cli: &Cli, name: &str) -> Result<u8> {
    let report = run_suite(name, cli.seed)
        .with_context(|| format!("known suites: {}", SUITE_NAMES.join(", ")))?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => {
            println!("label,passed,inconclusive,detail");
            for c in &report.checks {
                println!(
                    "{},{},{},{}",
                    csv_quote(&c.label),
                    c.passed,
                    c.inconclusive,
                    csv_quote(&c.detail)
                );
            }
        }
        Format::Text => print!("{}", report.render_text()),
    }
    Ok(u8::try_from(report.exit_code()).expect("exit codes are 0, 1, or 2"))
}
