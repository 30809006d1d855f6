//! `pyrolace` — exact burning / lazy burning / zero forcing solvers, graph
//! products, exact cospectrality, and the claim-verification harness behind
//! one binary.
//!
//! Exit codes: 0 success (all claims hold), 1 violated claims, 2 usage
//! errors (bad flags, missing or malformed input files), 3 solver errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pyrolace::harness::{
    fixtures, generate_cospectral_pair, verify_burning_preservation, verify_equality_family,
    verify_improved_bound, verify_lazy_le_burning, verify_theorem25_bound, write_report,
    ClaimStatus, FixturePayload, SweepConfig, VerificationReport,
};
use pyrolace::io::{
    parse_graph, parse_hypergraph, serialize_graph, serialize_hypergraph, LabeledGraph,
    LabeledHypergraph,
};
use pyrolace::spectral::JACOBI_DEFAULT_TOL;
use pyrolace::{
    are_cospectral, are_isomorphic_bruteforce, burning_number_with_threads, cartesian_product,
    char_poly, hypergraph_burning_number, lazy_burning_number, spectrum_approx, strong_product,
    zero_forcing_number, Graph, SingletonMode, VertexLabeling, DEFAULT_ISO_LIMIT,
};

/// Environment variable that overrides where fixture names are looked up
/// before falling back to the built-in registry.
const FIXTURE_DIR_ENV: &str = "PYROLACE_FIXTURE_DIR";

#[derive(Parser)]
#[command(
    name = "pyrolace",
    version,
    about = "Exact solvers for burning, lazy burning and zero forcing, plus spectra, products and a claim harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Vacuous,
    Strict,
}

impl From<ModeArg> for SingletonMode {
    fn from(m: ModeArg) -> SingletonMode {
        match m {
            ModeArg::Vacuous => SingletonMode::Vacuous,
            ModeArg::Strict => SingletonMode::Strict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductKind {
    Strong,
    Cartesian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimArg {
    #[value(name = "theorem25")]
    Theorem25,
    #[value(name = "improved_bound")]
    ImprovedBound,
    #[value(name = "equality_family")]
    EqualityFamily,
    #[value(name = "lazy_le_burning")]
    LazyLeBurning,
    #[value(name = "burning_preservation")]
    BurningPreservation,
    #[value(name = "cospectral_pair")]
    CospectralPair,
}

#[derive(Subcommand)]
enum Command {
    /// Exact burning number of a graph (or hypergraph with --hypergraph)
    Burn {
        #[arg(long, value_name = "PATH")]
        graph: Option<String>,
        #[arg(long, value_name = "PATH")]
        hypergraph: Option<String>,
        /// Singleton-hyperedge rule for hypergraph burning
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// First-source branches explored in parallel (witness unchanged)
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Minimum lazy burning set of a hypergraph
    Lazy {
        #[arg(long, value_name = "PATH")]
        hypergraph: String,
        #[arg(long, value_enum, default_value = "vacuous")]
        mode: ModeArg,
    },
    /// Zero forcing number of a graph
    Force {
        #[arg(long, value_name = "PATH")]
        graph: String,
    },
    /// Characteristic polynomial and approximate adjacency spectrum
    Spectrum {
        #[arg(long, value_name = "PATH")]
        graph: String,
        /// Off-diagonal norm target for the Jacobi iteration
        #[arg(long, default_value_t = JACOBI_DEFAULT_TOL)]
        tol: f64,
    },
    /// Graph product, written to stdout in graph file format
    Product {
        /// Two graph files to multiply
        #[arg(long, value_name = "PATH", num_args = 2)]
        pair: Option<Vec<String>>,
        /// Left factor; combined with --n for G ⊠ K_n (or □ with --kind)
        #[arg(long, value_name = "PATH")]
        graph: Option<String>,
        /// Order of the complete-graph right factor
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "strong")]
        kind: ProductKind,
    },
    /// Exact cospectrality and isomorphism check for two graphs
    Cospectral {
        #[arg(long, value_name = "PATH", num_args = 2, required = true)]
        pair: Vec<String>,
        /// Brute-force isomorphism limit; degree sequences decide beyond it
        #[arg(long, default_value_t = DEFAULT_ISO_LIMIT)]
        max_order: usize,
    },
    /// Verify paper claims: one claim against one instance, or the full run
    Verify(VerifyArgs),
    /// List the built-in fixtures, or write them out as files
    Fixtures {
        /// Directory to write <name>.g / <name>.h files into
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every claim over fixtures and seeded random sweeps
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, conflicts_with = "all")]
    claim: Option<ClaimArg>,
    #[arg(long, value_name = "PATH")]
    hypergraph: Option<String>,
    #[arg(long, value_name = "PATH")]
    graph: Option<String>,
    /// Product size for burning_preservation / cospectral_pair
    #[arg(long)]
    n: Option<usize>,
    /// Component sizes for equality_family (comma separated)
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random hypergraphs per sweep claim
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long, default_value_t = 8)]
    max_order: usize,
    #[arg(long, default_value_t = 5)]
    max_edges: usize,
    /// Write the JSON-lines report here
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Record real elapsed times in reports (breaks byte-reproducibility)
    #[arg(long)]
    timings: bool,
}

enum CliError {
    Usage(String),
    Solver(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Solver(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Solver(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn solver(err: impl std::fmt::Display) -> CliError {
    CliError::Solver(err.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("pyrolace: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

/// Resolves an input: literal path, then `$PYROLACE_FIXTURE_DIR/<name>`,
/// then the built-in fixture registry (with or without extension).
fn resolve_input(arg: &str, want_graph: bool) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {arg}: {e}")));
    }
    if let Ok(dir) = std::env::var(FIXTURE_DIR_ENV) {
        let candidate = Path::new(&dir).join(arg);
        if candidate.is_file() {
            return std::fs::read_to_string(&candidate)
                .map_err(|e| usage(format!("cannot read {}: {e}", candidate.display())));
        }
    }
    let stem = arg.trim_end_matches(".g").trim_end_matches(".h");
    for fixture in fixtures() {
        if fixture.name != stem {
            continue;
        }
        let labeling = fixture.labeling();
        return match (&fixture.payload, want_graph) {
            (FixturePayload::Graph(g), true) => Ok(serialize_graph(g, &labeling)),
            (FixturePayload::Hypergraph(h), false) => Ok(serialize_hypergraph(h, &labeling)),
            _ => Err(usage(format!(
                "fixture `{stem}` is a {}, not a {}",
                if want_graph { "hypergraph" } else { "graph" },
                if want_graph { "graph" } else { "hypergraph" }
            ))),
        };
    }
    Err(usage(format!(
        "no such file or fixture: {arg} (set {FIXTURE_DIR_ENV} or see `pyrolace fixtures`)"
    )))
}

fn load_graph(arg: &str) -> Result<LabeledGraph, CliError> {
    let text = resolve_input(arg, true)?;
    parse_graph(&text).map_err(|e| usage(format!("{arg}: {e}")))
}

fn load_hypergraph(arg: &str) -> Result<LabeledHypergraph, CliError> {
    let text = resolve_input(arg, false)?;
    parse_hypergraph(&text).map_err(|e| usage(format!("{arg}: {e}")))
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Burn {
            graph,
            hypergraph,
            mode,
            threads,
        } => cmd_burn(graph, hypergraph, mode.into(), threads),
        Command::Lazy { hypergraph, mode } => cmd_lazy(&hypergraph, mode.into()),
        Command::Force { graph } => cmd_force(&graph),
        Command::Spectrum { graph, tol } => cmd_spectrum(&graph, tol),
        Command::Product {
            pair,
            graph,
            n,
            kind,
        } => cmd_product(pair, graph, n, kind),
        Command::Cospectral { pair, max_order } => cmd_cospectral(&pair, max_order),
        Command::Verify(args) => cmd_verify(args),
        Command::Fixtures { out } => cmd_fixtures(out),
    }
}

fn cmd_burn(
    graph: Option<String>,
    hypergraph: Option<String>,
    mode: SingletonMode,
    threads: usize,
) -> Result<u8, CliError> {
    if threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    match (graph, hypergraph) {
        (Some(path), None) => {
            let input = load_graph(&path)?;
            let (b, witness) =
                burning_number_with_threads(&input.graph, threads).map_err(solver)?;
            println!(
                "b = {b}, witness {}",
                input.labeling.seq_labels(witness.as_slice()).join(" ")
            );
            Ok(0)
        }
        (None, Some(path)) => {
            let input = load_hypergraph(&path)?;
            let (b, witness) =
                hypergraph_burning_number(&input.hypergraph, mode).map_err(solver)?;
            println!(
                "b = {b}, witness {}",
                input.labeling.seq_labels(witness.as_slice()).join(" ")
            );
            Ok(0)
        }
        _ => Err(usage("burn needs exactly one of --graph or --hypergraph")),
    }
}

fn cmd_lazy(path: &str, mode: SingletonMode) -> Result<u8, CliError> {
    let input = load_hypergraph(path)?;
    let (bl, witness) = lazy_burning_number(&input.hypergraph, mode);
    println!(
        "b_L = {bl}, witness {}",
        input.labeling.set_labels(&witness).join(" ")
    );
    Ok(0)
}

fn cmd_force(path: &str) -> Result<u8, CliError> {
    let input = load_graph(path)?;
    let (z, witness) = zero_forcing_number(&input.graph);
    println!(
        "Z = {z}, witness {}",
        input.labeling.set_labels(&witness).join(" ")
    );
    Ok(0)
}

fn cmd_spectrum(path: &str, tol: f64) -> Result<u8, CliError> {
    let input = load_graph(path)?;
    let poly = char_poly(&input.graph.adjacency_matrix()).map_err(solver)?;
    let spectrum = spectrum_approx(&input.graph, tol).map_err(solver)?;
    println!("order = {}", input.graph.order());
    println!("char_poly = {poly}");
    let mut values = String::new();
    for (i, v) in spectrum.values.iter().enumerate() {
        if i > 0 {
            values.push(' ');
        }
        write!(values, "{v:.6}").expect("write to string");
    }
    println!("spectrum = {values}");
    Ok(0)
}

fn cmd_product(
    pair: Option<Vec<String>>,
    graph: Option<String>,
    n: Option<usize>,
    kind: ProductKind,
) -> Result<u8, CliError> {
    let (left, right) = match (pair, graph, n) {
        (Some(paths), None, None) => (load_graph(&paths[0])?.graph, load_graph(&paths[1])?.graph),
        (None, Some(path), Some(n)) => {
            let right = Graph::complete(n).map_err(solver)?;
            (load_graph(&path)?.graph, right)
        }
        _ => {
            return Err(usage(
                "product needs either --pair A B, or --graph A with --n",
            ))
        }
    };
    let (product, _) = match kind {
        ProductKind::Strong => strong_product(&left, &right).map_err(solver)?,
        ProductKind::Cartesian => cartesian_product(&left, &right).map_err(solver)?,
    };
    let labeling = VertexLabeling::default_vertices(product.order());
    print!("{}", serialize_graph(&product, &labeling));
    Ok(0)
}

fn cmd_cospectral(pair: &[String], max_order: usize) -> Result<u8, CliError> {
    let g = load_graph(&pair[0])?;
    let h = load_graph(&pair[1])?;
    let pg = char_poly(&g.graph.adjacency_matrix()).map_err(solver)?;
    let ph = char_poly(&h.graph.adjacency_matrix()).map_err(solver)?;
    println!("char_poly({}) = {pg}", pair[0]);
    println!("char_poly({}) = {ph}", pair[1]);
    println!("cospectral = {}", are_cospectral(&g.graph, &h.graph));
    if g.graph.order() != h.graph.order() {
        println!("isomorphic = false (different orders)");
    } else if g.graph.order() <= max_order {
        let iso = are_isomorphic_bruteforce(&g.graph, &h.graph, max_order).map_err(solver)?;
        println!("isomorphic = {iso}");
    } else if g.graph.degree_sequence() != h.graph.degree_sequence() {
        println!("isomorphic = false (degree sequences differ)");
    } else {
        println!("isomorphic = undetermined (order exceeds --max-order {max_order})");
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    if args.all {
        return cmd_verify_all(&args);
    }
    let Some(claim) = args.claim else {
        return Err(usage("verify needs --all or --claim <id>"));
    };
    let report = single_claim_report(claim, &args)?;
    println!("{}", report.summary_line());
    if let Some(path) = &args.report {
        let mut file = std::fs::File::create(path)
            .map_err(|e| usage(format!("cannot create {}: {e}", path.display())))?;
        write_report(&report, &mut file, args.timings)
            .map_err(|e| solver(format!("cannot write report: {e}")))?;
    }
    Ok(match report.status {
        ClaimStatus::Violated => 1,
        _ => 0,
    })
}

fn single_claim_report(claim: ClaimArg, args: &VerifyArgs) -> Result<VerificationReport, CliError> {
    let need_hypergraph = |args: &VerifyArgs| -> Result<LabeledHypergraph, CliError> {
        let path = args
            .hypergraph
            .as_ref()
            .ok_or_else(|| usage("this claim needs --hypergraph"))?;
        load_hypergraph(path)
    };
    match claim {
        ClaimArg::Theorem25 => Ok(verify_theorem25_bound(&need_hypergraph(args)?.hypergraph)),
        ClaimArg::ImprovedBound => Ok(verify_improved_bound(&need_hypergraph(args)?.hypergraph)),
        ClaimArg::LazyLeBurning => Ok(verify_lazy_le_burning(&need_hypergraph(args)?.hypergraph)),
        ClaimArg::EqualityFamily => {
            let sizes = args
                .sizes
                .as_ref()
                .ok_or_else(|| usage("equality_family needs --sizes s1,s2,…"))?;
            verify_equality_family(sizes).map_err(solver)
        }
        ClaimArg::BurningPreservation => {
            let path = args
                .graph
                .as_ref()
                .ok_or_else(|| usage("burning_preservation needs --graph"))?;
            let g = load_graph(path)?;
            verify_burning_preservation(&g.graph, args.n.unwrap_or(2)).map_err(solver)
        }
        ClaimArg::CospectralPair => {
            let (_, _, report) =
                generate_cospectral_pair(args.n.unwrap_or(2)).map_err(solver)?;
            Ok(report)
        }
    }
}

fn cmd_verify_all(args: &VerifyArgs) -> Result<u8, CliError> {
    let cfg = SweepConfig {
        seed: args.seed,
        instances: args.instances,
        max_order: args.max_order,
        max_edges: args.max_edges,
        timings: args.timings,
        ..SweepConfig::default()
    };
    let mut buffer: Vec<u8> = Vec::new();
    let summary = pyrolace::harness::verify_all(&cfg, &mut buffer)
        .map_err(|e| solver(format!("verification run failed: {e}")))?;
    if let Some(path) = &args.report {
        std::fs::write(path, &buffer)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    for line in String::from_utf8_lossy(&buffer).lines() {
        let report: VerificationReport =
            serde_json::from_str(line).map_err(|e| solver(format!("bad report line: {e}")))?;
        if report.status != ClaimStatus::Holds {
            println!("{}", report.summary_line());
        }
    }
    println!(
        "verified {} claims: {} hold, {} violated, {} skipped (seed {})",
        summary.total(),
        summary.holds,
        summary.violated,
        summary.skipped,
        args.seed
    );
    Ok(if summary.violated > 0 { 1 } else { 0 })
}

fn cmd_fixtures(out: Option<PathBuf>) -> Result<u8, CliError> {
    match out {
        None => {
            for fixture in fixtures() {
                let (kind, order) = match &fixture.payload {
                    FixturePayload::Graph(g) => ("graph", g.order()),
                    FixturePayload::Hypergraph(h) => ("hypergraph", h.order()),
                };
                let expected: Vec<String> = fixture
                    .expected
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!(
                    "{} ({kind}, order {order}): {}",
                    fixture.name,
                    expected.join(", ")
                );
            }
        }
        Some(dir) => {
            std::fs::create_dir_all(&dir)
                .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
            for fixture in fixtures() {
                let labeling = fixture.labeling();
                let (text, ext) = match &fixture.payload {
                    FixturePayload::Graph(g) => (serialize_graph(g, &labeling), "g"),
                    FixturePayload::Hypergraph(h) => (serialize_hypergraph(h, &labeling), "h"),
                };
                let path = dir.join(format!("{}.{ext}", fixture.name));
                std::fs::write(&path, text)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                println!("wrote {}", path.display());
            }
        }
    }
    Ok(0)
}

