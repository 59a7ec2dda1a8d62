//! Command-line front end: analyze graphs, generate named families,
//! verify claims, and hunt for counterexamples.
//!
//! Machine-readable JSON goes to stdout, a one-line human summary to
//! stderr. Exit codes: 0 claim holds or nothing found, 1 violation or
//! counterexample found, 2 usage error, 3 unparseable graph input.

use clap::{Args, Parser, Subcommand};
use cograph_core::codec::{from_graph6, to_graph6, EdgeListJson};
use cograph_core::cograph::{build_cotree, find_induced_p4, is_cograph, Cotree};
use cograph_core::generators::{
    cocktail_party, complete, complete_multipartite, cycle, generalized_line_graph,
    glg_counterexample, house_graph, path, random_cograph, star, tightness_family,
    CreationSequence,
};
use cograph_core::graph::{Graph, VertexSet};
use cograph_core::harness::{
    check_dilworth_bound, check_distinct_multipartite, check_glg_multiplicity,
    check_rank_property, check_threshold_simple, check_tightness, rank_property_holds,
    RankProperty, VerificationReport, DILWORTH_BOUND_ID, DISTINCT_MULTIPARTITE_ID, GLG_MULT_ID,
    RANK_PROPERTY_SWEEP_ID, THRESHOLD_SIMPLE_ID, TIGHTNESS_ID,
};
use cograph_core::linalg::{multiplicity_profile, SpectralProfile};
use cograph_core::search::{
    find_counterexample_jobs, verify_theorem_4_3, SearchMode, SearchSpec,
};
use cograph_core::vicinal::{
    coduplication_classes, dilworth_report, duplication_classes, is_threshold, DilworthReport,
};
use serde::Serialize;
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;
use std::{fs, io};

#[derive(Parser)]
#[command(
    name = "cograph",
    version,
    about = "Exact spectral and order-theoretic analysis of cographs and threshold graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on one graph: recognition, chains, exact spectrum
    Analyze {
        /// Named graph (path5, star4, house), graph6 string, JSON edge
        /// list, file path, or - for stdin
        input: String,
    },
    /// Emit a graph from a named family
    Gen(GenArgs),
    /// Check one claim and exit 0 (holds) or 1 (violated)
    Verify(VerifyArgs),
    /// Search for a forbidden-subgraph-free graph failing a rank property
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Output format: g6 or json
    #[arg(long, global = true, default_value = "g6")]
    format: String,
    /// Write to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Path on n vertices
    Path { n: usize },
    /// Cycle on n vertices
    Cycle { n: usize },
    /// Complete graph on n vertices
    Complete { n: usize },
    /// Star on n vertices, center first
    Star { n: usize },
    /// Complete multipartite graph from comma-separated part sizes
    Multipartite { parts: String },
    /// Cocktail party graph on 2n vertices
    Cocktail { n: usize },
    /// Threshold graph from a creation code over i (isolated) and d (dominating)
    Threshold { code: String },
    /// Apex joined to k parts of size s plus an isolated fringe
    Tightness { s: usize, k: usize },
    /// Generalized line graph: line graph of the base plus cocktail blocks
    Glg {
        /// Base graph (named, graph6, or file)
        #[arg(long)]
        base: String,
        /// Comma-separated block sizes, one per base vertex
        counts: String,
    },
    /// Triangle stacked on a four-cycle
    House,
    /// Random cograph from recursive union/join splits
    RandomCograph {
        n: usize,
        /// Seed for the deterministic generator
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: dilworth-bound, threshold-simple, royle-drp, royle-cdrp,
    /// glg-mult, tightness, distinct-multipartite, theorem-4-3
    theorem_id: String,
    /// Input graph (named, graph6, file, or - for stdin)
    #[arg(long)]
    input: Option<String>,
    /// Part size for the tightness family
    #[arg(long)]
    s: Option<usize>,
    /// Part count for the tightness family
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated part sizes
    #[arg(long)]
    parts: Option<String>,
    /// Vertex bound for the exhaustive sweep
    #[arg(long)]
    max_n: Option<usize>,
    /// Base graph for the generalized line graph check
    #[arg(long)]
    base: Option<String>,
    /// Comma-separated block sizes for the generalized line graph check
    #[arg(long)]
    counts: Option<String>,
}

#[derive(Args)]
struct FuzzArgs {
    /// Forbidden induced subgraph (named, graph6, or file)
    #[arg(long)]
    forbidden: String,
    /// Rank property to attack: drp or cdrp
    #[arg(long)]
    property: String,
    /// Vertex bound
    #[arg(long)]
    max_n: usize,
    /// Search mode: exhaustive or sampled
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    /// Number of samples (sampled mode)
    #[arg(long)]
    count: Option<u64>,
    /// Seed (sampled mode; always explicit)
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; the witness does not depend on this
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

enum Failure {
    Usage(String),
    Parse(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Analyze { input } => run_analyze(&input),
        Command::Gen(args) => run_gen(args),
        Command::Verify(args) => run_verify(args),
        Command::Fuzz(args) => run_fuzz(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

// ---- input resolution ----

fn resolve_graph(input: &str) -> Result<Graph, Failure> {
    let trimmed = input.trim();
    if trimmed == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Parse(format!("reading stdin: {e}")))?;
        return parse_graph_text(text.trim());
    }
    if let Some(g) = builtin_graph(trimmed) {
        return Ok(g);
    }
    if trimmed.starts_with('{') {
        return parse_graph_text(trimmed);
    }
    if let Ok(g) = from_graph6(trimmed) {
        return Ok(g);
    }
    if let Ok(text) = fs::read_to_string(trimmed) {
        return parse_graph_text(text.trim());
    }
    Err(Failure::Parse(format!(
        "cannot read {input:?} as a named graph, graph6 string, JSON edge list, or file"
    )))
}

fn parse_graph_text(text: &str) -> Result<Graph, Failure> {
    if text.starts_with('{') {
        let list: EdgeListJson = serde_json::from_str(text)
            .map_err(|e| Failure::Parse(format!("bad edge-list JSON: {e}")))?;
        list.to_graph()
            .map_err(|e| Failure::Parse(format!("bad edge list: {e}")))
    } else {
        from_graph6(text).map_err(|e| Failure::Parse(format!("bad graph6 input: {e}")))
    }
}

/// Lowercase family names with a numeric suffix, plus a few fixed names.
fn builtin_graph(name: &str) -> Option<Graph> {
    match name {
        "house" => return Some(house_graph()),
        "glg-counterexample-k2" => return Some(glg_counterexample(2)),
        "glg-counterexample-k3" => return Some(glg_counterexample(3)),
        "glg-counterexample-k4" => return Some(glg_counterexample(4)),
        _ => {}
    }
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (family, digits) = name.split_at(split);
    let n: usize = digits.parse().ok()?;
    match family {
        "path" | "p" => Some(path(n)),
        "cycle" | "c" => Some(cycle(n)),
        "star" => Some(star(n)),
        "complete" | "k" => Some(complete(n)),
        _ => None,
    }
}

fn parse_count_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad list entry {:?}", item.trim())))
        })
        .collect()
}

fn parse_property(text: &str) -> Result<RankProperty, Failure> {
    match text {
        "drp" => Ok(RankProperty::Drp),
        "cdrp" => Ok(RankProperty::Cdrp),
        other => usage(format!("unknown property {other:?}, expected drp or cdrp")),
    }
}

// ---- analyze ----

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct InputEcho {
    graph6: Option<String>,
    n: usize,
    edges: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalysisReport {
    input: InputEcho,
    is_cograph: bool,
    cotree: Option<Cotree>,
    p4_witness: Option<(usize, usize, usize, usize)>,
    dilworth: DilworthReport,
    spectral: SpectralProfile,
    drp: bool,
    cdrp: bool,
    duplication_classes: Vec<VertexSet>,
    coduplication_classes: Vec<VertexSet>,
}

fn run_analyze(input: &str) -> Result<ExitCode, Failure> {
    let g = resolve_graph(input)?;
    let report = AnalysisReport {
        input: InputEcho {
            graph6: to_graph6(&g).ok(),
            n: g.n(),
            edges: g.edge_count(),
        },
        is_cograph: is_cograph(&g),
        cotree: build_cotree(&g).ok(),
        p4_witness: find_induced_p4(&g),
        dilworth: dilworth_report(&g),
        spectral: multiplicity_profile(&g),
        drp: rank_property_holds(&g, RankProperty::Drp),
        cdrp: rank_property_holds(&g, RankProperty::Cdrp),
        duplication_classes: duplication_classes(&g),
        coduplication_classes: coduplication_classes(&g),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("analysis serializes")
    );
    eprintln!(
        "n={} edges={} cograph={} threshold={} dilworth={} mult0={} multMinus1={} maxOther={} drp={} cdrp={}",
        report.input.n,
        report.input.edges,
        report.is_cograph,
        is_threshold(&g),
        report.dilworth.dilworth,
        report.spectral.mult0,
        report.spectral.mult_minus1,
        report.spectral.max_other_mult,
        report.drp,
        report.cdrp,
    );
    Ok(ExitCode::SUCCESS)
}

// ---- gen ----

fn run_gen(args: GenArgs) -> Result<ExitCode, Failure> {
    let (g, label) = match &args.family {
        GenFamily::Path { n } => (path(*n), format!("path({n})")),
        GenFamily::Cycle { n } => (cycle(*n), format!("cycle({n})")),
        GenFamily::Complete { n } => (complete(*n), format!("complete({n})")),
        GenFamily::Star { n } => (star(*n), format!("star({n})")),
        GenFamily::Multipartite { parts } => {
            let sizes = parse_count_list(parts)?;
            (complete_multipartite(&sizes), format!("multipartite({parts})"))
        }
        GenFamily::Cocktail { n } => (cocktail_party(*n), format!("cocktail({n})")),
        GenFamily::Threshold { code } => {
            let sequence = CreationSequence::from_code(code)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (sequence.to_graph(), format!("threshold({code})"))
        }
        GenFamily::Tightness { s, k } => {
            if *s < 1 || *k < 1 {
                return usage("tightness family needs s >= 1 and k >= 1");
            }
            (tightness_family(*s, *k), format!("tightness({s},{k})"))
        }
        GenFamily::Glg { base, counts } => {
            let base_graph = resolve_graph(base)?;
            let count_list = parse_count_list(counts)?;
            let g = generalized_line_graph(&base_graph, &count_list)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (g, format!("glg({base}; {counts})"))
        }
        GenFamily::House => (house_graph(), "house".to_string()),
        GenFamily::RandomCograph { n, seed } => {
            if *n < 1 {
                return usage("random cograph needs at least one vertex");
            }
            (random_cograph(*n, *seed), format!("random-cograph({n}, seed {seed})"))
        }
    };
    let text = match args.format.as_str() {
        "g6" => to_graph6(&g).map_err(|e| Failure::Usage(format!("{e}; use --format json")))?,
        "json" => serde_json::to_string_pretty(&EdgeListJson::from_graph(&g))
            .expect("edge list serializes"),
        other => return usage(format!("unknown format {other:?}, expected g6 or json")),
    };
    match &args.out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Failure::Usage(format!("writing {path:?}: {e}")))?,
        None => println!("{text}"),
    }
    eprintln!("{label}: {} vertices, {} edges", g.n(), g.edge_count());
    Ok(ExitCode::SUCCESS)
}

// ---- verify ----

fn require<T>(value: Option<T>, flag: &str, id: &str) -> Result<T, Failure> {
    match value {
        Some(v) => Ok(v),
        None => usage(format!("verify {id} requires {flag}")),
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let id = args.theorem_id.as_str();
    let report = match id {
        DILWORTH_BOUND_ID => {
            let g = resolve_graph(&require(args.input, "--input", id)?)?;
            check_dilworth_bound(&g)
        }
        THRESHOLD_SIMPLE_ID => {
            let g = resolve_graph(&require(args.input, "--input", id)?)?;
            check_threshold_simple(&g).map_err(|e| Failure::Usage(e.to_string()))?
        }
        "royle-drp" | "royle-cdrp" => {
            let property = if id == "royle-drp" {
                RankProperty::Drp
            } else {
                RankProperty::Cdrp
            };
            let g = resolve_graph(&require(args.input, "--input", id)?)?;
            check_rank_property(&g, property)
        }
        GLG_MULT_ID => {
            let base = resolve_graph(&require(args.base, "--base", id)?)?;
            let counts = parse_count_list(&require(args.counts, "--counts", id)?)?;
            check_glg_multiplicity(&base, &counts).map_err(|e| Failure::Usage(e.to_string()))?
        }
        TIGHTNESS_ID => {
            let s = require(args.s, "--s", id)?;
            let k = require(args.k, "--k", id)?;
            check_tightness(s, k).map_err(|e| Failure::Usage(e.to_string()))?
        }
        DISTINCT_MULTIPARTITE_ID => {
            let parts = parse_count_list(&require(args.parts, "--parts", id)?)?;
            check_distinct_multipartite(&parts).map_err(|e| Failure::Usage(e.to_string()))?
        }
        RANK_PROPERTY_SWEEP_ID => {
            let max_n = args.max_n.unwrap_or(7);
            if max_n > 8 {
                return usage("the sweep handles --max-n up to 8");
            }
            verify_theorem_4_3(max_n)
        }
        other => return usage(format!("unknown theorem id {other:?}")),
    };
    Ok(emit_report(&report))
}

fn emit_report(report: &VerificationReport) -> ExitCode {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
    if report.holds {
        eprintln!("{}: holds", report.theorem_id);
        ExitCode::SUCCESS
    } else {
        eprintln!("{}: VIOLATED", report.theorem_id);
        ExitCode::from(1)
    }
}

// ---- fuzz ----

fn run_fuzz(args: FuzzArgs) -> Result<ExitCode, Failure> {
    let forbidden = resolve_graph(&args.forbidden)?;
    let property = parse_property(&args.property)?;
    let mode = match args.mode.as_str() {
        "exhaustive" => {
            if args.count.is_some() || args.seed.is_some() {
                return usage("--count and --seed apply to sampled mode only");
            }
            SearchMode::Exhaustive
        }
        "sampled" => SearchMode::Sampled {
            count: require(args.count, "--count", "sampled mode")?,
            seed: require(args.seed, "--seed", "sampled mode")?,
        },
        other => return usage(format!("unknown mode {other:?}, expected exhaustive or sampled")),
    };
    let spec = SearchSpec {
        forbidden,
        property,
        max_n: args.max_n,
        mode,
    };
    let found = find_counterexample_jobs(&spec, args.jobs)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let spec_echo = json!({
        "forbidden": to_graph6(&spec.forbidden).ok(),
        "property": property.label(),
        "maxN": spec.max_n,
        "mode": match spec.mode {
            SearchMode::Exhaustive => json!("exhaustive"),
            SearchMode::Sampled { count, seed } => json!({"sampled": {"count": count, "seed": seed}}),
        },
    });
    match found {
        None => {
            let output = json!({
                "found": false,
                "spec": spec_echo,
                "witness": null,
                "report": null,
            });
            println!("{}", serde_json::to_string_pretty(&output).expect("serializes"));
            eprintln!("no counterexample within the search range");
            Ok(ExitCode::SUCCESS)
        }
        Some((g, report)) => {
            let witness_g6 = to_graph6(&g).ok();
            let output = json!({
                "found": true,
                "spec": spec_echo,
                "witness": {
                    "graph6": witness_g6,
                    "n": g.n(),
                    "edges": g.edges(),
                },
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&output).expect("serializes"));
            eprintln!(
                "counterexample on {} vertices: {}",
                g.n(),
                witness_g6.unwrap_or_else(|| "(too large for graph6)".to_string())
            );
            Ok(ExitCode::from(1))
        }
    }
}
