//! Command-line surface: parse or generate a maximal planar graph, decompose
//! it into its clique hierarchy and bubble tree, and emit the results.
//!
//! Exit codes: 0 success, 1 validation or analysis failure, 2 usage error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bubbletree::bubbles::{all_bubbles, build_bubble_tree, BubbleTree};
use bubbletree::export;
use bubbletree::generators;
use bubbletree::graph::{parse_edge_list, PlanarGraph};
use bubbletree::hierarchy::{build_forest, HierarchyForest, TieBreakPolicy};
use bubbletree::oracle;
use bubbletree::pmfg;

#[derive(Parser)]
#[command(name = "bubbletree", version, about = "Decomposes maximal planar graphs into their 3-clique hierarchy and bubble tree")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Interior choice on an exact size tie
    #[arg(long, global = true, value_enum, default_value_t = TieBreak::Min)]
    tie_break: TieBreak,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TieBreak {
    /// smallest vertex id goes inside
    Min,
    /// smallest vertex id goes outside
    Max,
}

impl From<TieBreak> for TieBreakPolicy {
    fn from(t: TieBreak) -> Self {
        match t {
            TieBreak::Min => TieBreakPolicy::SmallestMinVertexIn,
            TieBreak::Max => TieBreakPolicy::LargestMinVertexIn,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph and print summary statistics
    Analyze { file: String },
    /// Emit the clique hierarchy forest
    Hierarchy { file: String },
    /// Emit the bubbles and the bubble tree
    Bubbles { file: String },
    /// Build a planar maximally filtered graph from a weight-matrix CSV
    Pmfg { csv: String },
    /// Emit a catalog or random graph as an edge list
    Generate {
        #[arg(value_enum)]
        kind: GenerateKind,
        /// Apollonian generation
        #[arg(long, default_value_t = 1)]
        gen: u32,
        /// Vertex count for random triangulations
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Seed for random triangulations
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Catalog name for `named`
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the brute-force verification suite against a graph
    Verify { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    Apollonian,
    TwoBubble,
    Random,
    Named,
}

/// Failures mapped to exit codes: Usage -> 2, Failure -> 1.
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<bubbletree::Error> for CliError {
    fn from(e: bubbletree::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let f = File::open(path)
            .map_err(|e| CliError::Usage(format!("cannot read '{path}': {e}")))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

fn read_graph(path: &str) -> Result<PlanarGraph, CliError> {
    let g = parse_edge_list(open_input(path)?)?;
    let report = g.validate_maximal_planar();
    if !report.accepted() {
        return Err(CliError::Failure(format!("not a maximal planar graph: {}", report.message)));
    }
    Ok(g)
}

fn analyze_graph(g: &PlanarGraph, policy: TieBreakPolicy) -> Result<(HierarchyForest, BubbleTree), CliError> {
    let h = build_forest(g, g.enumerate_3cliques(), policy)?;
    let t = build_bubble_tree(all_bubbles(&h)?, &h)?;
    Ok((h, t))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    let mut content = content.to_string();
    if !content.ends_with('\n') {
        content.push('\n');
    }
    match out {
        None => {
            io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Failure(format!("write failed: {e}")))
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Failure(format!("cannot write '{}': {e}", path.display()))),
    }
}

fn unsupported(cmd: &str, supported: &str) -> CliError {
    CliError::Usage(format!("{cmd} supports only {supported} output"))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let policy: TieBreakPolicy = cli.tie_break.into();
    match cli.command {
        Command::Analyze { file } => {
            let g = read_graph(&file)?;
            let (h, t) = analyze_graph(&g, policy)?;
            let summary = export::summarize(&g, &h, &t);
            let text = match cli.format {
                None => summary.to_string(),
                Some(Format::Json) => summary.to_json(),
                Some(_) => return Err(unsupported("analyze", "json or plain-text")),
            };
            emit(&cli.out, &text)
        }
        Command::Hierarchy { file } => {
            let g = read_graph(&file)?;
            let (h, _) = analyze_graph(&g, policy)?;
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => export::hierarchy_json(&g, &h),
                Format::Dot => export::hierarchy_dot(&g, &h),
                Format::Edgelist => return Err(unsupported("hierarchy", "json or dot")),
            };
            emit(&cli.out, &text)
        }
        Command::Bubbles { file } => {
            let g = read_graph(&file)?;
            let (h, t) = analyze_graph(&g, policy)?;
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => export::bubbles_json(&g, &h, &t),
                Format::Dot => export::bubbles_dot(&g, &h, &t),
                Format::Edgelist => return Err(unsupported("bubbles", "json or dot")),
            };
            emit(&cli.out, &text)
        }
        Command::Pmfg { csv } => {
            let mut input = String::new();
            open_input(&csv)?
                .read_to_string(&mut input)
                .map_err(|e| CliError::Failure(format!("cannot read '{csv}': {e}")))?;
            let matrix = pmfg::parse_weight_csv(input.as_bytes())?;
            let g = pmfg::build_pmfg(&matrix)?;
            let text = match cli.format.unwrap_or(Format::Edgelist) {
                Format::Edgelist => export::edge_list(&g),
                Format::Dot => export::graph_dot(&g),
                Format::Json => export::graph_json(&g),
            };
            emit(&cli.out, &text)
        }
        Command::Generate { kind, gen, n, seed, name } => {
            let g = match kind {
                GenerateKind::Apollonian => generators::apollonian(gen)?,
                GenerateKind::TwoBubble => generators::two_bubble_example(),
                GenerateKind::Random => generators::random_triangulation(n, seed)?,
                GenerateKind::Named => {
                    let name = name.ok_or_else(|| {
                        CliError::Usage("generate named requires --name".to_string())
                    })?;
                    generators::named_graph(&name)
                        .map_err(|e| CliError::Usage(e.to_string()))?
                }
            };
            let text = match cli.format.unwrap_or(Format::Edgelist) {
                Format::Edgelist => export::edge_list(&g),
                Format::Dot => export::graph_dot(&g),
                Format::Json => export::graph_json(&g),
            };
            emit(&cli.out, &text)
        }
        Command::Verify { file } => {
            let g = read_graph(&file)?;
            let reports = oracle::run_all(&g);
            let mut lines = String::new();
            let mut all_passed = true;
            for r in &reports {
                let line = serde_json::json!({
                    "check": r.name,
                    "skipped": r.skipped,
                    "violations": r.violations.len(),
                    "passed": r.passed(),
                    "details": r.violations,
                });
                lines.push_str(&line.to_string());
                lines.push('\n');
                all_passed &= r.passed();
            }
            emit(&cli.out, &lines)?;
            if all_passed {
                Ok(())
            } else {
                Err(CliError::Failure("verification found violations".to_string()))
            }
        }
    }
}
