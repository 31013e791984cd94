//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 usage, 2 I/O or parse failure, 3 verification
//! failure, 4 counter overflow or size cap.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fourcycle_core::{
    avg_degeneracy, count_global, count_per_edge, count_per_vertex, enumerate_cycles, gen_grid,
    CountError, CsrGraph, GraphError, OracleError,
};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::bench::{bench_one, ratios, BenchSettings, Quantity, Variant};
use crate::load::{load_edge_list, write_edge_list, LoadError, LoadOptions, LoadReport};
use crate::verify::{verify, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "fourcycle",
    version,
    about = "Count, localize and enumerate 4-cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print n, m, max degree, average degeneracy and the 4-cycle count.
    Count(CommonArgs),
    /// Print the number of 4-cycles through every vertex.
    Vertex(CommonArgs),
    /// Print the number of 4-cycles through every edge.
    Edge(CommonArgs),
    /// Stream every 4-cycle as `v u y x`.
    Enumerate(CommonArgs),
    /// Check all variants against the brute-force oracles (small graphs).
    Verify(CommonArgs),
    /// Time array algorithms against hash-map baselines.
    Bench(BenchArgs),
    /// Write a generated graph as an edge list.
    Generate {
        #[arg(long, value_name = "RxC")]
        grid: GridSpec,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(required_unless_present = "grid", conflicts_with = "grid")]
    input: Option<PathBuf>,
    /// Generate an R×C grid instead of reading a file.
    #[arg(long, value_name = "RxC")]
    grid: Option<GridSpec>,
    /// Reject duplicate edges and self-loops instead of dropping them.
    #[arg(long)]
    strict: bool,
    /// Renumber vertex IDs densely in order of first appearance.
    #[arg(long)]
    remap: bool,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = QuantityArg::All)]
    quantity: QuantityArg,
    #[arg(long, value_enum, default_value_t = VariantArg::All)]
    variant: VariantArg,
    /// Timed repetitions; the median is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    reps: u64,
    #[arg(long, default_value_t = 1)]
    warmups: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuantityArg {
    Global,
    Vertex,
    Edge,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Array,
    Map,
    All,
}

/// `--grid RxC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub rows: usize,
    pub cols: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (rows, cols) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected RxC, got {s:?}"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&d| d > 0)
                .ok_or_else(|| format!("grid dimension {t:?} is not a positive integer"))
        };
        Ok(Self {
            rows: parse(rows)?,
            cols: parse(cols)?,
        })
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Verify(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Graph(GraphError::EmptyDimension) => EXIT_USAGE,
            Self::Load(_) | Self::Io(_) => EXIT_IO,
            Self::Graph(_) | Self::Count(_) | Self::Oracle(_) => EXIT_LIMIT,
            Self::Verify(_) => EXIT_VERIFY,
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Oracle(e) => Self::Oracle(e),
            VerifyError::Count(e) => Self::Count(e),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err).and_then(|code| {
        out.flush()?;
        Ok(code)
    }) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Count(args) => cmd_count(&args, out, err),
        Command::Vertex(args) => cmd_vertex(&args, out, err),
        Command::Edge(args) => cmd_edge(&args, out, err),
        Command::Enumerate(args) => cmd_enumerate(&args, out, err),
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Bench(args) => cmd_bench(&args, out, err),
        Command::Generate { grid } => {
            let g = gen_grid(grid.rows, grid.cols)?;
            write_edge_list(&g, &mut *out)?;
            Ok(EXIT_OK)
        }
    }
}

struct Loaded {
    graph: CsrGraph,
    label: String,
}

fn load_input(args: &InputArgs, err: &mut dyn Write) -> Result<Loaded, CliError> {
    if let Some(grid) = args.grid {
        return Ok(Loaded {
            graph: gen_grid(grid.rows, grid.cols)?,
            label: format!("grid-{}x{}", grid.rows, grid.cols),
        });
    }
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| CliError::Usage("an input file or --grid is required".into()))?;
    let options = LoadOptions {
        strict: args.strict,
        remap_ids: args.remap,
    };
    let (graph, report) = if path.as_os_str() == "-" {
        load_edge_list(io::stdin().lock(), options)?
    } else {
        let file = File::open(path).map_err(|e| {
            CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
        })?;
        load_edge_list(BufReader::new(file), options)?
    };
    note_dropped(&report, err)?;
    Ok(Loaded {
        graph,
        label: path.display().to_string(),
    })
}

fn note_dropped(report: &LoadReport, err: &mut dyn Write) -> io::Result<()> {
    if report.duplicates_dropped > 0 || report.self_loops_dropped > 0 {
        writeln!(
            err,
            "note: dropped {} duplicate edges and {} self-loops",
            report.duplicates_dropped, report.self_loops_dropped
        )?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CountReport {
    graph: String,
    n: usize,
    m: usize,
    half_edges: usize,
    max_degree: usize,
    avg_degeneracy: Option<f64>,
    c4: u64,
}

fn cmd_count(args: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let Loaded { graph, label } = load_input(&args.input, err)?;
    let avg = match avg_degeneracy(&graph) {
        Ok(d) => Some(d),
        Err(GraphError::NoEdges) => {
            writeln!(
                err,
                "warning: average degeneracy is undefined without edges"
            )?;
            None
        }
        Err(e) => return Err(e.into()),
    };
    let report = CountReport {
        graph: label,
        n: graph.vertex_count(),
        m: graph.edge_count(),
        half_edges: graph.half_edge_count(),
        max_degree: graph.max_degree(),
        avg_degeneracy: avg,
        c4: count_global(&graph)?,
    };
    match args.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("plain data")
        )?,
        Format::Tsv => {
            let avg = report
                .avg_degeneracy
                .map_or_else(|| "null".to_owned(), |d| d.to_string());
            writeln!(out, "graph\t{}", report.graph)?;
            writeln!(out, "n\t{}", report.n)?;
            writeln!(out, "m\t{}", report.m)?;
            writeln!(out, "half_edges\t{}", report.half_edges)?;
            writeln!(out, "max_degree\t{}", report.max_degree)?;
            writeln!(out, "avg_degeneracy\t{avg}")?;
            writeln!(out, "c4\t{}", report.c4)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct IdentityCheck {
    quarter_sum: u64,
    global: u64,
    holds: bool,
}

impl IdentityCheck {
    fn new(local: &[u64], global: u64) -> Self {
        let sum: u128 = local.iter().map(|&c| u128::from(c)).sum();
        Self {
            quarter_sum: (sum / 4) as u64,
            global,
            holds: sum == 4 * u128::from(global),
        }
    }

    fn write_footer(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "# identity\tsum/4\t{}\tglobal\t{}\t{}",
            self.quarter_sum,
            self.global,
            if self.holds { "ok" } else { "FAIL" }
        )
    }

    fn exit_code(&self) -> i32 {
        if self.holds {
            EXIT_OK
        } else {
            EXIT_VERIFY
        }
    }
}

fn cmd_vertex(
    args: &CommonArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let Loaded { graph, label } = load_input(&args.input, err)?;
    let local = count_per_vertex(&graph)?;
    let identity = IdentityCheck::new(&local, count_global(&graph)?);
    match args.format {
        Format::Json => {
            let doc = json!({ "graph": label, "counts": local, "identity": identity });
            writeln!(out, "{doc}")?;
        }
        Format::Tsv => {
            for (v, c) in local.iter().enumerate() {
                writeln!(out, "{v}\t{c}")?;
            }
            identity.write_footer(out)?;
        }
    }
    Ok(identity.exit_code())
}

fn cmd_edge(args: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let Loaded { graph, label } = load_input(&args.input, err)?;
    let per_edge = count_per_edge(&graph)?;
    let identity = IdentityCheck::new(&per_edge, count_global(&graph)?);
    match args.format {
        Format::Json => {
            let edges: Vec<_> = graph
                .edges()
                .zip(&per_edge)
                .map(|((u, v), &c)| [u64::from(u), u64::from(v), c])
                .collect();
            let doc = json!({ "graph": label, "edges": edges, "identity": identity });
            writeln!(out, "{doc}")?;
        }
        Format::Tsv => {
            for ((u, v), c) in graph.edges().zip(&per_edge) {
                writeln!(out, "{u}\t{v}\t{c}")?;
            }
            identity.write_footer(out)?;
        }
    }
    Ok(identity.exit_code())
}

fn cmd_enumerate(
    args: &CommonArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let Loaded { graph, .. } = load_input(&args.input, err)?;
    let format = args.format;
    let total = enumerate_cycles(&graph, |t| match format {
        Format::Tsv => writeln!(out, "{}\t{}\t{}\t{}", t.v, t.u, t.y, t.x),
        Format::Json => writeln!(out, "[{},{},{},{}]", t.v, t.u, t.y, t.x),
    })?;
    match format {
        Format::Tsv => writeln!(out, "total\t{total}")?,
        Format::Json => writeln!(out, "{}", json!({ "total": total }))?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    args: &CommonArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let Loaded { graph, label } = load_input(&args.input, err)?;
    let report = verify(&graph)?;
    match args.format {
        Format::Json => {
            let doc = json!({ "graph": label, "passed": report.passed(), "report": report });
            writeln!(out, "{doc}")?;
        }
        Format::Tsv => {
            for check in &report.checks {
                let status = if check.passed { "pass" } else { "FAIL" };
                writeln!(out, "{}\t{status}\t{}", check.name, check.detail)?;
            }
            writeln!(out, "global\t{}", report.global)?;
            let overall = if report.passed() { "pass" } else { "FAIL" };
            writeln!(out, "result\t{overall}")?;
        }
    }
    match report.first_failure() {
        None => Ok(EXIT_OK),
        Some(check) => Err(CliError::Verify(format!(
            "verification failed at {}: {}",
            check.name, check.detail
        ))),
    }
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let Loaded { graph, label } = load_input(&args.common.input, err)?;
    let quantities: &[Quantity] = match args.quantity {
        QuantityArg::Global => &[Quantity::Global],
        QuantityArg::Vertex => &[Quantity::Vertex],
        QuantityArg::Edge => &[Quantity::Edge],
        QuantityArg::All => &Quantity::ALL,
    };
    let variants: &[Variant] = match args.variant {
        VariantArg::Array => &[Variant::Array],
        VariantArg::Map => &[Variant::Map],
        VariantArg::All => &Variant::ALL,
    };
    let settings = BenchSettings {
        repetitions: usize::try_from(args.reps).map_err(|e| CliError::Usage(e.to_string()))?,
        warmups: usize::try_from(args.warmups).map_err(|e| CliError::Usage(e.to_string()))?,
    };

    let tsv = args.common.format == Format::Tsv;
    if tsv {
        writeln!(
            out,
            "algorithm\tvariant\tgraph\tn\tm\tseconds\trepetitions\twarmups\tresult"
        )?;
    }
    let mut records = Vec::new();
    for &q in quantities {
        for &v in variants {
            let r = bench_one(&graph, &label, q, v, settings)?;
            if tsv {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{:.6}\t{}\t{}\t{}",
                    r.algorithm,
                    r.variant,
                    r.graph,
                    r.n,
                    r.m,
                    r.seconds,
                    r.repetitions,
                    r.warmups,
                    r.result
                )?;
                out.flush()?;
            }
            records.push(r);
        }
    }
    let ratios = ratios(&records);
    if tsv {
        for r in &ratios {
            writeln!(
                out,
                "# ratio map/array\t{}\t{:.3}",
                r.algorithm, r.map_over_array
            )?;
        }
    } else {
        writeln!(out, "{}", json!({ "records": records, "ratios": ratios }))?;
    }

    let mut results = records.iter().map(|r| r.result);
    let first = results.next();
    if results.any(|r| Some(r) != first) {
        return Err(CliError::Verify(
            "benchmark variants disagree on the 4-cycle count".into(),
        ));
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_spec_parsing() {
        assert_eq!(
            "262144x128".parse::<GridSpec>(),
            Ok(GridSpec {
                rows: 262144,
                cols: 128
            })
        );
        assert!("3".parse::<GridSpec>().is_err());
        assert!("0x3".parse::<GridSpec>().is_err());
        assert!("ax3".parse::<GridSpec>().is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
