//! Command implementations behind the `lrcm` binary.
//!
//! Each command renders its output to a `String` so it can be tested
//! without spawning a process; `main.rs` only handles I/O and exit codes.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use lrcm::bench::{
    fit_power_law, fit_summary_json, run_block_experiment, run_scaling_experiment, write_block_csv,
    write_scaling_csv, BlockExperiment, PowerLawFit,
};
use lrcm::io::{read_edge_list, read_matrix_market};
use lrcm::verify::{components_bfs, zero_multiplicity, DEFAULT_ZERO_TOLERANCE};
use lrcm::{
    build_laplacian, components_lrcm, permute_symmetric, rcm_order, Error, Graph, IndexBase,
};

/// Exit status for success, bad input, and failed verification or contract.
pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    if err.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_VERIFY
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lrcm",
    version,
    about = "Connected components via RCM-ordered Laplacians"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Index base of node labels in input and output.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub base: u8,
    /// Drop self-loops and merge duplicate edges instead of rejecting them.
    #[arg(long, global = true)]
    pub sanitize: bool,
    /// Cross-check the result against independent oracles.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub input_format: Option<InputFormat>,
}

impl GlobalOpts {
    pub fn index_base(&self) -> IndexBase {
        if self.base == 0 {
            IndexBase::Zero
        } else {
            IndexBase::One
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    EdgeList,
    MatrixMarket,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Detect connected components.
    Components {
        /// Input file; stdin when omitted or `-`.
        input: Option<PathBuf>,
    },
    /// Print the RCM ordering and the bandwidth before and after.
    Order { input: Option<PathBuf> },
    /// Run timing experiments and write CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMode {
    Blocks,
    Scale,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub mode: BenchMode,
    /// blocks: target node count; scale: comma-separated node counts.
    #[arg(long)]
    pub n: Option<String>,
    /// Block-count exponents, `lo..hi` (inclusive) or comma-separated.
    #[arg(long, default_value = "5..13")]
    pub p: String,
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Target nnz(A) / n^2 for scale mode.
    #[arg(long, default_value_t = 0.05)]
    pub sparsity: f64,
    /// Expected edges per node inside each block (blocks mode).
    #[arg(long, default_value_t = 2.0)]
    pub edges_per_node: f64,
    /// Divide phase times by the total of a two-block baseline run.
    #[arg(long)]
    pub normalize: bool,
    /// Where to write the JSON fit summary (scale mode).
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

/// Infers the input format from an explicit flag or the file extension.
pub fn resolve_format(explicit: Option<InputFormat>, path: Option<&Path>) -> InputFormat {
    explicit.unwrap_or_else(
        || match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") || ext.eq_ignore_ascii_case("mm") => {
                InputFormat::MatrixMarket
            }
            _ => InputFormat::EdgeList,
        },
    )
}

pub fn read_graph<R: BufRead>(
    reader: R,
    format: InputFormat,
    opts: &GlobalOpts,
) -> lrcm::Result<Graph> {
    match format {
        InputFormat::EdgeList => read_edge_list(reader, opts.index_base(), opts.sanitize),
        InputFormat::MatrixMarket => read_matrix_market(reader),
    }
}

pub fn load_graph(input: Option<&Path>, opts: &GlobalOpts) -> lrcm::Result<Graph> {
    let format = resolve_format(opts.input_format, input);
    match input {
        Some(p) if p != Path::new("-") => {
            let file = File::open(p).map_err(|e| Error::Parse {
                line: 0,
                message: format!("{}: {e}", p.display()),
            })?;
            read_graph(BufReader::new(file), format, opts)
        }
        _ => {
            let mut buf = Vec::new();
            io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Error::Parse {
                    line: 0,
                    message: e.to_string(),
                })?;
            read_graph(buf.as_slice(), format, opts)
        }
    }
}

/// JSON record printed by `components`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentsReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub components: Vec<Vec<usize>>,
    pub rcm: Vec<usize>,
    pub cut: Vec<usize>,
}

/// JSON record printed by `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub rcm: Vec<usize>,
    pub bandwidth_before: usize,
    pub bandwidth_after: usize,
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn components_report(g: &Graph, base: IndexBase) -> lrcm::Result<ComponentsReport> {
    let out = components_lrcm(g)?;
    let shift = base.offset();
    // positions are reported in the same base as labels
    let cut = out.cuts.as_slice().iter().map(|&c| c - 1 + shift).collect();
    Ok(ComponentsReport {
        n: g.n(),
        m: g.m(),
        k: out.partition.len(),
        components: out
            .partition
            .components()
            .iter()
            .map(|c| c.iter().map(|&v| v + shift).collect())
            .collect(),
        rcm: out.order.forward().iter().map(|&v| v + shift).collect(),
        cut,
    })
}

/// Runs the BFS oracle and, for small graphs, the spectral oracle against
/// the detector's component count.
pub fn verify_components(
    g: &Graph,
    report: &ComponentsReport,
    base: IndexBase,
) -> lrcm::Result<()> {
    let bfs = components_bfs(g);
    let shift = base.offset();
    let expected: Vec<Vec<usize>> = bfs
        .components()
        .iter()
        .map(|c| c.iter().map(|&v| v + shift).collect())
        .collect();
    if expected != report.components {
        return Err(Error::Verification(format!(
            "BFS finds {} components, L-RCM finds {}",
            bfs.len(),
            report.k
        )));
    }
    if g.n() <= 128 {
        let z = zero_multiplicity(&build_laplacian(g), DEFAULT_ZERO_TOLERANCE)?;
        if z != report.k {
            return Err(Error::Verification(format!(
                "zero eigenvalue multiplicity {z} differs from {} components",
                report.k
            )));
        }
    }
    Ok(())
}

pub fn render_components(report: &ComponentsReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => report
            .components
            .iter()
            .map(|c| format!("{}\n", join(c)))
            .collect(),
    }
}

pub fn order_report(g: &Graph, base: IndexBase) -> lrcm::Result<OrderReport> {
    let l = build_laplacian(g);
    let order = rcm_order(g);
    let lhat = permute_symmetric(&l, &order)?;
    Ok(OrderReport {
        rcm: order.forward().iter().map(|&v| v + base.offset()).collect(),
        bandwidth_before: l.bandwidth(),
        bandwidth_after: lhat.bandwidth(),
    })
}

pub fn render_order(report: &OrderReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => format!(
            "bandwidth_before {}\nbandwidth_after {}\nrcm {}\n",
            report.bandwidth_before,
            report.bandwidth_after,
            join(&report.rcm)
        ),
    }
}

fn parse_list(s: &str, what: &str) -> lrcm::Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Config(format!("invalid {what} '{t}'")))
        })
        .collect()
}

/// `lo..hi` (inclusive) or a comma-separated list.
pub fn parse_exponents(s: &str) -> lrcm::Result<Vec<u32>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("invalid exponent range '{s}'")))?;
        let hi: u32 = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| Error::Config(format!("invalid exponent range '{s}'")))?;
        if lo > hi {
            return Err(Error::Config(format!("empty exponent range '{s}'")));
        }
        return Ok((lo..=hi).collect());
    }
    Ok(parse_list(s, "exponent")?
        .into_iter()
        .map(|p| p as u32)
        .collect())
}

/// Result of a bench run: the CSV plus, for scale mode, the fit.
#[derive(Debug, Clone)]
pub struct BenchOutput {
    pub csv: String,
    pub fit: Option<PowerLawFit>,
}

pub fn run_bench(args: &BenchArgs) -> lrcm::Result<BenchOutput> {
    let mut csv = Vec::new();
    match args.mode {
        BenchMode::Blocks => {
            let n = match &args.n {
                Some(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("invalid node count '{s}'")))?,
                None => 1 << 16,
            };
            let mut cfg = BlockExperiment::new(
                n,
                parse_exponents(&args.p)?,
                args.reps.unwrap_or(10),
                args.seed,
            );
            cfg.edges_per_node = args.edges_per_node;
            let mut rows = run_block_experiment(&cfg)?;
            if args.normalize {
                let baseline = run_block_experiment(&BlockExperiment {
                    exponents: vec![1],
                    ..cfg.clone()
                })?;
                let total = baseline[0].total_ms();
                rows = rows.iter().map(|r| r.normalized(total)).collect();
            }
            write_block_csv(&rows, &mut csv).expect("writing to memory");
            Ok(BenchOutput {
                csv: String::from_utf8(csv).expect("ascii"),
                fit: None,
            })
        }
        BenchMode::Scale => {
            let n_list = match &args.n {
                Some(s) => parse_list(s, "node count")?,
                None => (1..=12).map(|i| i * 1000).collect(),
            };
            let points =
                run_scaling_experiment(&n_list, args.sparsity, args.reps.unwrap_or(5), args.seed)?;
            write_scaling_csv(&points, &mut csv).expect("writing to memory");
            let fit = if points.len() >= 3 {
                Some(fit_power_law(&points)?)
            } else {
                None
            };
            Ok(BenchOutput {
                csv: String::from_utf8(csv).expect("ascii"),
                fit,
            })
        }
    }
}

pub fn fit_json(fit: PowerLawFit) -> String {
    fit_summary_json(fit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_ranges_and_lists() {
        assert_eq!(
            parse_exponents("5..13").unwrap(),
            (5..=13).collect::<Vec<_>>()
        );
        assert_eq!(parse_exponents("1..=2").unwrap(), vec![1, 2]);
        assert_eq!(parse_exponents("3, 7").unwrap(), vec![3, 7]);
        assert!(parse_exponents("4..2").is_err());
        assert!(parse_exponents("a").is_err());
    }

    #[test]
    fn format_inferred_from_extension() {
        assert_eq!(
            resolve_format(None, Some(Path::new("a.mtx"))),
            InputFormat::MatrixMarket
        );
        assert_eq!(
            resolve_format(None, Some(Path::new("a.txt"))),
            InputFormat::EdgeList
        );
        assert_eq!(resolve_format(None, None), InputFormat::EdgeList);
        assert_eq!(
            resolve_format(Some(InputFormat::EdgeList), Some(Path::new("a.mtx"))),
            InputFormat::EdgeList
        );
    }

    #[test]
    fn exit_codes_follow_error_kind() {
        assert_eq!(exit_code(&Error::SelfLoop { node: 1 }), EXIT_INPUT);
        assert_eq!(exit_code(&Error::Config("x".into())), EXIT_INPUT);
        assert_eq!(exit_code(&Error::Verification("x".into())), EXIT_VERIFY);
        assert_eq!(exit_code(&Error::Contract("x".into())), EXIT_VERIFY);
    }

    #[test]
    fn text_renderings() {
        let g = Graph::from_edges(3, &[(1, 2)], IndexBase::One, false).unwrap();
        let r = components_report(&g, IndexBase::One).unwrap();
        assert_eq!(render_components(&r, OutputFormat::Text), "1 2\n3\n");
        verify_components(&g, &r, IndexBase::One).unwrap();
        let mut wrong = r.clone();
        wrong.components = vec![vec![1, 2, 3]];
        assert!(matches!(
            verify_components(&g, &wrong, IndexBase::One),
            Err(Error::Verification(_))
        ));
        let o = order_report(&g, IndexBase::Zero).unwrap();
        assert!(render_order(&o, OutputFormat::Text).starts_with("bandwidth_before 1\n"));
    }
}
