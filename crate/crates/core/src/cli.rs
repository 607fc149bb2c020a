//! `topolab` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 input/output or parse error.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::generators::{
    generate_fba, generate_ig, FbaParams, IgParams, RngSeed, PAPER_NODE_COUNT,
};
use crate::graph::Graph;
use crate::io::{parse_edge_list, write_curve_csv, write_edge_list, IngestReport};
use crate::metrics::{
    degree_ccdf, fit_power_law_exponent, log_grid, rich_club_curve, triangle_coefficients,
    triangle_summary, DEFAULT_KMIN,
};
use crate::robustness::{attack_curve, AttackStrategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "topolab",
    version,
    about = "Internet-like topology generation and analysis"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Fba,
    Ig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Static,
    Adaptive,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow a synthetic topology and write it as an edge list.
    Generate {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long, default_value_t = PAPER_NODE_COUNT)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Links per new node (fba).
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// One-host branch probability (ig).
        #[arg(long, default_value_t = 0.4)]
        p: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Measure an edge list: summary table, rich-club, triangle and degree curves.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        outdir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_KMIN)]
        kmin: usize,
        /// Points on the log-spaced rank grid.
        #[arg(long, default_value_t = 64)]
        r_points: usize,
    },
    /// Remove nodes and record the giant-component fraction.
    Attack {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Static)]
        strategy: StrategyArg,
        /// Shuffle seed for the random strategy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Points on the log-spaced removal grid.
        #[arg(long, default_value_t = 32)]
        f_points: usize,
        /// Largest removal fraction on the grid.
        #[arg(long, default_value_t = 0.1)]
        f_max: f64,
    },
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&config) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("topolab: {e}");
            match e {
                Error::InvalidParameter(_) => EXIT_USAGE,
                _ => EXIT_INPUT,
            }
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<()> {
    match &config.command {
        Command::Generate {
            model,
            n,
            seed,
            m,
            p,
            out,
        } => {
            let graph = match model {
                Model::Fba => {
                    let params = FbaParams {
                        m: *m,
                        ..FbaParams::with_defaults(*n)
                    };
                    generate_fba(&params, RngSeed(*seed))?
                }
                Model::Ig => {
                    let params = IgParams {
                        p_one_host: *p,
                        ..IgParams::with_defaults(*n)
                    };
                    generate_ig(&params, RngSeed(*seed))?
                }
            };
            write_edge_list(&graph, None, create(out)?)
        }
        Command::Analyze {
            input,
            outdir,
            kmin,
            r_points,
        } => {
            let (graph, report) = load(input)?;
            fs::create_dir_all(outdir)?;
            analyze(&graph, &report, *kmin, *r_points, outdir)
        }
        Command::Attack {
            input,
            strategy,
            seed,
            out,
            f_points,
            f_max,
        } => {
            let (graph, _) = load(input)?;
            let strategy = match strategy {
                StrategyArg::Static => AttackStrategy::TargetedStatic,
                StrategyArg::Adaptive => AttackStrategy::TargetedAdaptive,
                StrategyArg::Random => AttackStrategy::Random(RngSeed(*seed)),
            };
            let n = graph.node_count() as f64;
            if !(*f_max > 1.0 / n && *f_max < 1.0) {
                return Err(Error::param(format!("--f-max {f_max} must be in (1/N, 1)")));
            }
            let grid = log_grid(1.0 / n, *f_max, *f_points);
            let curve = attack_curve(&graph, strategy, &grid)?;
            write_curve_csv(&curve.points, ("f", "s"), create(out)?)
        }
    }
}

fn load(path: &Path) -> Result<(Graph, IngestReport)> {
    let file = File::open(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    parse_edge_list(BufReader::new(file))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    Ok(BufWriter::new(file))
}

/// Table-1 style summary, one `name: value` per line, in row order:
/// nodes, links, exponent, max degree, max K_t, average K_t.
pub fn summary_text(graph: &Graph, kmin: usize) -> String {
    let gamma = fit_power_law_exponent(&degree_ccdf(graph), kmin).ok();
    format_summary(
        graph,
        gamma,
        triangle_summary(&triangle_coefficients(graph)),
    )
}

fn format_summary(graph: &Graph, gamma: Option<f64>, (max_kt, mean_kt): (u64, f64)) -> String {
    let gamma = gamma.map_or_else(|| "n/a".to_owned(), |g| g.to_string());
    format!(
        "nodes: {}\nlinks: {}\npower_law_exponent: {gamma}\nmax_degree: {}\n\
         max_triangle_coefficient: {max_kt}\naverage_triangle_coefficient: {mean_kt}\n",
        graph.node_count(),
        graph.edge_count(),
        graph.max_degree(),
    )
}

fn analyze(
    graph: &Graph,
    report: &IngestReport,
    kmin: usize,
    r_points: usize,
    outdir: &Path,
) -> Result<()> {
    let n = graph.node_count();
    let ccdf = degree_ccdf(graph);
    let gamma = fit_power_law_exponent(&ccdf, kmin).ok();
    let triangles = triangle_coefficients(graph);

    let mut summary = create(&outdir.join("summary.txt"))?;
    summary.write_all(format_summary(graph, gamma, triangle_summary(&triangles)).as_bytes())?;
    summary.flush()?;

    if n >= 2 {
        let grid = log_grid(2.0 / n as f64, 1.0, r_points);
        let rc = rich_club_curve(graph, &grid)?;
        write_curve_csv(
            &rc.points,
            ("r", "phi"),
            create(&outdir.join("richclub.csv"))?,
        )?;
    }
    write_curve_csv(
        &triangles.ccdf_curve(),
        ("kt", "p"),
        create(&outdir.join("triangles_ccdf.csv"))?,
    )?;
    write_curve_csv(
        &ccdf.as_curve(),
        ("k", "p"),
        create(&outdir.join("degree_ccdf.csv"))?,
    )?;

    let mut labels = create(&outdir.join("labels.csv"))?;
    writeln!(labels, "id,label")?;
    for (id, label) in report.label_map.iter().enumerate() {
        writeln!(labels, "{id},{label}")?;
    }
    labels.flush()?;

    eprintln!(
        "ingested {} nodes, {} edges ({} duplicates, {} self-loops dropped)",
        report.nodes_kept, report.edges_kept, report.duplicates_dropped, report.self_loops_dropped
    );
    Ok(())
}
