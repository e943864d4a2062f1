use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, CommandFactory, FromArgMatches, Parser, Subcommand};

use thornlab::audit::{self, GridConfig, ReportFormat};
use thornlab::base::BaseSpec;
use thornlab::formulas::{self, FormulaId, Point};
use thornlab::graph::{read_edge_list, write_dot, write_edge_list};
use thornlab::indices::{self, IndexKind};
use thornlab::thorn::{self, ThornCounts, ThornSpec, ThornType};
use thornlab::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "thornlab",
    about = "Hyper Zagreb index of generalized thorn graphs"
)]
struct Cli {
    /// Print labels next to values.
    #[arg(long, global = true)]
    human: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct ThornArgs {
    /// Base graph: path:n, cycle:n, complete:n, bipartite:r:s, star:n,
    /// random:n:seed or file:<path>.
    #[arg(long)]
    base: BaseSpec,

    /// Thorn counts: uniform:<k>, a comma-separated vector, or random:<max>:<seed>.
    #[arg(long, default_value = "uniform:1")]
    t: ThornCounts,

    #[arg(long, default_value_t = 2)]
    r: usize,

    #[arg(long, default_value_t = 0)]
    s: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a thorn graph and print it.
    Construct {
        #[command(flatten)]
        thorn: ThornArgs,

        /// Construction type, I through VII.
        #[arg(long = "type")]
        kind: ThornType,

        #[arg(long, default_value = "edgelist", value_parser = ["edgelist", "dot"])]
        format: String,
    },
    /// Compute an index of an edge-list file.
    Index {
        graph: PathBuf,

        /// m1, m2, hm, f, em1, em2, or all.
        #[arg(long, default_value = "hm")]
        index: String,
    },
    /// Evaluate one closed form; the thorn type follows from the formula.
    Formula {
        #[arg(long)]
        id: FormulaId,

        #[command(flatten)]
        thorn: ThornArgs,

        /// Also print the brute-force value and the difference.
        #[arg(long)]
        with_oracle: bool,
    },
    /// Sweep a parameter grid and compare every closed form with the oracle.
    #[command(group(ArgGroup::new("grid").required(true).args(["config", "default_grid"])))]
    Audit {
        #[arg(long)]
        config: Option<PathBuf>,

        #[arg(long)]
        default_grid: bool,

        /// Restrict to these formula ids (comma-separated).
        #[arg(long, value_delimiter = ',')]
        formulas: Vec<FormulaId>,

        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,

        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// List the formula registry.
    List,
}

fn main() -> ExitCode {
    let matches = Cli::command()
        .version(thornlab::version_string())
        .get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn print_value(human: bool, label: &str, value: impl std::fmt::Display) {
    if human {
        println!("{label}: {value}");
    } else {
        println!("{value}");
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Construct {
            thorn,
            kind,
            format,
        } => {
            let base = thorn.base.build()?;
            let spec = ThornSpec::new(kind, thorn.r, thorn.s, thorn.t.resolve(base.n())?);
            let built = thorn::build(&base, &spec)?;
            let text = match format.as_str() {
                "dot" => write_dot(&built.graph),
                _ => write_edge_list(&built.graph),
            };
            println!("{text}");
            Ok(0)
        }
        Command::Index { graph, index } => {
            let text = std::fs::read_to_string(&graph)
                .map_err(|e| Error::Io(format!("{}: {e}", graph.display())))?;
            let g = read_edge_list(&text)?;
            let kinds = if index == "all" {
                IndexKind::ALL.to_vec()
            } else {
                vec![index.parse()?]
            };
            let human = cli.human || kinds.len() > 1;
            for kind in kinds {
                print_value(human, kind.as_str(), indices::compute(&g, kind)?);
            }
            Ok(0)
        }
        Command::Formula {
            id,
            thorn,
            with_oracle,
        } => {
            let graph = thorn.base.build()?;
            let spec = ThornSpec::new(
                id.thorn_type(),
                thorn.r,
                thorn.s,
                thorn.t.resolve(graph.n())?,
            );
            let point = Point {
                base: &thorn.base,
                graph: &graph,
                spec: &spec,
            };
            let closed = formulas::evaluate(id, &point)?;
            print_value(cli.human, "closed", closed);
            if with_oracle {
                let record = audit::compare(id, &thorn.base, &graph, &spec)?;
                let oracle = record.oracle.ok_or(Error::Overflow)?;
                print_value(cli.human, "oracle", oracle);
                print_value(cli.human, "delta", closed - oracle);
            }
            Ok(0)
        }
        Command::Audit {
            config,
            default_grid,
            formulas,
            report,
            format,
        } => {
            let mut grid = match config {
                Some(path) if !default_grid => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                    GridConfig::from_json(&text)?
                }
                _ => GridConfig::default_grid(),
            };
            if !formulas.is_empty() {
                grid.formulas = formulas;
            }
            let result = audit::run_with_workers(&grid, workers()?)?;
            let text = audit::render(&result, format)?;
            match report {
                Some(path) => std::fs::write(&path, text)?,
                None => print!("{text}"),
            }
            for s in &result.summary {
                let verdict = match (&s.first_counterexample, s.tested) {
                    (_, 0) => "untested".to_string(),
                    (None, _) => "all MATCH".to_string(),
                    (Some(c), _) => format!(
                        "MISMATCH, first at {} type {} r={} s={} t=[{}]: {} vs {}",
                        c.point.base,
                        c.point.thorn_type,
                        c.point.r,
                        c.point.s,
                        c.point
                            .t
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(","),
                        c.closed,
                        c.oracle
                    ),
                };
                eprintln!(
                    "{:<8} tested {:>6}  matched {:>6}  mismatched {:>6}  {}",
                    s.formula.as_str(),
                    s.tested,
                    s.matched,
                    s.mismatched,
                    verdict
                );
            }
            Ok(if result.mismatches() == 0 {
                0
            } else {
                EXIT_MISMATCH
            })
        }
        Command::List => {
            for meta in formulas::list_formulas() {
                println!(
                    "{}\t{}\ttype {}\t{}",
                    meta.id,
                    meta.kind.as_str(),
                    meta.thorn_type,
                    meta.anchor
                );
            }
            Ok(0)
        }
    }
}

/// `THORNLAB_WORKERS`, or the available parallelism when unset.
fn workers() -> Result<usize, Error> {
    match std::env::var("THORNLAB_WORKERS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k),
            _ => Err(Error::Config(format!(
                "THORNLAB_WORKERS must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}
