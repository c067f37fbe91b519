mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphcover::{Mode, TemplateClass};

/// Exact covering numbers of graphs, with certificates.
#[derive(Parser, Debug)]
#[command(name = "graphcover", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    /// Stop after this many search nodes.
    #[arg(long, value_parser = positive_u64)]
    pub nodes: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long, value_parser = positive_f64)]
    pub seconds: Option<f64>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Target {
    /// Template class, e.g. `star_forest`.
    #[arg(long, value_parser = parse_class)]
    pub class: TemplateClass,
    /// `global`, `local` or `folded`.
    #[arg(long, value_parser = parse_mode)]
    pub mode: Mode,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a named family, gadget or random graph.
    Gen {
        /// path, cycle, complete, complete_bipartite, star, petersen, spider,
        /// t_deg, i_tw, t_stw, fca, fca_core, gnp or ktree.
        family: String,
        /// Family parameters; `gnp` takes `n p`, `ktree` takes `k n`.
        params: Vec<String>,
        /// Graph file; the graph goes to stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Construction sequence file, for gadgets that carry one and `ktree`.
        #[arg(long)]
        sequence: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge keep probability for `ktree`.
        #[arg(long, default_value_t = 0.75)]
        keep: f64,
    },
    /// Test membership in a template class.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_parser = parse_class)]
        class: TemplateClass,
    },
    /// Compute a covering number and write its certificate.
    Solve {
        graph: PathBuf,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a cover certificate against a graph.
    Verify {
        graph: PathBuf,
        cert: PathBuf,
        #[command(flatten)]
        target: Target,
    },
    /// Orient the edges with bounded out-degree.
    Orient {
        graph: PathBuf,
        /// Uniform out-degree bound; the pseudoarboricity when omitted.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Arboricity, pseudoarboricity and degeneracy with density witnesses.
    Arbor { graph: PathBuf },
    /// Local star arboricity with a star-forest certificate.
    Lsa {
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Folded linear-forest cover from Euler tours.
    Flac {
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Local interval cover from a simple construction sequence.
    Slug {
        graph: PathBuf,
        sequence: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Turn a construction sequence into a simple one of width at most k+1.
    Lift {
        sequence: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Clique cover of the line graph of a graph.
    Krausz {
        graph: PathBuf,
        /// File for the line graph.
        #[arg(long)]
        line_graph: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Star forests from a segment contact representation.
    Contacts {
        graph: PathBuf,
        representation: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Packing number with a certificate.
    Pack {
        graph: PathBuf,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Pass/fail table of the desk-scale checks.
    Report {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

fn parse_class(s: &str) -> Result<TemplateClass, String> {
    s.parse().map_err(|e: graphcover::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|_| format!("unknown mode `{s}`; expected global, local or folded"))
}

fn positive_u64(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            // a closed pipe downstream is not an error worth reporting
            let _ = write!(std::io::stdout().lock(), "{out}");
            ExitCode::from(out.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
