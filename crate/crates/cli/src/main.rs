//! `epwforge`: build the two Lagrangians, extract their EPW sextics and certify them.

mod pipeline;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use epwforge::groebner::DEFAULT_DEGREE_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "epwforge", version, about = "A7-invariant EPW sextics over finite fields")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Prime with Phi_21 split completely mod p.
    #[arg(long, global = true, default_value_t = 127)]
    pub prime: u32,
    /// Image of zeta_21 in F_p.
    #[arg(long, global = true, default_value_t = 25)]
    pub root: u32,
    #[arg(long, global = true, env = "EPWFORGE_CACHE", default_value = ".epwforge-cache")]
    pub cache_dir: PathBuf,
    /// Ceiling on the sugar degree of any Gröbner computation.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BUDGET)]
    pub degree_budget: u32,
    /// Concurrent chart jobs.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the group, project onto the two ten-dimensional isotypic pieces, write A1.json and A2.json.
    BuildLagrangians {
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// JSON list of two 6x6 cyclotomic matrix files replacing the built-in generators.
        #[arg(long)]
        generators: Option<PathBuf>,
        /// Also write the coordinate Lagrangian F_e1 as F_e1.json (negative control).
        #[arg(long)]
        control: bool,
    },
    /// Sextic equation of a Lagrangian on one chart.
    Sextic {
        lagrangian: PathBuf,
        #[arg(long, default_value_t = 1)]
        chart: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emptiness of Y[3] chart by chart.
    Y3 {
        lagrangian: PathBuf,
        /// Charts to test (default: all six).
        #[arg(long)]
        chart: Vec<usize>,
    },
    /// Run every certificate and write a report.
    Certify {
        lagrangian: PathBuf,
        /// The two charts used for the sextic cross-check.
        #[arg(long, num_args = 2, default_values_t = [1, 2])]
        chart: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_y3: bool,
        #[arg(long)]
        no_probe: bool,
        /// Record wall-clock timings (reports are then no longer byte-reproducible).
        #[arg(long)]
        timings: bool,
        /// Checkpoint the singular-locus computation every N pair reductions.
        #[arg(long)]
        checkpoint_every: Option<usize>,
        /// Continue the singular-locus computation from this checkpoint.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Merge reports and flag disagreements.
    Report {
        #[arg(required = true)]
        reports: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.global.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let g = &cli.global;
    let result = match cli.command {
        Command::BuildLagrangians { out, generators, control } => {
            pipeline::build_lagrangians(g, &out, generators.as_deref(), control)
        }
        Command::Sextic { lagrangian, chart, out } => pipeline::sextic(g, &lagrangian, chart, out.as_deref()),
        Command::Y3 { lagrangian, chart } => pipeline::y3(g, &lagrangian, &chart),
        Command::Certify { lagrangian, chart, out, no_y3, no_probe, timings, checkpoint_every, resume } => {
            pipeline::certify(
                g,
                &lagrangian,
                pipeline::CertifyArgs {
                    charts: (chart[0], chart[1]),
                    out,
                    y3: !no_y3,
                    probe: !no_probe,
                    timings,
                    checkpoint_every,
                    resume,
                },
            )
        }
        Command::Report { reports, json } => pipeline::report(&reports, json),
    };
    match result {
        Ok(pipeline::Outcome::Success) => ExitCode::SUCCESS,
        Ok(pipeline::Outcome::NotCertified) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
