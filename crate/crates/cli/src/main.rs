//! `xyz-spectra`: build xyz-transformations of regular graphs, predict their
//! Laplacian spectra and spanning-tree counts, and check the predictions.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error (such as a
//! non-regular input), 3 I/O or parse error.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use format::Format;
use xyz_spectra::verify::DEFAULT_TOL;

#[derive(Debug, Parser)]
#[command(
    name = "xyz-spectra",
    version,
    about = "Laplacian spectra of xyz-transformations of regular graphs"
)]
struct Cli {
    /// Print diagnostic notes to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct GraphInput {
    /// Generator spec such as `cycle:6`, `petersen` or `circulant:8:1,2`.
    #[arg(long = "gen", value_name = "SPEC")]
    pub generator: Option<String>,
    /// Edge-list file.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Write the payload here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build G^xyz.
    Transform {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[command(flatten)]
        common: Common,
    },
    /// Predicted spectrum of G^xyz, or the spectrum of G without --code.
    Spectrum {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        code: Option<String>,
        /// Also compute the spectrum of the built graph and compare.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Spanning-tree count of G^xyz from the closed form and the Matrix-Tree theorem.
    Trees {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[command(flatten)]
        common: Common,
    },
    /// One row per code: predicted spectrum, tree count, verification status.
    Table {
        #[command(flatten)]
        graph: GraphInput,
        /// Comma-separated codes; all 64 by default.
        #[arg(long, allow_hyphen_values = true)]
        codes: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Corpus verification, or an operation series with --series.
    Verify {
        /// Generator specs to verify instead of the standard corpus.
        #[arg(long, num_args = 1.., value_name = "SPEC")]
        graphs: Vec<String>,
        /// Comma-separated operations (`c`, `l`, `+++`, `---`) applied to --gen/--in.
        #[arg(long, allow_hyphen_values = true)]
        series: Option<String>,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
        /// JSON-lines detail file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The 64 closed forms as JSON records.
    Catalog {
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = commands::Context {
        verbose: cli.verbose,
    };
    let result = match cli.command {
        Command::Transform {
            graph,
            code,
            common,
        } => commands::transform(&ctx, &graph, &code, &common),
        Command::Spectrum {
            graph,
            code,
            check,
            tol,
            common,
        } => commands::spectrum(&ctx, &graph, code.as_deref(), check, tol, &common),
        Command::Trees {
            graph,
            code,
            common,
        } => commands::trees(&ctx, &graph, &code, &common),
        Command::Table {
            graph,
            codes,
            tol,
            common,
        } => commands::table(&ctx, &graph, codes.as_deref(), tol, &common),
        Command::Verify {
            graphs,
            series,
            graph,
            tol,
            sequential,
            out,
        } => commands::verify(
            &ctx,
            &graphs,
            series.as_deref(),
            &graph,
            tol,
            sequential,
            out.as_deref(),
        ),
        Command::Catalog { out } => commands::catalog(out.as_deref()),
    };
    match result {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
