use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use htw_cli::{run, ClassSpec, CliError, Command, Format, RunConfig, EXIT_ERROR};

#[derive(Parser)]
#[command(name = "htw", version, about = "Approximate tree H-decompositions")]
#[command(after_help = "Exit codes: 0 success / valid / covered, 2 negative answer, 1 error.\n\
                        HTW_SEED is reserved and currently ignored; every algorithm is deterministic.")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ClassArgs {
    /// Built-in class: bipartite, edgeless, triangle-free or cluster.
    #[arg(long)]
    class: Option<String>,
    /// Graph files of forbidden induced subgraphs (connected, at most 6 vertices).
    #[arg(long, num_args = 1..)]
    family: Option<Vec<PathBuf>>,
}

impl ClassArgs {
    fn spec(self) -> ClassSpec {
        match (self.class, self.family) {
            (Some(name), _) => ClassSpec::Preset(name),
            (None, Some(files)) => ClassSpec::Family(files),
            (None, None) => unreachable!("clap requires one of --class / --family"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Sub {
    /// Decompose with width at most 5k+5, or certify that the H-treewidth exceeds k.
    Decompose {
        graph: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        k: usize,
        /// Include one record per subroutine invocation.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Also report the exact H-treewidth (at most 8 vertices).
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a decomposition JSON (bare, or a decompose report) against a graph.
    Validate {
        graph: PathBuf,
        decomposition: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Find an (H, 2k)-separation weakly covering Z, or show none of order k exists.
    WeakCoverage {
        graph: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        k: usize,
        /// Vertices of Z, comma or space separated.
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        z: Vec<usize>,
        /// Also run the exhaustive check (at most 7 vertices).
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact treewidth, H-treewidth and minimum deletion for tiny graphs.
    Exact {
        graph: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn config(cli: Cli) -> RunConfig {
    let base = |command, input, class: ClassArgs, output| RunConfig {
        command,
        input,
        class: class.spec(),
        output,
        trace: false,
        exact: false,
        format: Format::Json,
    };
    match cli.command {
        Sub::Decompose { graph, class, k, trace, format, exact, output } => RunConfig {
            trace,
            exact,
            format: match format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            },
            ..base(Command::Decompose { k }, graph, class, output)
        },
        Sub::Validate { graph, decomposition, class, output } => {
            base(Command::Validate { decomposition }, graph, class, output)
        }
        Sub::WeakCoverage { graph, class, k, z, exact, output } => {
            RunConfig { exact, ..base(Command::WeakCoverage { k, z }, graph, class, output) }
        }
        Sub::Exact { graph, class, output } => base(Command::Exact, graph, class, output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    let cfg = config(cli);
    let outcome = run(&cfg).and_then(|outcome| {
        match &cfg.output {
            Some(path) => std::fs::write(path, &outcome.document)
                .map_err(|source| CliError::Io { path: path.clone(), source })?,
            None => print!("{}", outcome.document),
        }
        Ok(outcome.exit_code)
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("htw: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
