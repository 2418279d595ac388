use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mobb::cli::{
    cmd_bench, cmd_generate, cmd_solve, cmd_verify, load_instance, parse_size_list,
    parse_version_list, size_grid, BenchArgs, InstanceSpec, OutputFormat, SolveArgs, VerifyArgs,
};
use mobb::search::{Arithmetic, Budget};

#[derive(Parser)]
#[command(name = "mobb", version, about = "Bi-objective 0-1 branch and bound")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write random instances and a manifest.
    Generate {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "instances")]
        out: PathBuf,
    },
    /// Solve one instance file and print its frontier.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "BB")]
        version: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Compare against exhaustive enumeration.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Benchmark versions over generated instances; one CSV per size.
    Bench {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, default_value = "all")]
        versions: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write SVG charts of nodes and time per size (needs --out).
        #[arg(long, requires = "out")]
        plot: bool,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Check every version against the oracle on a file or directory.
    Verify {
        path: PathBuf,
        #[arg(long, default_value = "all")]
        versions: String,
        #[arg(long, hide = true)]
        corrupt_frontier: bool,
        #[command(flatten)]
        run: RunFlags,
    },
}

#[derive(Args)]
struct Sizes {
    /// knapsack, assignment or facility.
    #[arg(long)]
    class: String,
    /// Knapsack items; comma list for a grid.
    #[arg(long)]
    n: Option<String>,
    /// Knapsack rows.
    #[arg(long)]
    m: Option<String>,
    /// Assignment size or facility customers.
    #[arg(long)]
    l: Option<String>,
    /// Facilities.
    #[arg(long)]
    q: Option<String>,
}

impl Sizes {
    fn grid(&self) -> mobb::Result<Vec<InstanceSpec>> {
        let list = |s: &Option<String>| s.as_deref().map_or(Ok(vec![]), parse_size_list);
        size_grid(
            &self.class,
            &list(&self.n)?,
            &list(&self.m)?,
            &list(&self.l)?,
            &list(&self.q)?,
        )
    }
}

#[derive(Args)]
struct RunFlags {
    /// Exact rational arithmetic (default).
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Floating point arithmetic with 1e-9 tolerances.
    #[arg(long)]
    float: bool,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl RunFlags {
    fn arithmetic(&self) -> Arithmetic {
        if self.float {
            Arithmetic::Float
        } else {
            Arithmetic::Exact
        }
    }

    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_seconds: self.budget_seconds,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    JsonLines,
}

fn run(cli: Cli) -> mobb::Result<bool> {
    match cli.command {
        Command::Generate {
            sizes,
            count,
            seed,
            out,
        } => {
            for spec in sizes.grid()? {
                let paths = cmd_generate(&spec, count, seed, &out)?;
                println!(
                    "{spec}: wrote {} instances to {}",
                    paths.len() - 1,
                    out.display()
                );
            }
            Ok(true)
        }
        Command::Solve {
            file,
            version,
            format,
            verify,
            run,
        } => {
            let inst = load_instance(&file)?;
            let args = SolveArgs {
                version,
                arithmetic: run.arithmetic(),
                budget: run.budget(),
                format: match format {
                    Format::Text => OutputFormat::Text,
                    Format::Csv => OutputFormat::Csv,
                    Format::JsonLines => OutputFormat::JsonLines,
                },
                verify,
            };
            let report = cmd_solve(&inst, &args)?;
            print!("{}", report.text);
            Ok(report.ok())
        }
        Command::Bench {
            sizes,
            versions,
            count,
            seed,
            out,
            jobs,
            plot,
            run,
        } => {
            let args = BenchArgs {
                sizes: sizes.grid()?,
                versions: parse_version_list(&versions)?,
                count,
                seed,
                budget: run.budget(),
                jobs,
                arithmetic: run.arithmetic(),
                out,
                plot,
            };
            for t in cmd_bench(&args)? {
                println!("# {}", t.spec);
                print!("{}", t.to_csv());
            }
            Ok(true)
        }
        Command::Verify {
            path,
            versions,
            corrupt_frontier,
            run,
        } => {
            let args = VerifyArgs {
                versions: parse_version_list(&versions)?,
                arithmetic: run.arithmetic(),
                corrupt_frontier,
            };
            let report = cmd_verify(&path, &args)?;
            print!("{}", report.render(args.versions.len()));
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
