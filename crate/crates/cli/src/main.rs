use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nsg_cli::budget::{resolve, BudgetFlags, TimeLimit};
use nsg_cli::commands::{self, ListFormat, TableFormat};
use nsg_cli::error::CliError;
use nsg_cli::verify;
use nsg_core::enumerate::ClassBy;
use nsg_core::SearchContext;

/// Count, list, transform and verify numerical semigroups: sequence tables
/// by Frobenius number and by maximum primitive, divisor-sum identities,
/// growth bounds, and Wilf-inequality scans.
#[derive(Parser)]
#[command(name = "nsg", version, about, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    /// Worker threads for parallel enumeration (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest class index a search may target
    #[arg(long, global = true, env = "NSG_MAX_N")]
    max_n: Option<u32>,
    /// Abort after visiting this many search nodes
    #[arg(long, global = true)]
    node_cap: Option<u64>,
    /// Wall-clock cap in seconds; 0 disables the cap
    #[arg(long, global = true, env = "NSG_TIME_CAP_SECS")]
    time_cap_secs: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Frobenius,
    Maxprim,
    Genus,
}

impl From<ClassArg> for ClassBy {
    fn from(c: ClassArg) -> ClassBy {
        match c {
            ClassArg::Frobenius => ClassBy::Frobenius,
            ClassArg::Maxprim => ClassBy::MaxPrimitive,
            ClassArg::Genus => ClassBy::Genus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormatArg {
    Gens,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact size of one class (by Frobenius number, maximum primitive, or genus)
    Count {
        #[arg(long, value_enum)]
        by: ClassArg,
        #[arg(long)]
        n: u32,
    },
    /// List one class in canonical order
    List {
        #[arg(long, value_enum)]
        by: ClassArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ListFormatArg::Gens)]
        format: ListFormatArg,
        /// Refuse to list classes larger than this
        #[arg(long, default_value_t = 100_000)]
        list_cap: u64,
    },
    /// Check a structural identity exhaustively up to a bound
    Verify {
        #[command(subcommand)]
        identity: VerifyCommand,
    },
    /// Emit the (n, A_n, N_n) table, optionally through a persistent cache
    Table {
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value_t = TableFormatArg::Csv)]
        format: TableFormatArg,
        /// Cache file: reused when intact, rebuilt when stale or damaged
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Exit with status 4 on cache corruption instead of re-enumerating
        #[arg(long)]
        strict_cache: bool,
    },
    /// Wilf-inequality scans and per-class statistics
    Wilf {
        #[command(subcommand)]
        command: WilfCommand,
    },
    /// Build verified witness semigroups
    Construct {
        #[command(subcommand)]
        command: ConstructCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// N_n equals the divisor sum of the A sequence (n = 1..max)
    MobiusForward {
        #[arg(long)]
        max: u32,
    },
    /// A_n equals the Möbius inversion of the N sequence (n = 1..max)
    MobiusInverse {
        #[arg(long)]
        max: u32,
    },
    /// Extended-left-gcd classes partition each Frobenius class with sizes A_{f/d}
    Partition {
        #[arg(long)]
        max: u32,
    },
    /// Injectivity, image, round trip and depth correspondence of the max-primitive map
    Phi {
        #[arg(long)]
        max: u32,
    },
    /// Growth bounds, divisor bounds, gap bounds, monotonicity and ratio floors
    Bounds {
        #[arg(long)]
        max: u32,
    },
}

#[derive(Subcommand)]
enum WilfCommand {
    /// Search whole classes for a Wilf-inequality violation
    Scan {
        #[arg(long, value_enum)]
        by: ClassArg,
        #[arg(long)]
        max: u32,
    },
    /// Exact per-class statistics (probability, criterion fraction, multiplicity window)
    Stats {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        half_width: Option<u32>,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Interval-based witness family: B inside [m, m+⌊(m-2)/3⌋] with verified properties
    Family9 {
        #[arg(long)]
        m: u32,
        /// Explicit B as a comma-separated list (default: shortest viable prefix)
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<u32>>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    let budget = resolve(BudgetFlags {
        max_n: cli.budget.max_n,
        node_cap: cli.budget.node_cap,
        time_cap_secs: cli.budget.time_cap_secs,
    })?;
    let time_limit = TimeLimit::from_budget(&budget);
    let ctx = SearchContext::with_interrupt(budget, &time_limit);

    match cli.command {
        Command::Count { by, n } => commands::count(by.into(), n, &ctx),
        Command::List { by, n, format, list_cap } => {
            let format = match format {
                ListFormatArg::Gens => ListFormat::Gens,
                ListFormatArg::Json => ListFormat::Json,
                ListFormatArg::Csv => ListFormat::Csv,
            };
            commands::list(by.into(), n, format, list_cap, &ctx)
        }
        Command::Verify { identity } => match identity {
            VerifyCommand::MobiusForward { max } => verify::mobius_forward(max, &ctx),
            VerifyCommand::MobiusInverse { max } => verify::mobius_inverse(max, &ctx),
            VerifyCommand::Partition { max } => verify::partition(max, &ctx),
            VerifyCommand::Phi { max } => verify::phi_properties(max, &ctx),
            VerifyCommand::Bounds { max } => verify::bounds(max, &ctx),
        },
        Command::Table { max, format, cache, strict_cache } => {
            let format = match format {
                TableFormatArg::Csv => TableFormat::Csv,
                TableFormatArg::Json => TableFormat::Json,
            };
            commands::emit_table(max, format, cache.as_deref(), strict_cache, &ctx)
        }
        Command::Wilf { command } => match command {
            WilfCommand::Scan { by, max } => commands::wilf_scan_cmd(by.into(), max, &ctx),
            WilfCommand::Stats { n, half_width } => commands::wilf_stats_cmd(n, half_width, &ctx),
        },
        Command::Construct { command } => match command {
            ConstructCommand::Family9 { m, b } => commands::construct_family9_cmd(m, b, &ctx),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
