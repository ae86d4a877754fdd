use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

/// Enumerate, count, and verify Grassmannian permutations and the path
/// families in bijection with them.
#[derive(Parser)]
#[command(name = "grassperm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of a family, one per line, in lexicographic order.
    Enum(EnumArgs),
    /// Tabulate closed-form counts over a range of sizes.
    Count(CountArgs),
    /// Sweep a counting or bijection claim against a brute-force oracle.
    Verify(VerifyArgs),
    /// Reproduce one of the enumeration tables as CSV or JSON.
    Table(TableArgs),
    /// Apply a single bijection or conversion to one object.
    Map(MapArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum EnumFamily {
    Grassmannian,
    Bigrassmannian,
    Involutions,
    Avoiders,
    /// Grassmannian Dyck paths (at most one long ascent)
    Dyck,
    /// All Dyck paths
    DyckAll,
    /// Schröder words avoiding UUDD
    Schroder,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ListFormat {
    Lines,
    Json,
}

#[derive(Args)]
pub struct EnumArgs {
    pub family: EnumFamily,
    #[arg(long)]
    pub n: usize,
    /// Pattern to avoid (avoiders only), e.g. 2413 or 3,1,2
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long, value_enum, default_value = "lines")]
    pub format: ListFormat,
    /// Largest size accepted for enumeration
    #[arg(long, default_value_t = 25)]
    pub cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CountFamily {
    Grassmannian,
    Bigrassmannian,
    UnionInverse,
    Involutions,
    Avoiders,
    /// G_n(12⋯k), needs --k
    Increasing,
    /// Grassmannian permutations with their descent at k, needs --k
    DescentAt,
    Odd,
    Even,
    /// Schröder words avoiding UUDD
    Schroder,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CountFormat {
    Csv,
    Json,
    /// OEIS b-file: "n value" per line
    Bfile,
}

#[derive(Args)]
pub struct CountArgs {
    pub family: CountFamily,
    /// Size or inclusive range, e.g. 7 or 1..10
    #[arg(long)]
    pub n: String,
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Add a brute-force column for sizes within the oracle cap
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: CountFormat,
    /// Oracle size cap (default 20, or 12 for union-inverse and schroder)
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// weiner, theorem34, prop21, prop22, prop23, prop31, prop41, prop42,
    /// prop43, prop46, thm51, or prop53
    pub target: String,
    /// Smallest k (prop31, prop42, prop43; default 3)
    #[arg(long)]
    pub kmin: Option<usize>,
    /// Largest k (weiner and prop31 default 10; prop42 and prop43 default 5)
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Largest pattern size (theorem34, default 5)
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Largest size n (default 10; 9 for prop41-prop46; 14 for thm51)
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum WhichTable {
    Table1,
    Table2,
}

#[derive(Args)]
pub struct TableArgs {
    pub which: WhichTable,
    /// Last row of table1 (default 10)
    #[arg(long, default_value_t = 10)]
    pub kmax: usize,
    /// Last pattern size of table2 (default 10)
    #[arg(long, default_value_t = 10)]
    pub max_size: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Direction {
    /// Dyck path to permutation
    Phi,
    /// 321-avoiding permutation to Dyck path
    PhiInverse,
    /// Schröder word to Lehmer code
    Alpha,
    /// Lehmer code to Schröder word
    AlphaInverse,
    /// Schröder word to its prefix-value bits
    Bin,
    /// Permutation to Lehmer code
    Lehmer,
    /// Lehmer code to permutation
    LehmerDecode,
    /// Odd Grassmannian permutation of size 2m to size 2m+1
    Xi,
    /// Odd Grassmannian permutation of size 2m+1 to size 2m+2
    Psi,
    Inverse,
    /// Reverse complement
    Rc,
}

#[derive(Args)]
pub struct MapArgs {
    pub direction: Direction,
    pub input: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Enum(a) => commands::enumerate(a, &mut out),
        Command::Count(a) => commands::count(a, &mut out),
        Command::Verify(a) => commands::verify(a, &mut out),
        Command::Table(a) => commands::table(a, &mut out),
        Command::Map(a) => commands::map(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
