use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use locinv::fibres::FibrePoint;
use locinv::poly::OrderingKind;
use locinv::FieldDescriptor;

#[derive(Debug, Parser)]
#[command(name = "locinv", version, about = "Local invariants of power series germs and of their families")]
pub struct Cli {
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    pub vars: Option<String>,
    /// Q, F:<p>, Qt or Ft:<p>. Defaults to Q.
    #[arg(long, value_parser = parse_field)]
    pub field: Option<FieldDescriptor>,
    /// Local ordering, ds or ls. Defaults to ds.
    #[arg(long, value_parser = parse_ordering)]
    pub ordering: Option<OrderingKind>,
}

#[derive(Debug, Args)]
pub struct PolyInput {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Generators, one per argument.
    pub exprs: Vec<String>,
    /// Read generators (and optional `vars:`, `field:`, `ordering:` headers)
    /// from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor number of a hypersurface.
    Milnor(PolyInput),
    /// Tjurina number, or the Tjurina module dimension for several generators.
    Tjurina(PolyInput),
    /// Every invariant of one germ.
    Report(PolyInput),
    /// Contact determinacy bound.
    Determinacy(PolyInput),
    /// Whether the generators form a complete intersection.
    CiCheck(PolyInput),
    /// Generators of the singular locus ideal.
    SingLocus(PolyInput),
    /// Standard basis of the ideal.
    StdBasis(PolyInput),
    /// Vector-space and Krull dimension of the local quotient.
    Dim(PolyInput),
    /// Completed fibre dimension of a family at one point.
    FibreDim {
        #[arg(long)]
        family: PathBuf,
        /// `p=<prime>`, `t=<value>` or `generic`.
        #[arg(long, value_parser = parse_point)]
        point: FibrePoint,
    },
    /// Fibre dimensions of a family over the integers at several primes.
    ModularScan {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        family: Option<PathBuf>,
        /// Comma-separated primes. Defaults to the first ten primes not
        /// dividing an outer coefficient.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
    /// Compares the fibre dimension at a special point with nearby points.
    SemicontCheck {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, value_parser = parse_point)]
        special: FibrePoint,
        /// Comma-separated points. Defaults to the generic point and a few
        /// closed points.
        #[arg(long, value_delimiter = ',', value_parser = parse_point)]
        nearby: Option<Vec<FibrePoint>>,
    },
}

fn parse_field(s: &str) -> Result<FieldDescriptor, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_ordering(s: &str) -> Result<OrderingKind, String> {
    s.parse()
}

fn parse_point(s: &str) -> Result<FibrePoint, String> {
    s.parse().map_err(|e| format!("{e}"))
}
