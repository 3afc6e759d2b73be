//! `fdfw`: congruences, complement FDFWs and experiment suites for Büchi
//! automata from the command line.
//!
//! Exit status is 0 on success, 1 when a check reports a failure (a bound,
//! an equivalence, a saturation violation, or a containment that does not
//! hold) and 2 on usage or input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdfw_core::{FamilyVariant, Variant, DEFAULT_BUDGET, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "fdfw", version, about = "Congruence-based complementation of Büchi automata")]
pub struct Cli {
    /// Maximum number of classes any single congruence may explore.
    #[arg(long, global = true, env = "CONGRUENCE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class statistics of the congruences of an NBW as TSV.
    Classes {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = RelationArg::All)]
        relation: RelationArg,
        /// Write each congruence as a DFW plus a witness table into DIR.
        #[arg(long, value_name = "DIR")]
        dump: Option<PathBuf>,
    },
    /// Build the saturated complement FDFW of an NBW.
    Complement {
        #[arg(long, value_enum, default_value_t = VariantArg::Optimal)]
        variant: VariantArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Translate a saturated FDFW into an NBW.
    ToNbw {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide membership of u·v^ω in an NBW or FDFW file.
    Member {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Decide L(A) ⊆ L(B); exits with 1 and prints a counterexample when it
    /// does not hold.
    Contains { a: PathBuf, b: PathBuf },
    /// Write a member of the B_n or B'_n family.
    Family {
        #[arg(long, value_enum)]
        variant: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for disagreeing normalized decompositions on a word corpus.
    SaturationCheck {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_u: usize,
        #[arg(long, default_value_t = 3)]
        max_v: usize,
    },
    /// Class counts of every relation checked against the size bounds.
    BoundsSuite {
        #[command(flatten)]
        inputs: SuiteInputs,
        #[command(flatten)]
        output: SuiteOutput,
        /// Append elapsed milliseconds per phase.
        #[arg(long)]
        timings: bool,
    },
    /// Complement FDFW, complement NBW and lasso oracle compared on a corpus.
    EquivSuite {
        #[command(flatten)]
        inputs: SuiteInputs,
        #[command(flatten)]
        output: SuiteOutput,
        #[arg(long, default_value_t = 3)]
        max_u: usize,
        #[arg(long, default_value_t = 3)]
        max_v: usize,
    },
}

/// Automata a suite runs on. Without any of these, the suite uses `B_3`,
/// `B_4`, `B'_3`, `B'_4` and 20 random automata.
#[derive(Args, Debug)]
pub struct SuiteInputs {
    /// NBW files, native or HOA.
    pub files: Vec<PathBuf>,
    /// Family members such as `bn:3` or `bn-dbw:4`; repeatable.
    #[arg(long, value_name = "VARIANT:N")]
    pub family: Vec<String>,
    /// Number of seeded random automata.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest state count of random automata.
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Alphabet size of random automata.
    #[arg(long, default_value_t = 2)]
    pub symbols: usize,
}

#[derive(Args, Debug)]
pub struct SuiteOutput {
    /// Emit a single JSON document instead of TSV.
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RelationArg {
    Classical,
    Subset,
    Improved,
    Optimal,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Improved,
    Optimal,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Improved => Variant::Improved,
            VariantArg::Optimal => Variant::Optimal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Bn,
    BnDbw,
}

impl From<FamilyArg> for FamilyVariant {
    fn from(v: FamilyArg) -> Self {
        match v {
            FamilyArg::Bn => FamilyVariant::NbwBn,
            FamilyArg::BnDbw => FamilyVariant::DbwBnPrime,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("fdfw: {e}");
            ExitCode::from(2)
        }
    }
}
