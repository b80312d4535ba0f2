mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use catkit::categorify::Flavor;
use catkit::{SearchLimit, MAX_CANDIDATES_ENV};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "catkit", version, about = "Exact categorification of finite groups and extensions")]
struct Cli {
    /// Worker threads for enumeration (output does not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Upper bound on any brute-force candidate space
    #[arg(long, global = true, env = MAX_CANDIDATES_ENV)]
    max_candidates: Option<u128>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct GroupPair {
    /// Source group (file or name such as Z4, S3, Q8)
    #[arg(long)]
    from: String,
    /// Target group
    #[arg(long)]
    to: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, centre, abelianization and catalogue name of a group
    GroupInfo { group: String },
    /// All homomorphisms, lexicographically
    Homs(GroupPair),
    /// Homomorphisms up to conjugation, and their lifts up to natural isomorphism
    HomClasses(GroupPair),
    /// Automorphism, inner and outer counts
    Aut { group: String },
    /// Categorify a group
    Categorify {
        #[arg(long, default_value = "tautological")]
        flavor: Flavor,
        #[arg(long)]
        group: String,
        /// Leave identity edges out of DOT output
        #[arg(long)]
        no_identities: bool,
    },
    /// The covering functor from the simplicial to the tautological categorification
    Covering {
        #[arg(long)]
        group: String,
    },
    /// Bundle categorification of an extension
    Bundle {
        #[arg(long)]
        ext: PathBuf,
        #[arg(long)]
        no_identities: bool,
    },
    /// Factor sets and quasi-actions of sections of an extension
    FactorSet {
        #[arg(long)]
        ext: PathBuf,
        /// Section values, comma separated; all normalized sections if absent
        #[arg(long, value_delimiter = ',')]
        section: Option<Vec<usize>>,
    },
    /// Check the twisted cocycle law and compatibility of an (L, f) pair
    CheckCocycle {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Search a change of section relating two (L, f) pairs
    WeakEquiv {
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
    },
    /// Rebuild the middle group from an (L, f) pair
    CrossedProduct {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Classify extensions of a base group by a fiber group
    ClassifyExt {
        #[arg(long)]
        base: String,
        #[arg(long)]
        fiber: String,
    },
    /// Group cohomology with finite abelian coefficients
    Cohomology {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        group: String,
        /// Coefficient file, abelian group file, or group name
        #[arg(long)]
        coeff: String,
        /// Also enumerate cochains and require both answers to agree
        #[arg(long)]
        brute_force: bool,
        #[arg(long, default_value_t = catkit::cohomology::DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Pentagon associators on the linearized discrete categorification
    Associators {
        #[arg(long)]
        group: String,
        /// Cyclic coefficients with trivial action
        #[arg(long)]
        coeff: String,
    },
    /// Truncated nerve of a categorified group
    Nerve {
        #[arg(long, default_value = "tautological")]
        flavor: Flavor,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Integer homology of a truncated nerve
    Homology {
        #[arg(long, default_value = "tautological")]
        flavor: Flavor,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// A single degree; all computable degrees if absent
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The bar construction EG → BG
    Bar {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Category of open sets of a finite space
    OpenCat {
        #[arg(long)]
        space: PathBuf,
        /// Source space of a point map into `--space`
        #[arg(long, requires = "map")]
        map_from: Option<PathBuf>,
        /// Point map, comma separated
        #[arg(long, value_delimiter = ',', requires = "map_from")]
        map: Option<Vec<usize>>,
        #[arg(long)]
        no_identities: bool,
    },
    /// Least refinement of one cover by another
    Refine {
        #[arg(long)]
        space: PathBuf,
        /// The finer cover V
        #[arg(long)]
        fine: PathBuf,
        /// The coarser cover U
        #[arg(long)]
        coarse: PathBuf,
    },
}

pub struct Context {
    pub limit: SearchLimit,
    pub emit: Emit,
}

fn run(cli: Cli) -> Result<String, CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let ctx = Context {
        limit: cli.max_candidates.map(SearchLimit::new).unwrap_or_default(),
        emit: cli.emit,
    };
    use commands as c;
    match cli.command {
        Command::GroupInfo { group } => c::group_info(&ctx, &group),
        Command::Homs(pair) => c::homs(&ctx, &pair.from, &pair.to),
        Command::HomClasses(pair) => c::hom_classes(&ctx, &pair.from, &pair.to),
        Command::Aut { group } => c::aut(&ctx, &group),
        Command::Categorify { flavor, group, no_identities } => c::categorify(&ctx, flavor, &group, !no_identities),
        Command::Covering { group } => c::covering(&ctx, &group),
        Command::Bundle { ext, no_identities } => c::bundle(&ctx, &ext, !no_identities),
        Command::FactorSet { ext, section } => c::factor_set(&ctx, &ext, section),
        Command::CheckCocycle { pair } => c::check_cocycle(&ctx, &pair),
        Command::WeakEquiv { first, second } => c::weak_equiv(&ctx, &first, &second),
        Command::CrossedProduct { pair } => c::crossed_product(&ctx, &pair),
        Command::ClassifyExt { base, fiber } => c::classify_ext(&ctx, &base, &fiber),
        Command::Cohomology { n, group, coeff, brute_force, max_degree } => {
            c::cohomology(&ctx, n, &group, &coeff, brute_force, max_degree)
        }
        Command::Associators { group, coeff } => c::associators(&ctx, &group, &coeff),
        Command::Nerve { flavor, group, k } => c::nerve(&ctx, flavor, &group, k),
        Command::Homology { flavor, group, k, degree } => c::homology(&ctx, flavor, &group, k, degree),
        Command::Bar { group, k } => c::bar(&ctx, &group, k),
        Command::OpenCat { space, map_from, map, no_identities } => {
            c::open_cat(&ctx, &space, map_from.as_deref().zip(map.as_deref()), !no_identities)
        }
        Command::Refine { space, fine, coarse } => c::refine(&ctx, &space, &fine, &coarse),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
