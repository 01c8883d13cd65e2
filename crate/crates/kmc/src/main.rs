use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kmc::{cmd_run, cmd_verify, Format, RunConfig};
use kmc_core::khm::Mode;
use kmc_core::Limits;

#[derive(Parser)]
#[command(name = "kmc", version, about = "Large characteristic subgroups satisfying outer commutator laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Automorphisms,
    SurjectiveEndos,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Caps {
    /// Largest group order to materialize.
    #[arg(long, default_value_t = Limits::default().max_order)]
    max_order: usize,
    /// Largest group order for automorphism searches.
    #[arg(long, default_value_t = Limits::default().max_aut)]
    max_aut: usize,
    /// Largest |A|·|B| for commutator subgroups.
    #[arg(long, default_value_t = Limits::default().max_pairs)]
    max_pairs: usize,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order,
            max_aut: self.max_aut,
            max_pairs: self.max_pairs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a characteristic subgroup H of G satisfying the word's law.
    Run {
        /// Catalog name (S4, D4xC2, Q8, ...) or a group file.
        #[arg(long)]
        group: String,
        /// Generators of N in cycle notation, e.g. "(1 2)(3 4), (1 3)(2 4)";
        /// prefix with `core:` to use the normal core.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
        /// Outer commutator word, e.g. "[[x1,x2],x3]" or "solvable:2".
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "automorphisms")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Stop once the steps reach a fixed point.
        #[arg(long)]
        early_exit: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run a property suite: properties, lemma, theorem, coincidence, intro, series, or all.
    Verify {
        suite: String,
        #[command(flatten)]
        caps: Caps,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Run {
            group,
            subgroup,
            word,
            mode,
            format,
            early_exit,
            caps,
        } => cmd_run(&RunConfig {
            group,
            subgroup,
            word,
            mode: match mode {
                ModeArg::Automorphisms => Mode::Automorphisms,
                ModeArg::SurjectiveEndos => Mode::SurjectiveEndomorphisms,
            },
            format: match format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
            limits: caps.limits(),
            early_exit,
            seed: std::env::var("KMC_SEED").ok(),
        }),
        Command::Verify { suite, caps } => cmd_verify(&suite, &caps.limits()),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.status as u8)
}
