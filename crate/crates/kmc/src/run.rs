//! The `run` command.

use kmc_core::khm::{self, ConstructOptions, Mode};
use kmc_core::perm::parse_generator_list;
use kmc_core::{Limits, OuterWord, PermGroup, SubgroupPair};

use crate::error::{CliError, Result};
use crate::group_file::resolve_group;
use crate::report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(CliError::Input(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Catalog name or group file path.
    pub group: String,
    /// Generators in cycle notation, optionally prefixed by `core:`.
    pub subgroup: String,
    pub word: String,
    pub mode: Mode,
    pub format: Format,
    pub limits: Limits,
    pub early_exit: bool,
    /// Value of `KMC_SEED`, echoed in text output. Nothing is random.
    pub seed: Option<String>,
}

impl RunConfig {
    pub fn new(group: &str, subgroup: &str, word: &str) -> RunConfig {
        RunConfig {
            group: group.into(),
            subgroup: subgroup.into(),
            word: word.into(),
            mode: Mode::Automorphisms,
            format: Format::Text,
            limits: Limits::default(),
            early_exit: false,
            seed: None,
        }
    }
}

/// Parses a subgroup description inside `g`. Every generator must lie in `g`.
pub fn parse_subgroup(g: &PermGroup, text: &str) -> Result<PermGroup> {
    let (take_core, gens_text) = match text.trim().strip_prefix("core:") {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let gens = parse_generator_list(g.degree(), gens_text)?;
    if let Some(bad) = gens.iter().find(|x| !g.contains(x)) {
        return Err(CliError::Input(format!("generator {bad} is not in the group")));
    }
    let sub = g.subgroup(&gens)?;
    if take_core {
        Ok(SubgroupPair::new(g.clone(), sub)?.normal_core())
    } else {
        Ok(sub)
    }
}

/// Runs the construction and renders the report.
pub fn execute(config: &RunConfig) -> Result<String> {
    let word = OuterWord::parse(&config.word)?;
    let g = resolve_group(&config.group, &config.limits)?;
    let n = parse_subgroup(&g, &config.subgroup)?;
    let opts = ConstructOptions {
        mode: config.mode,
        early_exit: config.early_exit,
        verify_lemma: true,
        limits: config.limits,
    };
    let trace = khm::construct(&g, &n, &word, &opts)?;
    let subgroup = config.subgroup.trim();
    Ok(match config.format {
        Format::Json => report::json(&config.group, subgroup, &trace),
        Format::Text => {
            let mut out = report::text(&config.group, subgroup, &trace);
            if let Some(seed) = &config.seed {
                out.push_str(&format!("seed       {seed} (unused)\n"));
            }
            out
        }
    })
}

/// Outcome of a command: exit status plus what goes to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// `run`: exit 0 on success, 2 when the subgroup violates the law, 1 on any
/// other error.
pub fn cmd_run(config: &RunConfig) -> CommandOutput {
    match execute(config) {
        Ok(stdout) => CommandOutput {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandOutput {
            status: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
