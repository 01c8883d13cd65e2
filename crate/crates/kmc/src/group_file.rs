//! Plain-text group files.
//!
//! ```text
//! # the Klein four-group
//! degree 4
//! gen (1 2)(3 4)
//! gen (1 3)(2 4)
//! ```
//!
//! The `degree` line comes first; each `gen` line holds one permutation in
//! cycle notation. `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;

use kmc_core::{Limits, PermGroup, Permutation};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let mut degree: Option<usize> = None;
        let mut generators = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |message: String| CliError::GroupFile {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line
                .split_once(char::is_whitespace)
                .map(|(a, b)| (a, b.trim()))
                .unwrap_or((line, ""));
            match keyword {
                "degree" => {
                    if degree.is_some() {
                        return Err(err("duplicate `degree` line".into()));
                    }
                    let n: usize = rest
                        .parse()
                        .map_err(|_| err(format!("bad degree `{rest}`")))?;
                    if n == 0 {
                        return Err(err("degree must be positive".into()));
                    }
                    degree = Some(n);
                }
                "gen" => {
                    let n = degree.ok_or_else(|| err("`gen` before `degree`".into()))?;
                    let g = Permutation::parse_cycles(n, rest).map_err(|e| err(e.to_string()))?;
                    generators.push(g);
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }
        let degree = degree.ok_or(CliError::GroupFile {
            line: 0,
            message: "missing `degree` line".into(),
        })?;
        Ok(GroupFile { degree, generators })
    }

    pub fn read(path: &Path) -> Result<GroupFile> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        GroupFile::parse(&text)
    }

    pub fn from_group(g: &PermGroup) -> GroupFile {
        GroupFile {
            degree: g.degree(),
            generators: g.generators().to_vec(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            writeln!(out, "gen {g}").expect("writing to a String");
        }
        out
    }

    pub fn build(&self, limits: &Limits) -> Result<PermGroup> {
        Ok(PermGroup::generate(self.degree, &self.generators, limits)?)
    }
}

/// Resolves `--group`: an existing file path, otherwise a catalog name.
pub fn resolve_group(name: &str, limits: &Limits) -> Result<PermGroup> {
    let path = Path::new(name);
    if path.is_file() {
        GroupFile::read(path)?.build(limits)
    } else {
        Ok(kmc_core::catalog::build(name, limits)?)
    }
}
