//! Run configuration: a TOML file mapping onto [`RunConfig`], with command
//! line flags layered on top.

use std::path::{Path, PathBuf};

use cobase_core::group::DEFAULT_ENUMERATION_CAP;
use cobase_core::probability::{ClosedFormCase, DEFAULT_TUPLE_CAP};
use cobase_core::GroupSpec;
use num_rational::BigRational;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Bruteforce,
    Montecarlo,
    Formula,
    Bounds,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// `c = 2` or `c = [1, 2, 3]`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum CList {
    One(u32),
    Many(Vec<u32>),
}

impl CList {
    pub fn values(&self) -> Vec<u32> {
        match self {
            CList::One(c) => vec![*c],
            CList::Many(cs) => cs.clone(),
        }
    }
}

impl Default for CList {
    fn default() -> CList {
        CList::One(1)
    }
}

fn default_enumeration_cap() -> u64 {
    DEFAULT_ENUMERATION_CAP as u64
}

fn default_tuple_cap() -> u64 {
    DEFAULT_TUPLE_CAP as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Caps {
    #[serde(default = "default_enumeration_cap")]
    pub enumeration: u64,
    #[serde(default = "default_tuple_cap")]
    pub tuples: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            enumeration: default_enumeration_cap(),
            tuples: default_tuple_cap(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: GroupSpec,
    #[serde(default)]
    pub c: CList,
    #[serde(default)]
    pub method: Method,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    /// Maximal character ratio for the mr bound, as `"a/b"`.
    pub mr: Option<String>,
    /// Closed-form cases to report (`"1"`, `"2a"`, `"2b"`, `"2c"`); empty means all.
    #[serde(default)]
    pub cases: Vec<String>,
    #[serde(default)]
    pub caps: Caps,
    #[serde(default)]
    pub output: Output,
}

pub const DEFAULT_TRIALS: u64 = 100_000;

impl RunConfig {
    pub fn parse(text: &str) -> CliResult<RunConfig> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> CliResult<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        RunConfig::parse(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.caps.enumeration == 0 || self.caps.tuples == 0 {
            return Err(CliError::Config("caps must be positive".into()));
        }
        if self.c.values().is_empty() {
            return Err(CliError::Config("`c` lists no values".into()));
        }
        if self.method == Method::Montecarlo && self.seed.is_none() {
            return Err(CliError::Config(
                "`seed` is required for method = \"montecarlo\"".into(),
            ));
        }
        parse_cases(&self.cases)?;
        if let Some(mr) = &self.mr {
            parse_mr(mr)?;
        }
        Ok(())
    }

    pub fn enum_cap(&self) -> usize {
        self.caps.enumeration as usize
    }

    pub fn tuple_cap(&self) -> u128 {
        self.caps.tuples as u128
    }

    pub fn trials(&self) -> u64 {
        self.trials.unwrap_or(DEFAULT_TRIALS)
    }
}

pub fn parse_cases(names: &[String]) -> CliResult<Vec<ClosedFormCase>> {
    if names.is_empty() {
        return Ok(ClosedFormCase::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| {
            n.parse()
                .map_err(|e: cobase_core::Error| CliError::Config(e.to_string()))
        })
        .collect()
}

pub fn parse_mr(s: &str) -> CliResult<BigRational> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Config(format!("`mr = {s:?}` is not a rational like \"1/2\"")))
}

/// `--c` as parsed by clap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CArg(pub Vec<u32>);

pub fn parse_c_arg(s: &str) -> Result<CArg, String> {
    parse_c_list(s).map(CArg)
}

/// Parses `1,2,3` or `1..4` (inclusive).
pub fn parse_c_list(s: &str) -> Result<Vec<u32>, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a
            .trim()
            .parse()
            .map_err(|_| format!("bad range start in `{s}`"))?;
        let b: u32 = b
            .trim()
            .parse()
            .map_err(|_| format!("bad range end in `{s}`"))?;
        if a > b {
            return Err(format!("empty range `{s}`"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| format!("bad value `{t}` in `{s}`"))
        })
        .collect()
}
