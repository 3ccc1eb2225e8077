//! Job description and report.
//!
//! A job file is TOML with the same field names as [`JobSpec`], e.g.
//!
//! ```toml
//! command = "lc verdict"
//! p = 5
//! variables = ["x", "y", "z"]
//! f = "x^4+y^4-z^4"
//! ```
//!
//! Sweeps use `command = "sweep lc verdict"` with `primes = [3, 5, 7]` or
//! `primes = "3..20"`.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use fsing_core::field::is_prime;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes: Option<Primes>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub change: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ext: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg_max: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub control: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_basis_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_reduction_steps: Option<u64>,
}

/// Either an explicit list or a range `"a..b"` (inclusive, primes only).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Primes {
    List(Vec<u64>),
    Range(String),
}

impl Primes {
    /// Parse `3,5,7` or `3..20`.
    pub fn parse(src: &str) -> Result<Self> {
        if src.contains("..") {
            return Ok(Primes::Range(src.trim().to_string()));
        }
        let list = src
            .split(',')
            .map(|s| s.trim().parse::<u64>().with_context(|| format!("bad prime `{}` in `{src}`", s.trim())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Primes::List(list))
    }

    /// Sorted, deduplicated primes; non-primes in a list are an error.
    pub fn expand(&self) -> Result<Vec<u64>> {
        let mut out = match self {
            Primes::List(v) => {
                if let Some(bad) = v.iter().find(|&&x| !is_prime(x)) {
                    bail!("{bad} is not prime");
                }
                v.clone()
            }
            Primes::Range(s) => {
                let (a, b) = s.split_once("..").with_context(|| format!("bad prime range `{s}`"))?;
                let lo: u64 = a.trim().parse().with_context(|| format!("bad prime range `{s}`"))?;
                let hi: u64 = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad prime range `{s}`"))?;
                (lo..=hi).filter(|&x| is_prime(x)).collect()
            }
        };
        out.sort_unstable();
        out.dedup();
        if out.is_empty() {
            bail!("no primes to sweep");
        }
        Ok(out)
    }
}

impl JobSpec {
    pub fn from_toml(src: &str) -> Result<Self> {
        toml::from_str(src).context("invalid job file")
    }
}

/// Machine-readable output of one job. Field order is fixed; `results`
/// objects have sorted keys.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema: u32,
    pub job: JobSpec,
    pub results: serde_json::Value,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(job: JobSpec, results: serde_json::Value, timing_ms: u128) -> Self {
        Report { tool: "fsing", version: env!("CARGO_PKG_VERSION"), schema: SCHEMA_VERSION, job, results, timing_ms }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(Primes::parse("3, 5,7").unwrap().expand().unwrap(), vec![3, 5, 7]);
        assert_eq!(Primes::parse("10..20").unwrap().expand().unwrap(), vec![11, 13, 17, 19]);
        assert!(Primes::parse("4,5").unwrap().expand().is_err());
        assert!(Primes::parse("3,x").is_err());
    }

    #[test]
    fn toml_round_trip() {
        let job = JobSpec::from_toml("command = \"lc verdict\"\np = 5\nf = \"x^4+y^4-z^4\"\nprimes = \"3..7\"").unwrap();
        assert_eq!(job.p, Some(5));
        assert_eq!(job.primes, Some(Primes::Range("3..7".into())));
        assert!(JobSpec::from_toml("command = \"gb\"\nbogus = 1").is_err());
    }
}
