//! Job configuration: a flat `key = value` file, then `key=value` overrides
//! from the command line.
//!
//! ```text
//! # Fano plane
//! system = A2
//! cotype = [2]
//! p = 2
//! t = 1
//! out = runs/fano
//! ```
//!
//! Recognised keys: `family`, `rank`, `system` (shorthand for both),
//! `cotype` (alias `J`), `p`, `t`, `out`, `twist_orbits`, `weight`
//! (aliases `lambda`, `λ`), `depth` and `matrix`. A bare argument such as
//! `E6` is read as `system`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use opprank_core::jantzen::DEFAULT_DEPTH_LIMIT;
use opprank_core::{Family, RootSystemSpec, TypeSet, Weight};

use crate::CliError;

pub const DEFAULT_OUT: &str = "opprank-out";

fn canonical_key(key: &str) -> Option<&'static str> {
    Some(match key {
        "family" => "family",
        "rank" => "rank",
        "system" => "system",
        "cotype" | "J" => "cotype",
        "p" => "p",
        "t" => "t",
        "out" => "out",
        "twist_orbits" => "twist_orbits",
        "weight" | "lambda" | "λ" => "weight",
        "depth" => "depth",
        "matrix" => "matrix",
        _ => return None,
    })
}

/// Raw settings, last write wins.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings(BTreeMap<&'static str, String>);

impl Settings {
    pub fn parse_file(text: &str) -> Result<Settings, CliError> {
        let mut s = Settings::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("line {}: expected key = value", n + 1)))?;
            s.set(k.trim(), v.trim())?;
        }
        Ok(s)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let k = canonical_key(key).ok_or_else(|| CliError::config(format!("unknown key {key:?}")))?;
        self.0.insert(k, value.to_string());
        Ok(())
    }

    /// `key=value`, or a bare root system name.
    pub fn apply_arg(&mut self, arg: &str) -> Result<(), CliError> {
        match arg.split_once('=') {
            Some((k, v)) => self.set(k.trim(), v.trim()),
            None => self.set("system", arg.trim()),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        canonical_key(key).and_then(|k| self.0.get(k)).map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub system: Option<RootSystemSpec>,
    cotype: Option<String>,
    pub p: Option<u64>,
    pub t: u32,
    pub out: PathBuf,
    pub twist_orbits: Option<Vec<Vec<usize>>>,
    pub weight: Option<Weight>,
    pub depth: usize,
    pub matrix: Option<PathBuf>,
}

impl JobConfig {
    pub fn from_settings(s: &Settings) -> Result<JobConfig, CliError> {
        let num = |key: &str| -> Result<Option<u64>, CliError> {
            s.get(key)
                .map(|v| {
                    v.parse::<u64>()
                        .map_err(|_| CliError::config(format!("{key} must be a non-negative integer, got {v:?}")))
                })
                .transpose()
        };
        let from_parts = match (s.get("family"), num("rank")?) {
            (Some(f), Some(r)) => {
                let family = single_char(f)
                    .and_then(Family::from_letter)
                    .ok_or_else(|| CliError::config(format!("unknown family {f:?}")))?;
                Some(RootSystemSpec::new(family, r as usize)?)
            }
            (None, None) => None,
            _ => return Err(CliError::config("family and rank must be given together")),
        };
        let named = s.get("system").map(str::parse::<RootSystemSpec>).transpose()?;
        let system = match (named, from_parts) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::config(format!("system {a} conflicts with family/rank {b}")))
            }
            (a, b) => a.or(b),
        };
        let t = match num("t")? {
            None => 1,
            Some(0) => return Err(CliError::config("t must be at least 1")),
            Some(t) => u32::try_from(t).map_err(|_| CliError::config("t is too large"))?,
        };
        Ok(JobConfig {
            system,
            cotype: s.get("cotype").map(str::to_string),
            p: num("p")?,
            t,
            out: s.get("out").unwrap_or(DEFAULT_OUT).into(),
            twist_orbits: s.get("twist_orbits").map(parse_orbits).transpose()?,
            weight: s.get("weight").map(parse_weight).transpose()?,
            depth: num("depth")?.map_or(DEFAULT_DEPTH_LIMIT, |d| d as usize),
            matrix: s.get("matrix").map(PathBuf::from),
        })
    }

    pub fn require_system(&self) -> Result<RootSystemSpec, CliError> {
        self.system
            .ok_or_else(|| CliError::config("no root system given (system=, or family= and rank=)"))
    }

    pub fn require_p(&self) -> Result<u64, CliError> {
        self.p.ok_or_else(|| CliError::config("no prime given (p=)"))
    }

    /// The cotype over an index set `{1, …, n}`.
    pub fn cotype(&self, n: usize) -> Result<Option<TypeSet>, CliError> {
        self.cotype.as_deref().map(|c| parse_cotype(c, n)).transpose()
    }

    pub fn require_cotype(&self, n: usize) -> Result<TypeSet, CliError> {
        self.cotype(n)?
            .ok_or_else(|| CliError::config("no cotype given (cotype= or J=)"))
    }
}

fn single_char(s: &str) -> Option<char> {
    let mut it = s.trim().chars();
    let c = it.next()?;
    it.next().is_none().then_some(c)
}

/// `[1,3]`, `{1,3}`, `1,3`, `[]`, `∅`, or a complement `I\{1}` (also
/// `I∖{1}`, `I-{1}`).
pub fn parse_cotype(s: &str, n: usize) -> Result<TypeSet, CliError> {
    let s = s.trim();
    if s == "∅" || s == "I" {
        return Ok(if s == "I" { TypeSet::full(n) } else { TypeSet::empty() });
    }
    for sep in ["\\", "∖", "-"] {
        if let Some(rest) = s.strip_prefix('I').and_then(|r| r.trim_start().strip_prefix(sep)) {
            let removed: TypeSet = rest.parse()?;
            return Ok(TypeSet::new(removed.nodes().to_vec(), n)?.complement(n));
        }
    }
    let set: TypeSet = s.parse()?;
    Ok(TypeSet::new(set.nodes().to_vec(), n)?)
}

/// `(12,0,0)` or `12,0,0`.
pub fn parse_weight(s: &str) -> Result<Weight, CliError> {
    let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| CliError::config(format!("bad weight coordinate {tok:?}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Weight::new)
}

/// Orbits separated by `;`, nodes by `,`: `1,5;2,4;3`.
pub fn parse_orbits(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(';')
        .map(|orbit| {
            orbit
                .trim()
                .trim_start_matches(['{', '['])
                .trim_end_matches(['}', ']'])
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::config(format!("bad orbit node {tok:?}")))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<JobConfig, CliError> {
        let mut s = Settings::default();
        for a in args {
            s.apply_arg(a)?;
        }
        JobConfig::from_settings(&s)
    }

    #[test]
    fn file_then_overrides() {
        let mut s = Settings::parse_file("# comment\nfamily = A\nrank = 3\n\np = 2 # trailing\n").unwrap();
        s.apply_arg("p=3").unwrap();
        s.apply_arg("J={1,3}").unwrap();
        let c = JobConfig::from_settings(&s).unwrap();
        assert_eq!(c.require_system().unwrap().to_string(), "A3");
        assert_eq!(c.p, Some(3));
        assert_eq!(c.t, 1);
        assert_eq!(c.require_cotype(3).unwrap().nodes(), &[1, 3]);
        assert_eq!(c.out, PathBuf::from(DEFAULT_OUT));
    }

    #[test]
    fn bare_system_and_aliases() {
        let c = cfg(&["E6", "λ=(12,0,0,0,0,0)", "p=13", "depth=4"]).unwrap();
        assert_eq!(c.require_system().unwrap().to_string(), "E6");
        assert_eq!(c.weight.unwrap().coords(), &[12, 0, 0, 0, 0, 0]);
        assert_eq!(c.depth, 4);
    }

    #[test]
    fn cotype_forms() {
        assert_eq!(parse_cotype("I\\{1}", 6).unwrap().nodes(), &[2, 3, 4, 5, 6]);
        assert_eq!(parse_cotype("I∖{1}", 6).unwrap().nodes(), &[2, 3, 4, 5, 6]);
        assert_eq!(parse_cotype("I-{2,3}", 3).unwrap().nodes(), &[1]);
        assert!(parse_cotype("∅", 2).unwrap().is_empty());
        assert!(parse_cotype("[]", 2).unwrap().is_empty());
        assert_eq!(parse_cotype("I", 2).unwrap().nodes(), &[1, 2]);
        assert!(parse_cotype("[3]", 2).is_err());
        assert!(parse_cotype("I\\{0}", 2).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(cfg(&["colour=red"]).is_err());
        assert!(cfg(&["family=A"]).is_err());
        assert!(cfg(&["family=Q", "rank=2"]).is_err());
        assert!(cfg(&["system=A2", "family=A", "rank=3"]).is_err());
        assert!(cfg(&["system=B1"]).is_err());
        assert!(cfg(&["t=0"]).is_err());
        assert!(cfg(&["p=two"]).is_err());
        assert!(Settings::parse_file("no equals sign").is_err());
        assert!(cfg(&["system=A2", "family=A", "rank=2"]).is_ok());
    }

    #[test]
    fn orbits() {
        assert_eq!(parse_orbits("1,5;2,4;3").unwrap(), vec![vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(parse_orbits("{1,6};{2,5};{3};{4}").unwrap().len(), 4);
        assert!(parse_orbits("1,x").is_err());
    }
}
