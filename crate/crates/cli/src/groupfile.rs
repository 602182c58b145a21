//! Line-oriented group files:
//!
//! ```text
//! # comment
//! name S4
//! degree 4
//! gen (1 2 3 4)
//! gen (1 2)
//! ```
//!
//! Points are 1-based, fixed points are omitted and the identity is `()`.

use std::fmt::Write as _;

use fusion_core::{Group, Perm, DEFAULT_ELEMENT_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invalid cycle: {message}")]
    InvalidCycle { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    /// Generators in canonical cycle notation.
    pub generators: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> GroupFileError {
    GroupFileError::Parse { line, message: message.into() }
}

/// Parses `(1 2 3)(4 5)` into 1-based cycles.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err("empty generator".into());
    }
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(format!("expected '(' at {rest:?}"));
        };
        let Some(close) = body.find(')') else {
            return Err("unclosed cycle".into());
        };
        let points = body[..close]
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad point {t:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn parse_perm(degree: usize, text: &str) -> Result<Perm, String> {
    let cycles = parse_cycles(text)?;
    Perm::from_cycles(degree, &cycles).map_err(|e| e.to_string())
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile, GroupFileError> {
        let mut name = String::new();
        let mut degree = None;
        let mut raw_gens: Vec<(usize, &str)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let value = value.trim();
            match key {
                "name" => name = value.to_string(),
                "degree" => {
                    let n = value.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad degree {value:?}")))?;
                    if n == 0 {
                        return Err(parse_err(line_no, "degree must be positive"));
                    }
                    degree = Some(n);
                }
                "gen" => raw_gens.push((line_no, value)),
                other => return Err(parse_err(line_no, format!("unknown keyword {other:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| parse_err(text.lines().count().max(1), "missing degree line"))?;
        let mut generators = Vec::with_capacity(raw_gens.len());
        for (line, value) in raw_gens {
            let cycles = parse_cycles(value).map_err(|message| parse_err(line, message))?;
            let perm = Perm::from_cycles(degree, &cycles)
                .map_err(|e| GroupFileError::InvalidCycle { line, message: e.to_string() })?;
            generators.push(perm.to_string());
        }
        Ok(GroupFile { name, degree, generators })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "name {}", self.name).unwrap();
        writeln!(out, "degree {}", self.degree).unwrap();
        for g in &self.generators {
            writeln!(out, "gen {g}").unwrap();
        }
        out
    }

    pub fn from_perms(name: &str, degree: usize, gens: &[Perm]) -> GroupFile {
        GroupFile { name: name.to_string(), degree, generators: gens.iter().map(|g| g.to_string()).collect() }
    }

    pub fn perms(&self) -> Vec<Perm> {
        self.generators.iter().map(|g| parse_perm(self.degree, g).expect("canonical generator")).collect()
    }

    pub fn build(&self) -> fusion_core::Result<Group> {
        self.build_with_limit(DEFAULT_ELEMENT_LIMIT)
    }

    pub fn build_with_limit(&self, limit: usize) -> fusion_core::Result<Group> {
        Group::generated_with_limit(self.degree, &self.perms(), limit)
    }
}
