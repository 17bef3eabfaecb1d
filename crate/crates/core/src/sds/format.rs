//! SDS file format.
//!
//! Text form:
//!
//! ```text
//! # free comment
//! name=p3-n36
//! source=explicit listing
//! N=36 lambda=18
//! 0 1 2 3 4 6 7 11 13 15 18 21 23 27 29
//! ...
//! ```
//!
//! One subset per line with space-separated elements; `{}` is the empty
//! subset. The structured form is JSON with the same field names
//! (`name`, `source`, `N`, `lambda`, `sets`).

use serde::{Deserialize, Serialize};

use super::family::SdsFamily;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdsRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(rename = "N")]
    pub n: usize,
    pub lambda: u64,
    pub sets: Vec<Vec<usize>>,
}

impl SdsRecord {
    pub fn from_family(f: &SdsFamily) -> Self {
        Self {
            name: None,
            source: None,
            n: f.modulus(),
            lambda: f.lambda(),
            sets: f.sets(),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn sourced(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    /// Validates elements (range, duplicates) and builds the family.
    pub fn family(&self) -> Result<SdsFamily> {
        SdsFamily::from_sets(self.n, self.sets.clone(), self.lambda)
    }

    /// Parses either form, choosing JSON when the first non-blank byte is `{`
    /// followed by anything other than `}`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim_start();
        if t.starts_with('{') && !t.starts_with("{}") {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let rec: SdsRecord = serde_json::from_str(text)?;
        rec.family()?;
        Ok(rec)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut name = None;
        let mut source = None;
        let mut header: Option<(usize, u64)> = None;
        let mut sets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if header.is_none() {
                if let Some(v) = line.strip_prefix("name=") {
                    name = Some(v.trim().to_string());
                } else if let Some(v) = line.strip_prefix("source=") {
                    source = Some(v.trim().to_string());
                } else if line.starts_with("N=") {
                    header = Some(parse_header(line).ok_or_else(|| {
                        Error::parse(line_no, format!("expected \"N=<n> lambda=<l>\", got {line:?}"))
                    })?);
                } else {
                    return Err(Error::parse(line_no, "subset line before \"N=... lambda=...\" header"));
                }
                continue;
            }
            let (n, _) = header.expect("checked above");
            let set = if line == "{}" {
                Vec::new()
            } else {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::parse(line_no, format!("bad element {tok:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            // Range and duplicate checks with the line number attached.
            super::subset::ResidueSubset::new(n, set.clone()).map_err(|e| Error::parse(line_no, e.to_string()))?;
            sets.push(set);
        }
        let (n, lambda) = header.ok_or_else(|| Error::parse(1, "missing \"N=... lambda=...\" header"))?;
        if sets.is_empty() {
            return Err(Error::parse(text.lines().count(), "no subsets"));
        }
        Ok(Self {
            name,
            source,
            n,
            lambda,
            sets,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("name={n}\n"));
        }
        if let Some(s) = &self.source {
            out.push_str(&format!("source={s}\n"));
        }
        out.push_str(&format!("N={} lambda={}\n", self.n, self.lambda));
        for set in &self.sets {
            if set.is_empty() {
                out.push_str("{}");
            } else {
                let parts: Vec<String> = set.iter().map(usize::to_string).collect();
                out.push_str(&parts.join(" "));
            }
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

fn parse_header(line: &str) -> Option<(usize, u64)> {
    let mut n = None;
    let mut lambda = None;
    for tok in line.split_whitespace() {
        let (k, v) = tok.split_once('=')?;
        match k {
            "N" => n = Some(v.parse().ok()?),
            "lambda" => lambda = Some(v.parse().ok()?),
            _ => return None,
        }
    }
    Some((n?, lambda?))
}

/// Parses an SDS file in either form and validates it into a family.
pub fn parse_sds(text: &str) -> Result<SdsFamily> {
    SdsRecord::parse(text)?.family()
}
