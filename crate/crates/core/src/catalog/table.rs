use serde::{Deserialize, Serialize};

use super::closure::{decompositions, Cells};
use super::entry::{Provenance, Status};
use super::Catalog;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mark {
    /// Exists and no split into two smaller existing families is known.
    Bullet,
    /// Exists as a union of two smaller existing families.
    Circle,
    /// Does not exist, or no construction is known.
    Blank,
    /// p is divisible by 4: union of p/4 ACS₄ families.
    AllRow,
}

impl Mark {
    pub fn symbol(self) -> char {
        match self {
            Mark::Bullet => '*',
            Mark::Circle => 'o',
            Mark::Blank => '.',
            Mark::AllRow => '+',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub p: usize,
    pub n: usize,
    pub mark: Mark,
    pub status: Status,
    pub provenance: Option<Provenance>,
    /// Smallest q with q + (p - q) = p composable, for circle cells.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceTable {
    pub pmax: usize,
    pub nmax: usize,
    /// Row-major: p = 1..=pmax, N = 1..=nmax.
    pub cells: Vec<TableCell>,
}

impl ExistenceTable {
    pub fn from_cells(cells: &Cells, pmax: usize, nmax: usize) -> Result<Self> {
        if pmax == 0 || nmax == 0 {
            return Err(Error::Config("table bounds must be positive".into()));
        }
        let mut out = Vec::with_capacity(pmax * nmax);
        for p in 1..=pmax {
            for n in 1..=nmax {
                let entry = cells.get(&(p, n));
                let status = entry.map_or(Status::Open, |e| e.status);
                let parts = decompositions(cells, p, n).first().copied();
                let mark = match status.exists() {
                    _ if p % 4 == 0 => Mark::AllRow,
                    Some(true) if parts.is_some() => Mark::Circle,
                    Some(true) => Mark::Bullet,
                    _ => Mark::Blank,
                };
                out.push(TableCell {
                    p,
                    n,
                    mark,
                    status,
                    provenance: entry.map(|e| e.provenance.clone()),
                    parts: if mark == Mark::Circle { parts } else { None },
                });
            }
        }
        Ok(Self { pmax, nmax, cells: out })
    }

    pub fn cell(&self, p: usize, n: usize) -> Option<&TableCell> {
        if p == 0 || n == 0 || p > self.pmax || n > self.nmax {
            return None;
        }
        self.cells.get((p - 1) * self.nmax + (n - 1))
    }

    pub fn mark(&self, p: usize, n: usize) -> Option<Mark> {
        self.cell(p, n).map(|c| c.mark)
    }

    /// The printed layout: rows with p not divisible by 4, columns at even N.
    /// `*` bullet, `o` circle, `.` blank.
    pub fn render_text(&self) -> String {
        let cols: Vec<usize> = (2..=self.nmax).step_by(2).collect();
        let mut s = String::from(" p\\N");
        for n in &cols {
            s.push_str(&format!(" {n:>2}"));
        }
        s.push('\n');
        for p in (1..=self.pmax).filter(|p| p % 4 != 0) {
            s.push_str(&format!("{p:>4}"));
            for &n in &cols {
                s.push_str(&format!("  {}", self.mark(p, n).unwrap_or(Mark::Blank).symbol()));
            }
            s.push('\n');
        }
        s
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

/// The existence table over the shipped catalog.
pub fn build_table(pmax: usize, nmax: usize) -> Result<ExistenceTable> {
    Catalog::load_embedded()?.table(pmax, nmax)
}
