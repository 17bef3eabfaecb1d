use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sds::{sds_to_pcs, SdsFamily};
use crate::seqcore::SequenceFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Open,
    ExistsCited,
    NotExistsCited,
    ExistsWitness,
    NotExistsExhausted,
}

impl Status {
    pub fn exists(self) -> Option<bool> {
        match self {
            Status::Open => None,
            Status::ExistsCited | Status::ExistsWitness => Some(true),
            Status::NotExistsCited | Status::NotExistsExhausted => Some(false),
        }
    }

    /// 0 for open, 1 for cited, 2 for witnessed or exhausted.
    pub fn strength(self) -> u8 {
        match self {
            Status::Open => 0,
            Status::ExistsCited | Status::NotExistsCited => 1,
            Status::ExistsWitness | Status::NotExistsExhausted => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Open => "open",
            Status::ExistsCited => "exists-cited",
            Status::NotExistsCited => "not-exists-cited",
            Status::ExistsWitness => "exists-witness",
            Status::NotExistsExhausted => "not-exists-exhausted",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "open" => Status::Open,
            "exists-cited" => Status::ExistsCited,
            "not-exists-cited" => Status::NotExistsCited,
            "exists-witness" => Status::ExistsWitness,
            "not-exists-exhausted" => Status::NotExistsExhausted,
            other => return Err(Error::parse(1, format!("unknown status {other:?}"))),
        })
    }
}

/// Where a fact comes from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// A verified file under the asset directory.
    Asset { path: String },
    /// A literature fact identified by a short tag.
    Cited { tag: String },
    /// Built in code (Golay doubling, base sequences, length-1 families).
    Construction { detail: String },
    /// Union of families for the listed member counts.
    Composition { parts: Vec<usize> },
    /// An exhaustive search run.
    SearchRun { id: String },
    /// Ruled out by 4(Σk − λ) = pN, which needs 4 | pN when N > 1.
    OrderCondition,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Asset { path } => write!(f, "asset:{path}"),
            Provenance::Cited { tag } => write!(f, "cited:{tag}"),
            Provenance::Construction { detail } => write!(f, "construction:{detail}"),
            Provenance::Composition { parts } => {
                let p: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "composition:{}", p.join("+"))
            }
            Provenance::SearchRun { id } => write!(f, "search:{id}"),
            Provenance::OrderCondition => f.write_str("order-condition"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Witness {
    Sds(SdsFamily),
    Sequences(SequenceFamily),
}

impl Witness {
    pub fn sequences(&self) -> Result<SequenceFamily> {
        match self {
            Witness::Sds(s) => sds_to_pcs(s),
            Witness::Sequences(f) => Ok(f.clone()),
        }
    }
}

/// An existence fact for one (p, N) cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub p: usize,
    pub n: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn new(p: usize, n: usize, status: Status, provenance: Provenance) -> Self {
        Self {
            p,
            n,
            status,
            witness: None,
            provenance,
        }
    }

    pub fn with_witness(p: usize, n: usize, witness: Witness, provenance: Provenance) -> Self {
        Self {
            p,
            n,
            status: Status::ExistsWitness,
            witness: Some(witness),
            provenance,
        }
    }

    pub fn cell(&self) -> (usize, usize) {
        (self.p, self.n)
    }

    fn rank(&self) -> (u8, &Provenance) {
        (self.status.strength(), &self.provenance)
    }

    /// Combines two facts about the same cell, keeping the stronger one.
    ///
    /// Existence and nonexistence cannot be merged. Ties go to the smaller
    /// provenance, so merging is order-independent.
    pub fn merge(self, other: CatalogEntry) -> Result<CatalogEntry> {
        debug_assert_eq!(self.cell(), other.cell());
        if let (Some(a), Some(b)) = (self.status.exists(), other.status.exists()) {
            if a != b {
                let (yes, no) = if a { (&self, &other) } else { (&other, &self) };
                return Err(Error::ClosureContradiction {
                    p: self.p,
                    n: self.n,
                    derived: format!("{} ({})", yes.status, yes.provenance),
                    citation: no.provenance.to_string(),
                });
            }
        }
        let (ra, rb) = (self.rank(), other.rank());
        if (rb.0 > ra.0) || (rb.0 == ra.0 && rb.1 < ra.1) {
            Ok(other)
        } else {
            Ok(self)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cited(status: Status, tag: &str) -> CatalogEntry {
        CatalogEntry::new(3, 20, status, Provenance::Cited { tag: tag.into() })
    }

    #[test]
    fn merge_strengthens() {
        let open = CatalogEntry::new(3, 20, Status::Open, Provenance::OrderCondition);
        let no = cited(Status::NotExistsCited, "x");
        let ex = CatalogEntry::new(
            3,
            20,
            Status::NotExistsExhausted,
            Provenance::SearchRun { id: "r".into() },
        );
        assert_eq!(open.clone().merge(no.clone()).unwrap().status, Status::NotExistsCited);
        assert_eq!(no.clone().merge(ex.clone()).unwrap().status, Status::NotExistsExhausted);
        assert_eq!(ex.clone().merge(no.clone()).unwrap().status, Status::NotExistsExhausted);
    }

    #[test]
    fn merge_is_symmetric_on_ties() {
        let a = cited(Status::ExistsCited, "a");
        let b = cited(Status::ExistsCited, "b");
        assert_eq!(a.clone().merge(b.clone()).unwrap(), b.merge(a).unwrap());
    }

    #[test]
    fn merge_rejects_contradiction() {
        let a = cited(Status::ExistsCited, "a");
        let b = cited(Status::NotExistsCited, "b");
        assert!(matches!(
            a.merge(b),
            Err(Error::ClosureContradiction { p: 3, n: 20, .. })
        ));
    }

    #[test]
    fn status_round_trip() {
        for s in [
            Status::Open,
            Status::ExistsCited,
            Status::NotExistsCited,
            Status::ExistsWitness,
            Status::NotExistsExhausted,
        ] {
            assert_eq!(s.as_str().parse::<Status>().unwrap(), s);
        }
    }
}
