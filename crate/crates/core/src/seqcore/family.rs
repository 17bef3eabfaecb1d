use serde::{Deserialize, Serialize};

use super::correlation::{nacf, pacf, CorrelationKind, CorrelationVector};
use super::BinarySequence;
use crate::error::{Error, Result};

/// p ≥ 1 binary sequences of a common length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<BinarySequence>", into = "Vec<BinarySequence>")]
pub struct SequenceFamily {
    n: usize,
    members: Vec<BinarySequence>,
}

impl SequenceFamily {
    pub fn new(members: Vec<BinarySequence>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyFamily)?;
        let n = first.len();
        if let Some(bad) = members.iter().find(|m| m.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Self { n, members })
    }

    /// Common sequence length N.
    pub fn length(&self) -> usize {
        self.n
    }

    /// Number of members p.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[BinarySequence] {
        &self.members
    }

    pub fn into_members(self) -> Vec<BinarySequence> {
        self.members
    }

    /// Replaces member `i`, keeping the length invariant.
    pub fn with_member(&self, i: usize, member: BinarySequence) -> Result<Self> {
        let mut members = self.members.clone();
        members[i] = member;
        Self::new(members)
    }

    /// Entrywise sum of the members' periodic autocorrelations.
    pub fn pacf_sum(&self) -> CorrelationVector {
        self.correlation_sum(CorrelationKind::Periodic)
    }

    /// Entrywise sum of the members' aperiodic autocorrelations.
    pub fn nacf_sum(&self) -> CorrelationVector {
        self.correlation_sum(CorrelationKind::Aperiodic)
    }

    fn correlation_sum(&self, kind: CorrelationKind) -> CorrelationVector {
        let mut values = vec![0i64; self.n];
        for m in &self.members {
            let c = match kind {
                CorrelationKind::Periodic => pacf(m),
                CorrelationKind::Aperiodic => nacf(m),
            };
            for (acc, v) in values.iter_mut().zip(c.values) {
                *acc += v;
            }
        }
        CorrelationVector { kind, values }
    }
}

impl TryFrom<Vec<BinarySequence>> for SequenceFamily {
    type Error = Error;

    fn try_from(members: Vec<BinarySequence>) -> Result<Self> {
        Self::new(members)
    }
}

impl From<SequenceFamily> for Vec<BinarySequence> {
    fn from(f: SequenceFamily) -> Self {
        f.members
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Offender {
    pub shift: usize,
    pub residual: i64,
}

/// Outcome of a δ-function test on a correlation sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementarityReport {
    pub kind: CorrelationKind,
    pub holds: bool,
    pub sum: Vec<i64>,
    pub offenders: Vec<Offender>,
}

impl ComplementarityReport {
    fn from_sum(sum: CorrelationVector) -> Self {
        let offenders: Vec<Offender> = sum
            .values
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &v)| v != 0)
            .map(|(shift, &residual)| Offender { shift, residual })
            .collect();
        Self {
            kind: sum.kind,
            holds: offenders.is_empty(),
            sum: sum.values,
            offenders,
        }
    }

    pub fn first_offender(&self) -> Option<Offender> {
        self.offenders.first().copied()
    }
}

/// PACF-sum δ test.
pub fn is_pcs(f: &SequenceFamily) -> ComplementarityReport {
    ComplementarityReport::from_sum(f.pacf_sum())
}

/// NACF-sum δ test.
pub fn is_acs(f: &SequenceFamily) -> ComplementarityReport {
    ComplementarityReport::from_sum(f.nacf_sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(lines: &[&str]) -> SequenceFamily {
        SequenceFamily::new(lines.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn pcs_examples() {
        assert!(is_pcs(&fam(&["+++-"])).holds);
        let r = is_pcs(&fam(&["++", "+-"]));
        assert!(r.holds);
        assert_eq!(r.sum, vec![4, 0]);
        let r = is_pcs(&fam(&["++", "++"]));
        assert!(!r.holds);
        assert_eq!(r.offenders, vec![Offender { shift: 1, residual: 4 }]);
    }

    #[test]
    fn acs_examples() {
        assert!(is_acs(&fam(&["++", "+-"])).holds);
        assert!(is_acs(&fam(&["+"])).holds);
        let r = is_acs(&fam(&["+++-"]));
        assert!(!r.holds);
        assert_eq!(r.first_offender(), Some(Offender { shift: 1, residual: 1 }));
    }

    #[test]
    fn rejects_ragged_or_empty() {
        assert!(SequenceFamily::new(vec![]).is_err());
        let a: BinarySequence = "++".parse().unwrap();
        let b: BinarySequence = "+".parse().unwrap();
        assert!(matches!(
            SequenceFamily::new(vec![a, b]),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        ));
    }
}
