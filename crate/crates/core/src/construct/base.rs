use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{is_acs, nacf, BinarySequence, Offender, SequenceFamily, SequenceFile};

/// Base sequences (a; b; c; d): a, b of length m and c, d of length n.
///
/// Only the length shape is enforced on construction; the δ property is
/// checked by [`verify_base`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseSequenceQuad {
    pub a: BinarySequence,
    pub b: BinarySequence,
    pub c: BinarySequence,
    pub d: BinarySequence,
}

impl BaseSequenceQuad {
    pub fn new(a: BinarySequence, b: BinarySequence, c: BinarySequence, d: BinarySequence) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        if c.len() != d.len() {
            return Err(Error::LengthMismatch {
                expected: c.len(),
                found: d.len(),
            });
        }
        Ok(Self { a, b, c, d })
    }

    /// Views an ACS₄ family of length N as base sequences BS(N, N).
    pub fn from_acs4(f: &SequenceFamily) -> Result<Self> {
        match f.members() {
            [a, b, c, d] => Self::new(a.clone(), b.clone(), c.clone(), d.clone()),
            _ => Err(Error::InvalidBase(format!("expected 4 sequences, found {}", f.size()))),
        }
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn members(&self) -> [&BinarySequence; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Sequence-file form with a `role=base m=.. n=..` header.
    pub fn to_file(&self) -> SequenceFile {
        SequenceFile {
            rows: self.members().into_iter().cloned().collect(),
            ..SequenceFile::default()
        }
        .with_comment(format!("role=base m={} n={}", self.m(), self.n()))
    }

    pub fn from_file(file: &SequenceFile) -> Result<Self> {
        if file.role() != Some("base") {
            return Err(Error::InvalidBase("header must declare role=base".into()));
        }
        let (m, n) = (file.attr_usize("m")?, file.attr_usize("n")?);
        let [a, b, c, d] = <[BinarySequence; 4]>::try_from(file.rows.clone())
            .map_err(|rows| Error::InvalidBase(format!("expected 4 rows, found {}", rows.len())))?;
        let quad = Self::new(a, b, c, d)?;
        if m.is_some_and(|m| m != quad.m()) || n.is_some_and(|n| n != quad.n()) {
            return Err(Error::InvalidBase(format!(
                "declared (m,n)=({:?},{:?}) but rows have ({},{})",
                m,
                n,
                quad.m(),
                quad.n()
            )));
        }
        Ok(quad)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseReport {
    pub holds: bool,
    /// Σ of the four NACFs, indexed by shift, length max(m, n).
    pub sum: Vec<i64>,
    pub first_offender: Option<Offender>,
}

/// True iff the four NACFs (shorter ones zero-padded) sum to zero at every
/// nonzero shift.
pub fn verify_base(quad: &BaseSequenceQuad) -> BaseReport {
    let len = quad.m().max(quad.n());
    let mut sum = vec![0i64; len];
    for s in quad.members() {
        for (i, v) in nacf(s).values.into_iter().enumerate() {
            sum[i] += v;
        }
    }
    let first_offender = sum
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &v)| v != 0)
        .map(|(shift, &residual)| Offender { shift, residual });
    BaseReport {
        holds: first_offender.is_none(),
        sum,
        first_offender,
    }
}

/// (a; b; c; d) ↦ (a‖c, a‖−c, b‖d, b‖−d), an ACS₄ of length m + n.
pub fn base_to_acs4(quad: &BaseSequenceQuad) -> Result<SequenceFamily> {
    let report = verify_base(quad);
    if let Some(off) = report.first_offender {
        return Err(Error::InvalidBase(format!(
            "NACF sum is {} at shift {}",
            off.residual, off.shift
        )));
    }
    let family = SequenceFamily::new(vec![
        quad.a.concat(&quad.c),
        quad.a.concat(&quad.c.negate()),
        quad.b.concat(&quad.d),
        quad.b.concat(&quad.d.negate()),
    ])?;
    let check = is_acs(&family);
    if let Some(off) = check.first_offender() {
        return Err(Error::InvalidBase(format!(
            "concatenation is not complementary at shift {}",
            off.shift
        )));
    }
    Ok(family)
}
