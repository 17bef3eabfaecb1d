use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{is_acs, BinarySequence, SequenceFamily, SequenceFile};

/// An aperiodic complementary pair; validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    try_from = "(BinarySequence, BinarySequence)",
    into = "(BinarySequence, BinarySequence)"
)]
pub struct GolayPair {
    a: BinarySequence,
    b: BinarySequence,
}

impl GolayPair {
    pub fn new(a: BinarySequence, b: BinarySequence) -> Result<Self> {
        let family = SequenceFamily::new(vec![a.clone(), b.clone()])?;
        if let Some(off) = is_acs(&family).first_offender() {
            return Err(Error::InvalidGolay(format!(
                "NACF sum is {} at shift {}",
                off.residual, off.shift
            )));
        }
        Ok(Self { a, b })
    }

    /// The built-in length-1 pair ((+), (+)).
    pub fn trivial() -> Self {
        let one = BinarySequence::all_plus(1).expect("length 1");
        Self::new(one.clone(), one).expect("length-1 pairs are vacuously complementary")
    }

    /// The built-in length-2 pair ((+,+), (+,−)).
    pub fn length_two() -> Self {
        golay_double(&Self::trivial())
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn a(&self) -> &BinarySequence {
        &self.a
    }

    pub fn b(&self) -> &BinarySequence {
        &self.b
    }

    pub fn family(&self) -> SequenceFamily {
        SequenceFamily::new(vec![self.a.clone(), self.b.clone()]).expect("equal lengths")
    }

    pub fn to_file(&self) -> SequenceFile {
        SequenceFile::from_family(&self.family()).with_comment("role=golay")
    }

    pub fn from_family(f: &SequenceFamily) -> Result<Self> {
        match f.members() {
            [a, b] => Self::new(a.clone(), b.clone()),
            _ => Err(Error::InvalidGolay(format!("expected 2 sequences, found {}", f.size()))),
        }
    }
}

impl TryFrom<(BinarySequence, BinarySequence)> for GolayPair {
    type Error = Error;

    fn try_from((a, b): (BinarySequence, BinarySequence)) -> Result<Self> {
        Self::new(a, b)
    }
}

impl From<GolayPair> for (BinarySequence, BinarySequence) {
    fn from(g: GolayPair) -> Self {
        (g.a, g.b)
    }
}

/// (a, b) ↦ (a‖b, a‖−b). The result is re-verified.
pub fn golay_double(g: &GolayPair) -> GolayPair {
    GolayPair::new(g.a.concat(&g.b), g.a.concat(&g.b.negate())).expect("doubling preserves complementarity")
}

/// Doubles `seed` until its length exceeds `max_len`, returning every pair
/// along the way (the seed included).
pub fn doubling_chain(seed: &GolayPair, max_len: usize) -> Vec<GolayPair> {
    let mut out = vec![seed.clone()];
    while out.last().expect("nonempty").len() * 2 <= max_len {
        let next = golay_double(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubling_from_length_one() {
        let g = GolayPair::length_two();
        assert_eq!(g.a().to_string(), "++");
        assert_eq!(g.b().to_string(), "+-");
        let lens: Vec<usize> = doubling_chain(&g, 50).iter().map(GolayPair::len).collect();
        assert_eq!(lens, vec![2, 4, 8, 16, 32]);
    }

    #[test]
    fn rejects_non_complementary() {
        let a: BinarySequence = "++".parse().unwrap();
        assert!(GolayPair::new(a.clone(), a).is_err());
    }
}
