use serde::{Deserialize, Serialize};

use super::base::{base_to_acs4, BaseSequenceQuad};
use crate::error::{Error, Result};
use crate::seqcore::{is_acs, BinarySequence, SequenceFamily};

/// Largest length for which ACS₄ existence is asserted from base sequences.
pub const ACS4_MAX_LEN: usize = 72;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Acs4Entry {
    /// A verified family plus the steps that produced it.
    Witness {
        family: SequenceFamily,
        derivation: Vec<String>,
    },
    /// Existence asserted from BS(n+1, n) for n ≤ 35 and doubling; no
    /// materialized witness here.
    Cited { reason: String },
}

impl Acs4Entry {
    pub fn witness(&self) -> Option<&SequenceFamily> {
        match self {
            Acs4Entry::Witness { family, .. } => Some(family),
            Acs4Entry::Cited { .. } => None,
        }
    }
}

fn length_one() -> SequenceFamily {
    let plus = BinarySequence::all_plus(1).expect("length 1");
    SequenceFamily::new(vec![plus.clone(), plus.clone(), plus, "-".parse().expect("literal")]).expect("equal lengths")
}

fn derive(n: usize, bases: &[BaseSequenceQuad], steps: &mut Vec<String>) -> Option<SequenceFamily> {
    if n == 1 {
        steps.push("length-1 quadruple (+;+;+;-)".into());
        return Some(length_one());
    }
    if let Some(q) = bases.iter().find(|q| q.m() + q.n() == n) {
        if let Ok(f) = base_to_acs4(q) {
            steps.push(format!("base sequences BS({},{}) -> ACS4^{n}", q.m(), q.n()));
            return Some(f);
        }
    }
    if n.is_multiple_of(2) {
        let half = derive(n / 2, bases, steps)?;
        let quad = BaseSequenceQuad::from_acs4(&half).ok()?;
        let f = base_to_acs4(&quad).ok()?;
        steps.push(format!("ACS4^{} = BS({h},{h}) -> ACS4^{n}", n / 2, h = n / 2));
        return Some(f);
    }
    None
}

/// ACS₄ of length `n` built from the supplied base sequences and doubling, or
/// a cited existence fact when no derivation reaches `n`.
pub fn acs4_from_bases(n: usize, bases: &[BaseSequenceQuad]) -> Result<Acs4Entry> {
    if !(1..=ACS4_MAX_LEN).contains(&n) {
        return Err(Error::OutOfRange {
            what: "ACS4 length",
            value: n,
            min: 1,
            max: ACS4_MAX_LEN,
        });
    }
    let mut steps = Vec::new();
    match derive(n, bases, &mut steps) {
        Some(family) => {
            if let Some(off) = is_acs(&family).first_offender() {
                return Err(Error::InvalidBase(format!(
                    "derived ACS4^{n} fails at shift {}",
                    off.shift
                )));
            }
            Ok(Acs4Entry::Witness {
                family,
                derivation: steps,
            })
        }
        None => Ok(Acs4Entry::Cited {
            reason: format!(
                "ACS4^{n} exists: base sequences BS(k+1,k) exist for k <= 35 and BS(N,N) -> ACS4^2N covers all N <= {ACS4_MAX_LEN}; no materialized derivation reaches {n}"
            ),
        }),
    }
}

/// [`acs4_from_bases`] over the base sequences shipped with the catalog.
pub fn acs4_catalog(n: usize) -> Result<Acs4Entry> {
    let bases = crate::catalog::assets::embedded_base_sequences()?;
    acs4_from_bases(n, &bases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::base::verify_base;

    #[test]
    fn small_lengths_without_assets() {
        let one = acs4_from_bases(1, &[]).unwrap();
        let f = one.witness().unwrap();
        assert_eq!(f.size(), 4);
        assert_eq!(f.length(), 1);

        let two = acs4_from_bases(2, &[]).unwrap();
        let q: BaseSequenceQuad = BaseSequenceQuad::from_acs4(f).unwrap();
        assert!(verify_base(&q).holds);
        assert_eq!(two.witness().unwrap(), &base_to_acs4(&q).unwrap());

        assert!(matches!(acs4_from_bases(3, &[]).unwrap(), Acs4Entry::Cited { .. }));
        assert!(acs4_from_bases(0, &[]).is_err());
        assert!(acs4_from_bases(73, &[]).is_err());
    }
}
