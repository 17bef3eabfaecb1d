//! Compositional constructions of complementary families.

pub mod acs4;
pub mod base;
pub mod golay;

pub use acs4::{acs4_catalog, acs4_from_bases, Acs4Entry, ACS4_MAX_LEN};
pub use base::{base_to_acs4, verify_base, BaseReport, BaseSequenceQuad};
pub use golay::{doubling_chain, golay_double, GolayPair};

use crate::error::{Error, Result};
use crate::seqcore::{is_pcs, SequenceFamily};

/// Concatenates the member lists of two periodic complementary families of
/// the same length. Both inputs and the output are checked.
pub fn union_families(f: &SequenceFamily, g: &SequenceFamily) -> Result<SequenceFamily> {
    if f.length() != g.length() {
        return Err(Error::LengthMismatch {
            expected: f.length(),
            found: g.length(),
        });
    }
    for x in [f, g] {
        if let Some(off) = is_pcs(x).first_offender() {
            return Err(Error::NotPcs {
                shift: off.shift,
                residual: off.residual,
            });
        }
    }
    let mut members = f.members().to_vec();
    members.extend_from_slice(g.members());
    let out = SequenceFamily::new(members)?;
    if let Some(off) = is_pcs(&out).first_offender() {
        return Err(Error::NotPcs {
            shift: off.shift,
            residual: off.residual,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(lines: &[&str]) -> SequenceFamily {
        SequenceFamily::new(lines.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn union_doubles_a_witness() {
        let f = fam(&["+++-"]);
        let u = union_families(&f, &f).unwrap();
        assert_eq!(u.size(), 2);
        assert!(is_pcs(&u).holds);
    }

    #[test]
    fn union_rejects_bad_inputs() {
        assert!(matches!(
            union_families(&fam(&["+++-"]), &fam(&["++", "+-"])),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            union_families(&fam(&["+++-"]), &fam(&["++++"])),
            Err(Error::NotPcs { .. })
        ));
    }
}
