use super::family::{verify_sds, SdsFamily};
use super::subset::ResidueSubset;
use crate::error::{Error, Result};
use crate::seqcore::{is_pcs, BinarySequence, SequenceFamily};

/// aᵢ(j) = −1 iff j ∈ Xᵢ.
///
/// The family must verify and, for N > 1, satisfy 4(Σk − λ) = pN; without the
/// order condition the sequences are not complementary.
pub fn sds_to_pcs(f: &SdsFamily) -> Result<SequenceFamily> {
    let report = verify_sds(f);
    if !report.holds {
        let m = report.first_mismatch.unwrap_or(0);
        return Err(Error::NotSds(format!(
            "difference {m} occurs {} times, declared lambda {}",
            report.profile.get(m.wrapping_sub(1)).copied().unwrap_or(0),
            f.lambda()
        )));
    }
    let n = f.modulus();
    if n > 1 && !report.feasibility.linear {
        let ps = f.parameter_set();
        return Err(Error::OrderCondition {
            lhs: 4 * (ps.k_sum() as i64 - ps.lambda as i64),
            rhs: (ps.p() * n) as i64,
        });
    }
    let members = f
        .subsets()
        .iter()
        .map(|x| BinarySequence::from_minus_positions(n, x.elements().iter().copied()))
        .collect::<Result<Vec<_>>>()?;
    SequenceFamily::new(members)
}

/// Xᵢ = {j : aᵢ(j) = −1}, with λ = Σk − pN/4.
pub fn pcs_to_sds(f: &SequenceFamily) -> Result<SdsFamily> {
    let n = f.length();
    if n < 2 {
        return Err(Error::Degenerate(n));
    }
    let report = is_pcs(f);
    if let Some(off) = report.first_offender() {
        return Err(Error::NotPcs {
            shift: off.shift,
            residual: off.residual,
        });
    }
    let subsets: Vec<ResidueSubset> = f
        .members()
        .iter()
        .map(|a| ResidueSubset::from_sorted_unchecked(n, a.minus_positions()))
        .collect();
    let k_sum: usize = subsets.iter().map(ResidueSubset::len).sum();
    let pn = f.size() * n;
    // A PCS with N > 1 always has 4 | pN and Σk ≥ pN/4.
    if !pn.is_multiple_of(4) || 4 * k_sum < pn {
        return Err(Error::OrderCondition {
            lhs: 4 * k_sum as i64,
            rhs: pn as i64,
        });
    }
    let sds = SdsFamily::new(n, subsets, (k_sum - pn / 4) as u64)?;
    let check = verify_sds(&sds);
    if !check.holds {
        return Err(Error::NotSds(format!(
            "extracted sets fail at difference {:?}",
            check.first_mismatch
        )));
    }
    Ok(sds)
}
