//! Canonical representatives of SDS equivalence classes.
//!
//! The group acts by translating each subset independently and by
//! multiplying all subsets by a common unit of Z_N. Subset order is not
//! significant. Complementation is not part of the group.

use std::cmp::Reverse;

use super::family::SdsFamily;
use super::subset::ResidueSubset;

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Units of Z_N in increasing order (`[0]` for N = 1, where 0 ≡ 1).
pub fn units(n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

type Key = Vec<(Reverse<usize>, Vec<usize>)>;

fn normalized(subsets: impl Iterator<Item = ResidueSubset>) -> (Key, Vec<ResidueSubset>) {
    let mut v: Vec<ResidueSubset> = subsets.map(|x| x.least_translate()).collect();
    v.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.elements().cmp(b.elements())));
    let key = v.iter().map(|x| (Reverse(x.len()), x.elements().to_vec())).collect();
    (key, v)
}

/// Subsets ordered by size (descending) then lexicographically, each at its
/// least translate, minimized over all unit multipliers. Idempotent; λ is
/// carried through unchanged.
pub fn canonicalize(f: &SdsFamily) -> SdsFamily {
    let n = f.modulus();
    let best = units(n)
        .into_iter()
        .map(|u| normalized(f.subsets().iter().map(|x| if n == 1 { x.clone() } else { x.scale(u) })))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("Z_N has at least one unit");
    SdsFamily::new(n, best.1, f.lambda()).expect("same modulus and subset count")
}

/// Whether two families lie in the same class under the canonicalization group.
pub fn equivalent(a: &SdsFamily, b: &SdsFamily) -> bool {
    a.modulus() == b.modulus() && a.p() == b.p() && canonicalize(a).subsets() == canonicalize(b).subsets()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_of_small_moduli() {
        assert_eq!(units(1), vec![0]);
        assert_eq!(units(2), vec![1]);
        assert_eq!(units(12), vec![1, 5, 7, 11]);
    }

    #[test]
    fn canonical_examples() {
        let f = SdsFamily::from_sets(7, vec![vec![1, 2, 4]], 1).unwrap();
        assert_eq!(canonicalize(&f).sets(), vec![vec![0, 1, 3]]);
        let e = SdsFamily::from_sets(5, vec![vec![]], 0).unwrap();
        assert_eq!(canonicalize(&e), e);
    }

    #[test]
    fn orders_subsets_by_size_then_lex() {
        let f = SdsFamily::from_sets(5, vec![vec![2], vec![1, 2], vec![]], 0).unwrap();
        assert_eq!(canonicalize(&f).sets(), vec![vec![0, 1], vec![0], vec![]]);
    }

    #[test]
    fn units_relate_classes() {
        // {0,1,3} and its image under multiplication by -1 are equivalent.
        let a = SdsFamily::from_sets(7, vec![vec![0, 1, 3]], 1).unwrap();
        let b = SdsFamily::from_sets(7, vec![vec![0, 6, 4]], 1).unwrap();
        assert!(equivalent(&a, &b));
        let c = SdsFamily::from_sets(7, vec![vec![0, 1, 2]], 1).unwrap();
        assert!(!equivalent(&a, &c));
    }
}
