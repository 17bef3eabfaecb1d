use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Candidate SDS parameters (N; k₁,…,k_p; λ), block sizes sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParameterSet {
    pub n: usize,
    pub k: Vec<usize>,
    pub lambda: u64,
}

impl ParameterSet {
    pub fn new(n: usize, mut k: Vec<usize>, lambda: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Degenerate(0));
        }
        if k.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(&bad) = k.iter().find(|&&ki| ki > n) {
            return Err(Error::OutOfRange {
                what: "block size",
                value: bad,
                min: 0,
                max: n,
            });
        }
        k.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { n, k, lambda })
    }

    pub fn p(&self) -> usize {
        self.k.len()
    }

    pub fn k_sum(&self) -> u64 {
        self.k.iter().map(|&k| k as u64).sum()
    }

    /// 4(k₁+…+k_p − λ) = pN.
    pub fn satisfies_linear(&self) -> bool {
        4 * (self.k_sum() as i128 - self.lambda as i128) == (self.p() * self.n) as i128
    }

    /// pN = Σ (N − 2kᵢ)².
    pub fn satisfies_quadratic(&self) -> bool {
        let n = self.n as i128;
        let rhs: i128 = self.k.iter().map(|&k| (n - 2 * k as i128).pow(2)).sum();
        self.p() as i128 * n == rhs
    }

    /// λ(N − 1) = Σ kᵢ(kᵢ − 1). Undefined for N = 1.
    pub fn satisfies_counting(&self) -> Result<bool> {
        if self.n < 2 {
            return Err(Error::Degenerate(self.n));
        }
        let lhs = self.lambda as u128 * (self.n as u128 - 1);
        let rhs: u128 = self
            .k
            .iter()
            .map(|&k| (k as u128) * (k as u128).saturating_sub(1))
            .sum();
        Ok(lhs == rhs)
    }

    /// All three identities. For N = 1 there are no nonzero differences and only
    /// the sum-of-squares identity carries content.
    pub fn is_feasible(&self) -> bool {
        if self.n == 1 {
            return self.satisfies_quadratic();
        }
        self.satisfies_linear() && self.satisfies_quadratic() && self.satisfies_counting().unwrap_or(false)
    }
}

pub fn check_linear_constraint(ps: &ParameterSet) -> bool {
    ps.satisfies_linear()
}

pub fn check_quadratic_constraint(ps: &ParameterSet) -> bool {
    ps.satisfies_quadratic()
}

pub fn check_counting_constraint(ps: &ParameterSet) -> Result<bool> {
    ps.satisfies_counting()
}

/// Every (k₁ ≥ … ≥ k_p, λ) passing the three identities, in ascending order.
///
/// λ is pinned by the linear identity, so only the k-tuples are scanned. For
/// N = 1 every tuple is returned with λ = 0.
pub fn enumerate_parameter_sets(p: usize, n: usize) -> Vec<ParameterSet> {
    let mut out = Vec::new();
    if p == 0 || n == 0 {
        return out;
    }
    let mut k = Vec::with_capacity(p);
    collect_tuples(p, n, n, &mut k, &mut |k: &[usize]| {
        let lambda = if n == 1 {
            0
        } else {
            if !(p * n).is_multiple_of(4) {
                return;
            }
            let sum: usize = k.iter().sum();
            match sum.checked_sub(p * n / 4) {
                Some(l) => l as u64,
                None => return,
            }
        };
        let ps = ParameterSet {
            n,
            k: k.to_vec(),
            lambda,
        };
        if ps.is_feasible() {
            out.push(ps);
        }
    });
    out.sort();
    out
}

fn collect_tuples(p: usize, n: usize, max: usize, k: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if k.len() == p {
        emit(k);
        return;
    }
    for v in 0..=max.min(n) {
        k.push(v);
        collect_tuples(p, n, v, k, emit);
        k.pop();
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.n)?;
        for (i, k) in self.k.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ";{})", self.lambda)
    }
}

impl FromStr for ParameterSet {
    type Err = Error;

    /// Accepts `(36;15,15,15;18)` or `36;15,15,15;18`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(1, format!("malformed parameter set {s:?}"));
        let t = s.trim();
        let body = match (t.strip_prefix('('), t.ends_with(')')) {
            (Some(inner), true) => &inner[..inner.len() - 1],
            (None, false) => t,
            _ => return Err(bad()),
        };
        let parts: Vec<&str> = body.split(';').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: usize = parts[0].parse().map_err(|_| bad())?;
        let k = parts[1]
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let lambda: u64 = parts[2].parse().map_err(|_| bad())?;
        Self::new(n, k, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> ParameterSet {
        s.parse().unwrap()
    }

    #[test]
    fn unbalanced_parentheses_rejected() {
        assert!("(36;15,15,15;18".parse::<ParameterSet>().is_err());
        assert!("36;15,15,15;18)".parse::<ParameterSet>().is_err());
        assert_eq!(ps("36;15,15,15;18"), ps("(36;15,15,15;18)"));
    }

    #[test]
    fn linear_examples() {
        assert!(check_linear_constraint(&ps("(36;15,15,15;18)")));
        assert!(check_linear_constraint(&ps("(4;3;2)")));
        assert!(!check_linear_constraint(&ps("(20;10,10,10;20)")));
    }

    #[test]
    fn quadratic_examples() {
        assert!(check_quadratic_constraint(&ps("(36;15,15,15;18)")));
        assert!(check_quadratic_constraint(&ps("(40;19,18,15;22)")));
        for k1 in 0..=6 {
            for k2 in 0..=6 {
                let p = ParameterSet::new(6, vec![k1, k2], 0).unwrap();
                assert!(!check_quadratic_constraint(&p), "{p}");
            }
        }
    }

    #[test]
    fn counting_examples() {
        assert!(check_counting_constraint(&ps("(40;19,18,15;22)")).unwrap());
        assert!(check_counting_constraint(&ps("(4;3;2)")).unwrap());
        assert!(!check_counting_constraint(&ps("(36;15,15,15;17)")).unwrap());
        assert!(check_counting_constraint(&ps("(1;1;0)")).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_parameter_sets(1, 4), vec![ps("(4;1;0)"), ps("(4;3;2)")]);
        assert!(enumerate_parameter_sets(2, 6).is_empty());
        assert!(enumerate_parameter_sets(3, 40).contains(&ps("(40;19,18,15;22)")));
    }

    #[test]
    fn parse_and_display() {
        let p = ps("36; 15,15 ,15 ;18");
        assert_eq!(p.to_string(), "(36;15,15,15;18)");
        assert_eq!(ps("(5;1,3;0)").k, vec![3, 1]);
        assert!("(5;1,3)".parse::<ParameterSet>().is_err());
        assert!("(5;6;0)".parse::<ParameterSet>().is_err());
    }
}
