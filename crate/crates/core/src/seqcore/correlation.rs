//! Periodic and aperiodic autocorrelation.
//!
//! All values are exact integers. For a family of p sequences of length N every
//! correlation sum is bounded by p·N in absolute value, so `i64` cannot
//! overflow for any length that fits in memory.

use serde::{Deserialize, Serialize};

use super::BinarySequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrelationKind {
    Periodic,
    Aperiodic,
}

/// Correlation values indexed by shift; always exactly N entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CorrelationVector {
    pub kind: CorrelationKind,
    pub values: Vec<i64>,
}

impl CorrelationVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at `shift`, or 0 beyond the stored range.
    pub fn at(&self, shift: usize) -> i64 {
        self.values.get(shift).copied().unwrap_or(0)
    }

    /// Entrywise sum; the longer vector determines the length.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.kind, other.kind);
        let n = self.len().max(other.len());
        Self {
            kind: self.kind,
            values: (0..n).map(|i| self.at(i) + other.at(i)).collect(),
        }
    }
}

/// Copies `width` ≤ 64 bits starting at bit `start` of `words`.
#[inline]
fn extract(words: &[u64], start: usize) -> u64 {
    let wi = start / 64;
    let off = start % 64;
    let lo = words.get(wi).copied().unwrap_or(0);
    if off == 0 {
        lo
    } else {
        let hi = words.get(wi + 1).copied().unwrap_or(0);
        (lo >> off) | (hi << (64 - off))
    }
}

/// Bits of `a` followed by a second copy of `a`, so any rotation is a window.
fn doubled(a: &BinarySequence) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0u64; (2 * n).div_ceil(64) + 1];
    for j in 0..n {
        if a.get(j) < 0 {
            out[j / 64] |= 1 << (j % 64);
            out[(j + n) / 64] |= 1 << ((j + n) % 64);
        }
    }
    out
}

/// Periodic autocorrelation via XOR/popcount on the packed representation:
/// pacf[s] = N − 2·#{j : a(j) ≠ a(j+s mod N)}.
pub fn pacf(a: &BinarySequence) -> CorrelationVector {
    let n = a.len();
    let words = a.packed();
    let dbl = doubled(a);
    let full = n / 64;
    let tail = n % 64;
    let tail_mask = if tail == 0 { 0 } else { (1u64 << tail) - 1 };
    let values = (0..n)
        .map(|s| {
            let mut diff = 0u32;
            for (w, &word) in words.iter().enumerate().take(full) {
                diff += (word ^ extract(&dbl, s + 64 * w)).count_ones();
            }
            if tail != 0 {
                diff += ((words[full] ^ extract(&dbl, s + 64 * full)) & tail_mask).count_ones();
            }
            n as i64 - 2 * diff as i64
        })
        .collect();
    CorrelationVector {
        kind: CorrelationKind::Periodic,
        values,
    }
}

/// Periodic autocorrelation straight from the definition, O(N²).
///
/// Kept as the reference for the packed kernel.
pub fn pacf_direct(a: &BinarySequence) -> CorrelationVector {
    let n = a.len();
    let v = a.values();
    let values = (0..n)
        .map(|i| (0..n).map(|j| (v[j] * v[(i + j) % n]) as i64).sum())
        .collect();
    CorrelationVector {
        kind: CorrelationKind::Periodic,
        values,
    }
}

/// Aperiodic autocorrelation: nacf[i] = Σ_{j < N−i} a(j)·a(i+j).
pub fn nacf(a: &BinarySequence) -> CorrelationVector {
    let n = a.len();
    let v = a.values();
    let values = (0..n)
        .map(|i| (0..n - i).map(|j| (v[j] * v[i + j]) as i64).sum())
        .collect();
    CorrelationVector {
        kind: CorrelationKind::Aperiodic,
        values,
    }
}

/// Folds an aperiodic vector into the periodic one: result[i] = φ(i) + φ(N−i).
pub fn pacf_from_nacf(phi: &CorrelationVector) -> CorrelationVector {
    let n = phi.len();
    let values = (0..n)
        .map(|i| {
            if i == 0 {
                phi.values[0]
            } else {
                phi.values[i] + phi.values[n - i]
            }
        })
        .collect();
    CorrelationVector {
        kind: CorrelationKind::Periodic,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn pacf_examples() {
        assert_eq!(pacf(&seq("+++-")).values, vec![4, 0, 0, 0]);
        assert_eq!(pacf(&seq("+")).values, vec![1]);
        assert_eq!(pacf(&seq("+--")).values, vec![3, -1, -1]);
    }

    #[test]
    fn nacf_examples() {
        assert_eq!(nacf(&seq("+++-")).values, vec![4, 1, 0, -1]);
        assert_eq!(nacf(&seq("+")).values, vec![1]);
        assert_eq!(nacf(&seq("+-")).values, vec![2, -1]);
    }

    #[test]
    fn fold_examples() {
        let fold = |v: Vec<i64>| {
            pacf_from_nacf(&CorrelationVector {
                kind: CorrelationKind::Aperiodic,
                values: v,
            })
            .values
        };
        assert_eq!(fold(vec![4, 1, 0, -1]), vec![4, 0, 0, 0]);
        assert_eq!(fold(vec![1]), vec![1]);
        assert_eq!(fold(vec![2, -1]), vec![2, -2]);
    }

    #[test]
    fn packed_kernel_matches_direct_across_word_boundaries() {
        for n in [1usize, 2, 63, 64, 65, 127, 128, 129, 200] {
            let s: String = (0..n)
                .map(|i| if (i * 7 + i / 5) % 3 == 0 { '-' } else { '+' })
                .collect();
            let a = seq(&s);
            assert_eq!(pacf(&a), pacf_direct(&a), "n = {n}");
        }
    }
}
