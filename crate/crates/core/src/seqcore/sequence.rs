use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A ±1 sequence of length N ≥ 1.
///
/// Entries are kept twice: as `i8` signs for direct arithmetic and as a
/// bit-packed word vector (bit set ⇔ entry is −1) for the popcount kernels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    signs: Vec<i8>,
    bits: Vec<u64>,
}

fn pack(signs: &[i8]) -> Vec<u64> {
    let mut bits = vec![0u64; signs.len().div_ceil(64)];
    for (i, &s) in signs.iter().enumerate() {
        if s < 0 {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

impl BinarySequence {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, &v)) = values.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(Error::InvalidEntry { index, value: v as i64 });
        }
        let bits = pack(&values);
        Ok(Self { signs: values, bits })
    }

    /// Builds a sequence from integer values, rejecting anything but ±1.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        let mut signs = Vec::with_capacity(values.len());
        for (index, &v) in values.iter().enumerate() {
            match v {
                1 => signs.push(1),
                -1 => signs.push(-1),
                _ => return Err(Error::InvalidEntry { index, value: v }),
            }
        }
        Self::new(signs)
    }

    /// Builds a sequence of length `n` whose −1 positions are `minus`.
    pub fn from_minus_positions(n: usize, minus: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut signs = vec![1i8; n];
        for j in minus {
            if j >= n {
                return Err(Error::ResidueOutOfRange { value: j, modulus: n });
            }
            signs[j] = -1;
        }
        Self::new(signs)
    }

    /// Builds a sequence from the low `n` bits of `mask` (bit set ⇔ −1).
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 64 {
            return Err(Error::OutOfRange {
                what: "mask length",
                value: n,
                min: 1,
                max: 64,
            });
        }
        Self::from_minus_positions(n, (0..n).filter(|&j| mask >> j & 1 == 1))
    }

    pub fn all_plus(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    /// Always false: sequences have length ≥ 1.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> i8 {
        self.signs[i]
    }

    #[inline]
    pub fn values(&self) -> &[i8] {
        &self.signs
    }

    #[inline]
    pub fn packed(&self) -> &[u64] {
        &self.bits
    }

    /// Positions holding −1.
    pub fn minus_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.signs[j] < 0).collect()
    }

    /// Number of −1 entries.
    pub fn minus_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Σ a(j).
    pub fn sum(&self) -> i64 {
        self.len() as i64 - 2 * self.minus_count() as i64
    }

    pub fn negate(&self) -> Self {
        Self::new(self.signs.iter().map(|&s| -s).collect()).expect("negation preserves ±1")
    }

    pub fn reverse(&self) -> Self {
        Self::new(self.signs.iter().rev().copied().collect()).expect("reversal preserves ±1")
    }

    /// Rotation: result(j) = a((j − s) mod N), so `+++-` shifted by 1 is `-+++`.
    pub fn cyclic_shift(&self, s: usize) -> Result<Self> {
        let n = self.len();
        if s >= n {
            return Err(Error::ShiftOutOfRange { shift: s, len: n });
        }
        let mut out = Vec::with_capacity(n);
        out.extend_from_slice(&self.signs[n - s..]);
        out.extend_from_slice(&self.signs[..n - s]);
        Self::new(out)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.signs.clone();
        v.extend_from_slice(&other.signs);
        Self::new(v).expect("concatenation preserves ±1")
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '+' => signs.push(1),
                '-' => signs.push(-1),
                other => {
                    return Err(Error::parse(
                        1,
                        format!("unexpected character {other:?} at column {}", i + 1),
                    ))
                }
            }
        }
        Self::new(signs)
    }
}

impl Serialize for BinarySequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn transformations() {
        assert_eq!(seq("+-").negate(), seq("-+"));
        assert_eq!(seq("+++-").cyclic_shift(1).unwrap(), seq("-+++"));
        assert_eq!(seq("+--").reverse(), seq("--+"));
        assert!(seq("+-").cyclic_shift(2).is_err());
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(BinarySequence::new(vec![]).is_err());
        assert!(BinarySequence::new(vec![1, 0]).is_err());
        assert!(BinarySequence::from_ints(&[1, -1, 2]).is_err());
        assert!("+x-".parse::<BinarySequence>().is_err());
    }

    #[test]
    fn packed_bits_track_minus_entries() {
        let s: String = (0..130).map(|i| if i % 3 == 0 { '-' } else { '+' }).collect();
        let a = seq(&s);
        assert_eq!(a.packed().len(), 3);
        assert_eq!(a.minus_count(), 44);
        assert_eq!(a.sum(), 130 - 88);
        assert_eq!(
            BinarySequence::from_minus_positions(130, a.minus_positions()).unwrap(),
            a
        );
    }

    #[test]
    fn mask_round_trip() {
        let a = BinarySequence::from_mask(4, 0b1000).unwrap();
        assert_eq!(a, seq("+++-"));
    }
}
