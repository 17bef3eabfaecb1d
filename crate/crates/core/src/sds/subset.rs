use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of Z_N, stored as a strictly increasing element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueSubset {
    modulus: usize,
    elements: Vec<usize>,
}

impl ResidueSubset {
    /// Accepts elements in any order; rejects duplicates and out-of-range values.
    pub fn new(modulus: usize, mut elements: Vec<usize>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Degenerate(0));
        }
        if let Some(&value) = elements.iter().find(|&&e| e >= modulus) {
            return Err(Error::ResidueOutOfRange { value, modulus });
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateResidue { value: w[0] });
        }
        Ok(Self { modulus, elements })
    }

    pub fn empty(modulus: usize) -> Self {
        Self {
            modulus,
            elements: Vec::new(),
        }
    }

    pub fn full(modulus: usize) -> Self {
        Self {
            modulus,
            elements: (0..modulus).collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(modulus: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|&e| e < modulus));
        Self { modulus, elements }
    }

    /// Elements of the low `modulus` bits of `mask`.
    pub fn from_mask(modulus: usize, mask: u64) -> Self {
        Self::from_sorted_unchecked(modulus, (0..modulus).filter(|&j| mask >> j & 1 == 1).collect())
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Subset size k.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn to_mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &e| m | 1 << e)
    }

    /// ν(X, m): ordered pairs (i, j) in X×X with i − j ≡ m (mod N).
    pub fn nu(&self, m: usize) -> Result<usize> {
        let n = self.modulus;
        if m >= n {
            return Err(Error::ResidueOutOfRange { value: m, modulus: n });
        }
        Ok(self.elements.iter().filter(|&&j| self.contains((j + m) % n)).count())
    }

    /// X + t (mod N).
    pub fn translate(&self, t: usize) -> Self {
        let n = self.modulus;
        let mut e: Vec<usize> = self.elements.iter().map(|&x| (x + t) % n).collect();
        e.sort_unstable();
        Self::from_sorted_unchecked(n, e)
    }

    /// u·X (mod N); a bijection when gcd(u, N) = 1.
    pub fn scale(&self, u: usize) -> Self {
        let n = self.modulus;
        let mut e: Vec<usize> = self.elements.iter().map(|&x| (x * u) % n).collect();
        e.sort_unstable();
        e.dedup();
        Self::from_sorted_unchecked(n, e)
    }

    /// Lexicographically least translate. Nonempty results contain 0.
    pub fn least_translate(&self) -> Self {
        let n = self.modulus;
        self.elements
            .iter()
            .map(|&x| self.translate(n - x))
            .min()
            .unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for ResidueSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
