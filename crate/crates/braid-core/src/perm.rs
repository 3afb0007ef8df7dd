//! Permutations on `{1..n}`, stored as 0-based image tables.

use crate::error::{BraidError, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A bijection on `{1..n}`. Internally points are `0..n`; the public
/// serialization uses 1-based image tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from a 0-based image table, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(BraidError::InvalidPermutation { size: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from a 1-based image table (values in `1..=n`).
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut table = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(BraidError::InvalidPermutation { size: n });
            }
            table.push(x - 1);
        }
        Permutation::from_images(table)
    }

    /// The transposition swapping 0-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// The order-reversing permutation `x -> n-1-x`; the permutation of the
    /// half twist.
    pub fn order_reversing(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`,
    /// so `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Swap the table entries at 0-based positions `i` and `i+1`;
    /// equivalent to composing with the transposition on the right.
    pub(crate) fn swap_entries(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Swap the values `i` and `i+1` wherever they occur; equivalent to
    /// composing with the transposition on the left.
    pub(crate) fn swap_values(&mut self, i: usize) {
        let a = self.position_of(i);
        let b = self.position_of(i + 1);
        self.images.swap(a, b);
    }

    fn position_of(&self, value: usize) -> usize {
        self.images.iter().position(|&x| x == value).unwrap()
    }

    /// Number of inversions; equals the letter count of the associated
    /// permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descent set as a bitmask: bit `i` set iff `p(i) > p(i+1)`.
    pub(crate) fn descent_mask(&self) -> u64 {
        debug_assert!(self.images.len() <= 64);
        let mut mask = 0u64;
        for i in 0..self.images.len().saturating_sub(1) {
            if self.images[i] > self.images[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Cycle decomposition over 0-based points, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Multiset of cycle lengths, sorted; a conjugacy invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lengths.sort_unstable();
        lengths
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let table = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images_one_based(&table).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let t1 = Permutation::transposition(3, 0, 1);
        let t2 = Permutation::transposition(3, 1, 2);
        let p = t1.compose(&t2);
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let p = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn inversions_of_order_reversing() {
        assert_eq!(Permutation::order_reversing(4).inversions(), 6);
        assert_eq!(Permutation::identity(5).inversions(), 0);
    }

    #[test]
    fn cycle_type_is_sorted() {
        let p = Permutation::from_images(vec![1, 0, 2, 4, 3]).unwrap();
        assert_eq!(p.cycle_type(), vec![1, 2, 2]);
    }
}
