//! Braid words: free words in the Artin generators of `B_n`.
//!
//! A letter `j > 0` denotes the generator `sigma_j`, a letter `j < 0` its
//! inverse. Words multiply by concatenation. The composition convention,
//! fixed once for the whole crate, is that the *rightmost* factor acts
//! first: `pi(uv) = pi(u) . pi(v)` as functions on positions, and the
//! paper's cycle formula for the rotation braids comes out literally.
//! Word equality is free-group equality only; group equality is decided by
//! the `garside` module.

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    #[serde(rename = "n")]
    strands: usize,
    #[serde(rename = "word")]
    letters: Vec<i32>,
}

impl BraidWord {
    /// The identity braid on `n` strands.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::InvalidParameters(
                "strand count must be at least 1".into(),
            ));
        }
        Ok(BraidWord {
            strands: n,
            letters: Vec::new(),
        })
    }

    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        let mut word = BraidWord::identity(n)?;
        for &l in &letters {
            word.check_letter(l)?;
        }
        word.letters = letters;
        Ok(word)
    }

    fn check_letter(&self, letter: i32) -> Result<()> {
        if letter == 0 {
            return Err(BraidError::ZeroLetter);
        }
        let idx = letter.unsigned_abs() as usize;
        if idx >= self.strands {
            return Err(BraidError::LetterOutOfRange {
                letter: letter as i64,
                strands: self.strands,
            });
        }
        Ok(())
    }

    /// Parse whitespace/comma-separated signed generator indices.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let letter: i32 = token
                .parse()
                .map_err(|_| BraidError::MalformedToken(token.to_string()))?;
            letters.push(letter);
        }
        BraidWord::new(n, letters)
    }

    /// Inverse of `parse`: space-separated letters, empty string for the
    /// identity.
    pub fn format(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty_word(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs; the abelianization homomorphism, a conjugacy
    /// invariant.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `self` raised to an integer power, as a word.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancel adjacent inverse pairs until none remain. This is the only
    /// rewriting words receive eagerly; everything else goes through
    /// normal forms.
    pub fn free_reduced(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Reindex into a larger group: `sigma_j -> sigma_{j+offset}`, viewing
    /// the word in `B_new_n`.
    pub fn shifted(&self, offset: usize, new_n: usize) -> Result<BraidWord> {
        if self.strands + offset > new_n {
            return Err(BraidError::InvalidParameters(format!(
                "cannot shift a {}-strand word by {} into B_{}",
                self.strands, offset, new_n
            )));
        }
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                let idx = l.unsigned_abs() as usize + offset;
                if l > 0 {
                    idx as i32
                } else {
                    -(idx as i32)
                }
            })
            .collect();
        BraidWord::new(new_n, letters)
    }

    /// The induced permutation on `{1..n}` (0-based internally). Under the
    /// crate convention the table is built by scanning the word left to
    /// right and swapping table entries.
    pub fn permutation(&self) -> Permutation {
        let mut table = Permutation::identity(self.strands);
        for &l in &self.letters {
            let j = l.unsigned_abs() as usize - 1;
            table.swap_entries(j);
        }
        table
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", self.format())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self.format())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips_through_format() {
        let w = BraidWord::parse("1 1 2 2 2 2", 4).unwrap();
        assert_eq!(w.letters(), &[1, 1, 2, 2, 2, 2]);
        assert_eq!(BraidWord::parse(&w.format(), 4).unwrap(), w);
        assert_eq!(w.exponent_sum(), 6);
    }

    #[test]
    fn parse_accepts_commas_and_empty() {
        let w = BraidWord::parse("-2, 1", 3).unwrap();
        assert_eq!(w.letters(), &[-2, 1]);
        let id = BraidWord::parse("", 5).unwrap();
        assert!(id.is_empty_word());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            BraidWord::parse("0", 3),
            Err(BraidError::ZeroLetter)
        ));
        assert!(matches!(
            BraidWord::parse("3", 3),
            Err(BraidError::LetterOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse("x", 3),
            Err(BraidError::MalformedToken(_))
        ));
        // n = 1 admits no letters at all
        assert!(BraidWord::parse("1", 1).is_err());
    }

    #[test]
    fn single_crossing_is_a_transposition() {
        let w = BraidWord::parse("1", 3).unwrap();
        let p = w.permutation();
        assert_eq!(p.images_one_based(), vec![2, 1, 3]);
    }

    #[test]
    fn identity_word_gives_identity_permutation() {
        let w = BraidWord::identity(4).unwrap();
        assert!(w.permutation().is_identity());
    }

    #[test]
    fn rightmost_letter_acts_first() {
        // mu_{3,1} = sigma_3 sigma_2 sigma_1 sigma_1 must induce the cycle
        // 2 -> 4 -> 3 -> 2 fixing 1.
        let w = BraidWord::parse("3 2 1 1", 4).unwrap();
        let p = w.permutation();
        assert_eq!(p.images_one_based(), vec![1, 4, 2, 3]);
    }

    #[test]
    fn permutation_is_a_homomorphism() {
        let u = BraidWord::parse("1 2 -3 2", 5).unwrap();
        let v = BraidWord::parse("4 -1 2", 5).unwrap();
        let uv = u.concat(&v).unwrap();
        assert_eq!(uv.permutation(), u.permutation().compose(&v.permutation()));
    }

    #[test]
    fn free_reduction_cancels_adjacent_inverses() {
        let w = BraidWord::parse("1 2 -2 -1 3", 5).unwrap();
        assert_eq!(w.free_reduced().letters(), &[3]);
    }

    #[test]
    fn inverse_reverses_and_negates() {
        let w = BraidWord::parse("1 -2 3", 4).unwrap();
        assert_eq!(w.inverse().letters(), &[-3, 2, -1]);
        assert!(w.concat(&w.inverse()).unwrap().free_reduced().is_empty_word());
    }

    #[test]
    fn shift_reindexes_letters() {
        let w = BraidWord::parse("1 -2", 3).unwrap();
        let s = w.shifted(2, 6).unwrap();
        assert_eq!(s.letters(), &[3, -4]);
        assert_eq!(s.strands(), 6);
    }
}
