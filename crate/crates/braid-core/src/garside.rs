//! Garside normal forms and the decision procedures built on them.
//!
//! Every braid word has a unique *left-weighted* form `Delta^inf F_1 .. F_k`
//! where each factor is a permutation braid (a positive braid in which each
//! pair of strands crosses at most once) different from the identity and
//! from `Delta`, and the starting set of each factor is contained in the
//! finishing set of its predecessor. Two words are equal in the braid group
//! iff their normal forms coincide; this is the crate's equality witness.
//!
//! Negative letters are handled by the rewriting
//! `sigma_j^{-1} = Delta^{-1} (Delta sigma_j^{-1})`, whose second factor is
//! a permutation braid, followed by pushing the `Delta` powers to the left
//! through the flip automorphism.

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The half-twist word `sigma_1 (sigma_2 sigma_1) .. (sigma_{n-1} .. sigma_1)`,
/// of length `n(n-1)/2`.
pub fn delta_word(n: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        for j in (1..=k as i32).rev() {
            letters.push(j);
        }
    }
    BraidWord::new(n, letters).expect("half-twist letters are in range")
}

/// Flip automorphism on permutation braids: conjugation by the half twist,
/// `p -> w0 . p . w0`.
fn flip(p: &Permutation) -> Permutation {
    let n = p.size();
    let images: Vec<usize> = (0..n).map(|x| n - 1 - p.apply(n - 1 - x)).collect();
    Permutation::from_images(images).expect("flip of a bijection is a bijection")
}

fn is_half_twist(p: &Permutation) -> bool {
    let n = p.size();
    (0..n).all(|x| p.apply(x) == n - 1 - x)
}

/// Starting set of a permutation braid: the letters `sigma_j` that divide it
/// on the left. These are the descents of the inverse permutation.
pub fn starting_set(p: &Permutation) -> Vec<usize> {
    mask_to_letters(p.inverse().descent_mask())
}

/// Finishing set of a permutation braid: the letters `sigma_j` that divide
/// it on the right; the descents of the permutation.
pub fn finishing_set(p: &Permutation) -> Vec<usize> {
    mask_to_letters(p.descent_mask())
}

fn mask_to_letters(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

/// Canonical reduced positive word of the permutation braid attached to
/// `p`: insertion-sort order, smallest value bubbled into place first.
/// The word length equals the inversion number of `p`.
pub fn permutation_braid_word(p: &Permutation) -> BraidWord {
    let n = p.size();
    let mut table: Vec<usize> = p.images().to_vec();
    let mut swaps: Vec<i32> = Vec::with_capacity(p.inversions());
    for value in 0..n {
        let mut pos = table.iter().position(|&x| x == value).unwrap();
        while pos > value {
            table.swap(pos - 1, pos);
            swaps.push(pos as i32); // 1-based letter index of the swap
            pos -= 1;
        }
    }
    swaps.reverse();
    BraidWord::new(n, swaps).expect("sorting network letters are in range")
}

/// Left-weighted normal form `Delta^inf F_1 .. F_k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    #[serde(rename = "n")]
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The infimum: the power of `Delta` in front.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// True iff this is exactly `Delta^k`.
    pub fn is_delta_power(&self, k: i64) -> bool {
        self.inf == k && self.factors.is_empty()
    }

    /// Expand the normal form back into a braid word.
    pub fn as_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = delta_word(n);
        let mut word = if self.inf >= 0 {
            delta.pow(self.inf)
        } else {
            delta.inverse().pow(-self.inf)
        };
        for f in &self.factors {
            word = word
                .concat(&permutation_braid_word(f))
                .expect("factor words share the strand count");
        }
        word
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " . {p}")?;
        }
        Ok(())
    }
}

/// Compute the left-weighted normal form of a word.
pub fn normal_form(word: &BraidWord) -> NormalForm {
    let n = word.strands();
    if n == 1 {
        return NormalForm {
            strands: 1,
            inf: 0,
            factors: Vec::new(),
        };
    }
    let w0 = Permutation::order_reversing(n);

    // Convert each letter into a permutation braid, with negative letters
    // contributing one Delta^{-1} each; a factor acquires a flip for every
    // Delta^{-1} that must move past it from the right.
    let mut factors: Vec<Permutation> = Vec::with_capacity(word.letter_count());
    let mut negatives_after = 0usize;
    for &l in word.letters().iter().rev() {
        let j = l.unsigned_abs() as usize - 1;
        let mut p = if l > 0 {
            Permutation::transposition(n, j, j + 1)
        } else {
            let mut q = w0.clone();
            q.swap_entries(j); // w0 composed with the transposition
            q
        };
        if negatives_after % 2 == 1 {
            p = flip(&p);
        }
        if l < 0 {
            negatives_after += 1;
        }
        factors.push(p);
    }
    factors.reverse();
    let inf = -(negatives_after as i64);

    normalize(n, inf, factors)
}

/// Drive the factor list to the left-weighted fixpoint with a worklist of
/// possibly-violated adjacent pairs. Identity and half-twist factors are
/// left in place during the loop: left-weighting drains identities to the
/// back and full factors to the front on its own, so a single linear
/// post-pass absorbs the leading half twists into the infimum and drops
/// the trailing identities, with no mid-run flipping.
fn normalize(n: usize, mut inf: i64, mut factors: Vec<Permutation>) -> NormalForm {
    use std::collections::VecDeque;

    let count = factors.len();
    if count >= 2 {
        let mut inverses: Vec<Permutation> = factors.iter().map(|p| p.inverse()).collect();
        let mut queued = vec![true; count - 1];
        let mut dirty: VecDeque<usize> = (0..count - 1).rev().collect();
        while let Some(i) = dirty.pop_front() {
            queued[i] = false;
            if !left_weight_pair(&mut factors, &mut inverses, i) {
                continue;
            }
            if i > 0 && !queued[i - 1] {
                queued[i - 1] = true;
                dirty.push_back(i - 1);
            }
            if i + 1 < count - 1 && !queued[i + 1] {
                queued[i + 1] = true;
                dirty.push_back(i + 1);
            }
        }
    }

    let full_prefix = factors.iter().take_while(|p| is_half_twist(p)).count();
    inf += full_prefix as i64;
    let factors: Vec<Permutation> = factors
        .into_iter()
        .skip(full_prefix)
        .filter(|p| !p.is_identity())
        .collect();
    debug_assert!(
        !factors.iter().any(is_half_twist),
        "half twists must have drained to the front at the fixpoint"
    );
    NormalForm {
        strands: n,
        inf,
        factors,
    }
}

/// Make the adjacent pair `(factors[i], factors[i+1])` left-weighted by
/// moving letters from the right factor into the left one, keeping the
/// cached inverses in step. Returns whether anything moved.
fn left_weight_pair(
    factors: &mut [Permutation],
    inverses: &mut [Permutation],
    i: usize,
) -> bool {
    let (left, right) = factors.split_at_mut(i + 1);
    let a = &mut left[i];
    let b = &mut right[0];
    let (left_inv, right_inv) = inverses.split_at_mut(i + 1);
    let a_inv = &mut left_inv[i];
    let b_inv = &mut right_inv[0];
    let mut moved = false;
    loop {
        let available = b_inv.descent_mask() & !a.descent_mask();
        if available == 0 {
            return moved;
        }
        let j = available.trailing_zeros() as usize;
        a.swap_entries(j); // a <- a . t_j   (append sigma_j)
        a_inv.swap_values(j);
        b.swap_values(j); // b <- t_j . b   (strip sigma_j from the front)
        b_inv.swap_entries(j);
        moved = true;
    }
}

/// Group equality via normal forms.
pub fn equals(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u) == normal_form(v))
}

pub fn is_identity(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}

pub fn commutes(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    equals(&u.concat(v)?, &v.concat(u)?)
}

/// `g a g^{-1}`, as a concatenated word; normalization happens on demand.
pub fn conjugate_by(g: &BraidWord, a: &BraidWord) -> Result<BraidWord> {
    g.concat(a)?.concat(&g.inverse())
}

/// Outcome of the periodicity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Periodicity {
    /// Conjugate to `delta^k`.
    DeltaType { k: i64 },
    /// Conjugate to `epsilon^k`.
    EpsilonType { k: i64 },
    NotPeriodic,
}

impl Periodicity {
    pub fn is_periodic(&self) -> bool {
        !matches!(self, Periodicity::NotPeriodic)
    }
}

/// Decide periodicity. A braid is conjugate to `delta^k` iff `w^n = Delta^{2k}`
/// and to `epsilon^k` iff `w^{n-1} = Delta^{2k}`, by uniqueness of roots up
/// to conjugacy; the exponent sum pins down the only candidate `k` in each
/// case, which makes the procedure total.
pub fn classify_periodic(w: &BraidWord) -> Result<Periodicity> {
    let n = w.strands();
    if n < 2 {
        return Err(BraidError::InvalidParameters(
            "periodicity test requires at least 2 strands".into(),
        ));
    }
    let s = w.exponent_sum();
    let n_i = n as i64;
    if s % (n_i - 1) == 0 {
        let k = s / (n_i - 1);
        if normal_form(&w.pow(n_i)).is_delta_power(2 * k) {
            return Ok(Periodicity::DeltaType { k });
        }
    }
    if s % n_i == 0 {
        let k = s / n_i;
        if normal_form(&w.pow(n_i - 1)).is_delta_power(2 * k) {
            return Ok(Periodicity::EpsilonType { k });
        }
    }
    Ok(Periodicity::NotPeriodic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn delta_word_matches_the_definition() {
        assert_eq!(delta_word(2).letters(), &[1]);
        assert_eq!(delta_word(3).letters(), &[1, 2, 1]);
        assert_eq!(delta_word(4).letters(), &[1, 2, 1, 3, 2, 1]);
        assert_eq!(delta_word(4).letter_count(), 6);
        assert!(is_half_twist(&delta_word(5).permutation()));
    }

    #[test]
    fn identity_and_cancellation() {
        let nf = normal_form(&w("1 -1", 3));
        assert!(nf.is_identity());
        assert!(is_identity(&w("2 1 -1 -2", 4)));
    }

    #[test]
    fn delta_normalizes_to_pure_infimum() {
        let nf = normal_form(&delta_word(4));
        assert_eq!(nf.inf(), 1);
        assert_eq!(nf.canonical_length(), 0);
    }

    #[test]
    fn braid_relations_hold() {
        assert!(equals(&w("1 2 1", 3), &w("2 1 2", 3)).unwrap());
        assert!(equals(&w("1 3", 5), &w("3 1", 5)).unwrap());
        assert!(!equals(&w("1", 3), &w("2", 3)).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(equals(&w("1", 3), &w("1", 4)).is_err());
    }

    #[test]
    fn left_weighted_factors_are_left_weighted() {
        let word = w("2 -1 3 3 2 -2 1 1 -3 2", 5);
        let nf = normal_form(&word);
        for pair in nf.factors().windows(2) {
            let f: std::collections::HashSet<_> = finishing_set(&pair[0]).into_iter().collect();
            for s in starting_set(&pair[1]) {
                assert!(f.contains(&s), "factor pair not left-weighted");
            }
        }
        for p in nf.factors() {
            assert!(!p.is_identity());
            assert!(!is_half_twist(p));
        }
    }

    #[test]
    fn normal_form_round_trips_through_as_word() {
        for text in ["", "1", "-2 1 -1 3", "2 2 2 -1 -1 4 -3"] {
            let word = w(text, 5);
            let nf = normal_form(&word);
            assert!(equals(&nf.as_word(), &word).unwrap());
            assert_eq!(normal_form(&nf.as_word()), nf);
        }
    }

    #[test]
    fn permutation_braid_word_is_reduced_and_correct() {
        let p = Permutation::from_images_one_based(&[3, 2, 1]).unwrap();
        let word = permutation_braid_word(&p);
        assert_eq!(word.letter_count(), p.inversions());
        assert_eq!(word.permutation(), p);

        let id = Permutation::identity(4);
        assert!(permutation_braid_word(&id).is_empty_word());

        let w0 = Permutation::order_reversing(4);
        let word = permutation_braid_word(&w0);
        assert_eq!(word.letter_count(), 6);
        assert!(equals(&word, &delta_word(4)).unwrap());
    }

    #[test]
    fn center_commutes_with_everything() {
        let delta_sq = delta_word(4).pow(2);
        for text in ["1", "3 -2", "1 2 3 1"] {
            assert!(commutes(&delta_sq, &w(text, 4)).unwrap());
        }
    }

    #[test]
    fn conjugation_example_from_the_first_pair() {
        // beta_1 = (s1 s2 s1) alpha_1 (s1 s2 s1)^{-1} with alpha_1 = s1^2 s2^4
        let alpha1 = w("1 1 2 2 2 2", 4);
        let beta1 = w("2 2 1 1 1 1", 4);
        let g = w("1 2 1", 4);
        assert!(equals(&conjugate_by(&g, &alpha1).unwrap(), &beta1).unwrap());
    }

    #[test]
    fn exponent_sum_of_central_square() {
        let n = 5;
        assert_eq!(delta_word(n).pow(2).exponent_sum(), (n * (n - 1)) as i64);
    }

    #[test]
    fn periodicity_of_rotation_powers() {
        // delta_(4)^3
        let delta = w("3 2 1", 4);
        assert_eq!(
            classify_periodic(&delta.pow(3)).unwrap(),
            Periodicity::DeltaType { k: 3 }
        );
        // sigma_1 in B_3: exponent sum 1, neither divisibility holds
        assert_eq!(
            classify_periodic(&w("1", 3)).unwrap(),
            Periodicity::NotPeriodic
        );
        // epsilon_(4)^2 = (delta sigma_1)^2
        let eps = w("3 2 1 1", 4);
        assert_eq!(
            classify_periodic(&eps.pow(2)).unwrap(),
            Periodicity::EpsilonType { k: 2 }
        );
    }

    #[test]
    fn fundamental_identity_small() {
        // delta^n = Delta^2 = epsilon^{n-1} for n = 3
        let delta = w("2 1", 3);
        let eps = w("2 1 1", 3);
        let delta_sq = delta_word(3).pow(2);
        assert!(equals(&delta.pow(3), &delta_sq).unwrap());
        assert!(equals(&eps.pow(2), &delta_sq).unwrap());
    }
}
