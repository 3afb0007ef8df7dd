//! Strand-level invariants: purity, linking numbers of the first and last
//! strands, strand deletion, and the three subgroup characterizations
//! inside `B_{n+1}`.
//!
//! Strands are tracked from the input side of the word, which under the
//! crate convention is the right end. The linking number of a pure strand
//! is half the signed count of crossings involving it; the half-sum of a
//! pure strand is always an integer (the strand crosses an even number of
//! times to return home), and a parity failure here would signal a
//! convention bug, so it is asserted.

use crate::error::{BraidError, Result};
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};

/// True iff the induced permutation fixes the 1-based position `i`.
pub fn is_pure_at(w: &BraidWord, i: usize) -> Result<bool> {
    if i == 0 || i > w.strands() {
        return Err(BraidError::PositionOutOfRange {
            pos: i,
            strands: w.strands(),
        });
    }
    Ok(w.permutation().apply(i - 1) == i - 1)
}

/// True iff the word is `i`-pure for every `i` in `positions`.
pub fn is_pure_on(w: &BraidWord, positions: &[usize]) -> Result<bool> {
    for &i in positions {
        if !is_pure_at(w, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Signed count of crossings involving the strand that starts at 0-based
/// position `start`, traversing the word from its input side.
fn signed_crossings(w: &BraidWord, start: usize) -> i64 {
    let mut pos = start;
    let mut count = 0i64;
    for &l in w.letters().iter().rev() {
        let j = l.unsigned_abs() as usize - 1;
        if pos == j {
            count += l.signum() as i64;
            pos = j + 1;
        } else if pos == j + 1 {
            count += l.signum() as i64;
            pos = j;
        }
    }
    count
}

/// Linking number of the first strand with the others: the homomorphism on
/// 1-pure braids with `lk(sigma_1^2) = 1` and `lk(sigma_i) = 0` for `i >= 2`.
pub fn linking_number_first(w: &BraidWord) -> Result<i64> {
    if !is_pure_at(w, 1)? {
        return Err(BraidError::NotPure { pos: 1 });
    }
    let crossings = signed_crossings(w, 0);
    assert!(
        crossings % 2 == 0,
        "signed crossing count of a pure strand must be even"
    );
    Ok(crossings / 2)
}

/// Linking number of the last strand with the others.
pub fn linking_number_last(w: &BraidWord) -> Result<i64> {
    let n = w.strands();
    if !is_pure_at(w, n)? {
        return Err(BraidError::NotPure { pos: n });
    }
    let crossings = signed_crossings(w, n - 1);
    assert!(
        crossings % 2 == 0,
        "signed crossing count of a pure strand must be even"
    );
    Ok(crossings / 2)
}

/// 1-pure with vanishing linking number.
pub fn is_1_unlinked(w: &BraidWord) -> bool {
    matches!(linking_number_first(w), Ok(0))
}

/// Keep exactly the strands whose input positions are flagged in `keep`
/// (0-based), dropping every crossing that involves a discarded strand and
/// reindexing the rest. The result lives in the braid group on
/// `keep.count(true)` strands.
pub fn keep_strands(w: &BraidWord, keep: &[bool]) -> Result<BraidWord> {
    let n = w.strands();
    if keep.len() != n {
        return Err(BraidError::InvalidParameters(format!(
            "keep mask has length {}, word has {} strands",
            keep.len(),
            n
        )));
    }
    let kept = keep.iter().filter(|&&k| k).count();
    if kept == 0 {
        return Err(BraidError::InvalidParameters(
            "cannot delete every strand".into(),
        ));
    }
    let mut kept_at = keep.to_vec();
    let mut reduced: Vec<i32> = Vec::new();
    for &l in w.letters().iter().rev() {
        let j = l.unsigned_abs() as usize - 1;
        match (kept_at[j], kept_at[j + 1]) {
            (true, true) => {
                // rank of position j among kept positions, 1-based letter
                let rank = kept_at[..j].iter().filter(|&&k| k).count() + 1;
                reduced.push(if l > 0 { rank as i32 } else { -(rank as i32) });
            }
            (a, b) if a != b => {
                kept_at.swap(j, j + 1);
            }
            _ => {}
        }
    }
    reduced.reverse();
    BraidWord::new(kept, reduced)
}

/// Delete the strand starting at the 1-based position `s`; for `s = 1` on
/// 1-pure braids this is the homomorphism `nu`.
pub fn delete_strand(w: &BraidWord, s: usize) -> Result<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return Err(BraidError::InvalidParameters(
            "strand deletion needs at least 2 strands".into(),
        ));
    }
    if s == 0 || s > n {
        return Err(BraidError::PositionOutOfRange { pos: s, strands: n });
    }
    let mut keep = vec![true; n];
    keep[s - 1] = false;
    keep_strands(w, &keep)
}

/// The three subgroups of `B_{n+1}` isomorphic to the Artin groups of type
/// `B_n`, affine `A_{n-1}` and affine `C_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgroupClass {
    /// 1-pure braids.
    TypeB,
    /// 1-unlinked braids.
    AffineA,
    /// `{1, n+1}`-pure braids.
    AffineC,
}

pub fn subgroup_membership(w: &BraidWord, which: SubgroupClass) -> bool {
    match which {
        SubgroupClass::TypeB => is_pure_at(w, 1).unwrap_or(false),
        SubgroupClass::AffineA => is_1_unlinked(w),
        SubgroupClass::AffineC => {
            is_pure_at(w, 1).unwrap_or(false) && is_pure_at(w, w.strands()).unwrap_or(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::{equals, normal_form};

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn purity_basics() {
        let alpha1 = w("1 1 2 2 2 2", 4);
        assert!(is_pure_at(&alpha1, 1).unwrap());
        assert!(!is_pure_at(&w("1", 2), 1).unwrap());
        assert!(is_pure_at(&w("", 1), 1).unwrap());
        assert!(is_pure_at(&alpha1, 5).is_err());
    }

    #[test]
    fn pair_purity_of_second_pair() {
        // alpha_2 = sigma_n^2 sigma_{n-1}^4 in B_{n+1}, here n = 4
        let alpha2 = w("4 4 3 3 3 3", 5);
        assert!(is_pure_on(&alpha2, &[1, 5]).unwrap());
        assert!(subgroup_membership(&alpha2, SubgroupClass::AffineC));
    }

    #[test]
    fn linking_of_the_generating_square() {
        assert_eq!(linking_number_first(&w("1 1", 2)).unwrap(), 1);
    }

    #[test]
    fn linking_values_of_the_first_pair() {
        // lk(alpha_1) = 1 and lk(beta_1) = 2
        assert_eq!(linking_number_first(&w("1 1 2 2 2 2", 4)).unwrap(), 1);
        assert_eq!(linking_number_first(&w("2 2 1 1 1 1", 4)).unwrap(), 2);
    }

    #[test]
    fn linking_of_the_block_twist() {
        // chi = (sigma_1 .. sigma_n)(sigma_n .. sigma_1) has lk = n
        for n in 2..6 {
            let mut letters: Vec<i32> = (1..=n).collect();
            letters.extend((1..=n).rev());
            let chi = BraidWord::new(n as usize + 1, letters).unwrap();
            assert_eq!(linking_number_first(&chi).unwrap(), n as i64);
        }
    }

    #[test]
    fn linking_requires_purity() {
        assert!(matches!(
            linking_number_first(&w("1", 3)),
            Err(BraidError::NotPure { pos: 1 })
        ));
    }

    #[test]
    fn last_strand_linking_values() {
        // lk'(alpha_2) = 1 and lk'(beta_2) = 2, with n = 4
        assert_eq!(linking_number_last(&w("4 4 3 3 3 3", 5)).unwrap(), 1);
        assert_eq!(linking_number_last(&w("3 3 4 4 4 4", 5)).unwrap(), 2);
        assert_eq!(linking_number_last(&w("", 5)).unwrap(), 0);
        assert_eq!(linking_number_last(&w("4 4", 5)).unwrap(), 1);
    }

    #[test]
    fn unlinked_examples() {
        // alpha_3 = sigma_n .. sigma_2 is 1-unlinked; here n = 4
        assert!(is_1_unlinked(&w("4 3 2", 5)));
        assert!(!is_1_unlinked(&w("1 1", 3)));
        assert!(is_1_unlinked(&w("", 4)));
    }

    #[test]
    fn membership_predicates() {
        let alpha1 = w("1 1 2 2 2 2", 4);
        let alpha3 = w("3 2", 4);
        assert!(subgroup_membership(&alpha1, SubgroupClass::TypeB));
        assert!(subgroup_membership(&alpha3, SubgroupClass::AffineA));
        assert!(!subgroup_membership(&w("1", 4), SubgroupClass::AffineC));
    }

    #[test]
    fn deletion_of_simple_words() {
        // nu(sigma_1^2 in B_2) is the identity of B_1
        let reduced = delete_strand(&w("1 1", 2), 1).unwrap();
        assert_eq!(reduced.strands(), 1);
        assert!(reduced.is_empty_word());

        // nu(sigma_2 in B_3) = sigma_1 in B_2
        let reduced = delete_strand(&w("2", 3), 1).unwrap();
        assert_eq!(reduced.letters(), &[1]);
    }

    #[test]
    fn deletion_is_a_homomorphism_on_first_pure_words() {
        let u = w("1 1 2 -3 3 2", 4);
        let v = w("2 2 -1 -1 3", 4);
        let uv = u.concat(&v).unwrap();
        let nu_u = delete_strand(&u, 1).unwrap();
        let nu_v = delete_strand(&v, 1).unwrap();
        let lhs = delete_strand(&uv, 1).unwrap();
        let rhs = nu_u.concat(&nu_v).unwrap();
        assert!(equals(&lhs, &rhs).unwrap());
    }

    #[test]
    fn deletion_respects_braid_relations() {
        // applying deletion to both sides of the defining relations gives
        // Garside-equal words, for every strand choice
        for n in 2..=5usize {
            for i in 1..(n as i32 - 1) {
                let lhs = BraidWord::new(n, vec![i, i + 1, i]).unwrap();
                let rhs = BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap();
                for s in 1..=n {
                    let a = delete_strand(&lhs, s).unwrap();
                    let b = delete_strand(&rhs, s).unwrap();
                    assert_eq!(
                        normal_form(&a),
                        normal_form(&b),
                        "braid relation broke under deletion (n={n}, i={i}, s={s})"
                    );
                }
            }
            for i in 1..(n as i32) {
                for j in (i + 2)..(n as i32) {
                    let lhs = BraidWord::new(n, vec![i, j]).unwrap();
                    let rhs = BraidWord::new(n, vec![j, i]).unwrap();
                    for s in 1..=n {
                        let a = delete_strand(&lhs, s).unwrap();
                        let b = delete_strand(&rhs, s).unwrap();
                        assert_eq!(normal_form(&a), normal_form(&b));
                    }
                }
            }
        }
    }

    #[test]
    fn deletion_bounds() {
        assert!(delete_strand(&w("", 1), 1).is_err());
        assert!(delete_strand(&w("1", 2), 3).is_err());
    }
}
