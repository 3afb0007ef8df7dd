//! Bounded conjugacy search.
//!
//! Non-conjugacy is never claimed from search exhaustion: only invariant
//! mismatches (exponent sum, permutation cycle type, and the linking number
//! when searching inside the 1-pure subgroup) certify it. For unconstrained
//! searches both sides are first shortened by cycling and decycling, then a
//! breadth-first search over single-generator conjugations explores the
//! conjugate orbit; for scoped searches the ball of candidate conjugators
//! is searched directly so the scope predicate can be applied to each.

use crate::error::{BraidError, Result};
use crate::garside::{conjugate_by, delta_word, equals, normal_form, permutation_braid_word, NormalForm};
use crate::linking::{is_pure_at, linking_number_first};
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};

/// Bounds for the breadth-first stage: the number of distinct group
/// elements visited and the letter length of candidate conjugators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: usize,
    pub max_len: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000,
            max_len: 8,
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: usize) -> Self {
        SearchBudget {
            max_nodes,
            ..Default::default()
        }
    }
}

/// Which group the conjugator is allowed to range over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchScope {
    /// The full braid group.
    Full,
    /// Only 1-pure conjugators; requires 1-pure inputs and activates the
    /// linking-number obstruction.
    FirstPure,
    /// Only conjugators commuting with the given braid.
    CentralizerOf(BraidWord),
}

/// The invariant that certified non-conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    ExponentSum,
    CycleType,
    LinkingNumber,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyOutcome {
    /// A conjugator `g` with `g a g^{-1} = b`, verified before returning.
    Conjugator(BraidWord),
    /// Certified non-conjugacy via an invariant mismatch.
    NotConjugate(Obstruction),
    /// The budget ran out; conjugacy remains undecided.
    Exhausted,
}

/// Search for `g` with `g a g^{-1} = b` within the scope and budget.
pub fn conjugacy_search(
    a: &BraidWord,
    b: &BraidWord,
    scope: &SearchScope,
    budget: SearchBudget,
) -> Result<ConjugacyOutcome> {
    let n = a.strands();
    if b.strands() != n {
        return Err(BraidError::StrandMismatch {
            left: n,
            right: b.strands(),
        });
    }
    if let SearchScope::CentralizerOf(omega) = scope {
        if omega.strands() != n {
            return Err(BraidError::StrandMismatch {
                left: n,
                right: omega.strands(),
            });
        }
    }

    if a.exponent_sum() != b.exponent_sum() {
        return Ok(ConjugacyOutcome::NotConjugate(Obstruction::ExponentSum));
    }
    if a.permutation().cycle_type() != b.permutation().cycle_type() {
        return Ok(ConjugacyOutcome::NotConjugate(Obstruction::CycleType));
    }
    if matches!(scope, SearchScope::FirstPure) {
        if !is_pure_at(a, 1)? || !is_pure_at(b, 1)? {
            return Err(BraidError::NotPure { pos: 1 });
        }
        if linking_number_first(a)? != linking_number_first(b)? {
            return Ok(ConjugacyOutcome::NotConjugate(Obstruction::LinkingNumber));
        }
    }

    let outcome = match scope {
        SearchScope::Full => orbit_search(a, b, budget)?,
        _ => ball_search(a, b, scope, budget)?,
    };

    if let ConjugacyOutcome::Conjugator(g) = &outcome {
        assert!(
            equals(&conjugate_by(g, a)?, b)?,
            "conjugacy search returned an unverified conjugator"
        );
    }
    Ok(outcome)
}

/// Repeatedly cycle (then decycle) to drive the infimum up and the
/// supremum down, tracking the accumulated conjugator `p` with
/// `current = p a p^{-1}`.
fn cycle_decycle(a: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    let n = a.strands();
    let mut current = a.clone();
    let mut acc = BraidWord::identity(n)?;
    let mut nf = normal_form(&current);
    // Each successful step strictly improves (inf, -sup); both are bounded
    // by the word length, so this terminates.
    loop {
        if nf.canonical_length() == 0 {
            break;
        }
        // cycling: conjugate by (Delta^p A_1)^{-1} on the left
        let first = permutation_braid_word(&nf.factors()[0]);
        let twist = delta_power_word(n, nf.inf());
        let u = twist.concat(&first)?;
        let candidate = conjugate_by(&u.inverse(), &current)?.free_reduced();
        let cand_nf = normal_form(&candidate);
        if cand_nf.inf() > nf.inf()
            || (cand_nf.inf() == nf.inf() && cand_nf.sup() < nf.sup())
        {
            acc = u.inverse().concat(&acc)?.free_reduced();
            current = candidate;
            nf = cand_nf;
            continue;
        }
        // decycling: conjugate by the final factor on the left
        let last = permutation_braid_word(&nf.factors()[nf.canonical_length() - 1]);
        let candidate = conjugate_by(&last, &current)?.free_reduced();
        let cand_nf = normal_form(&candidate);
        if cand_nf.sup() < nf.sup() || (cand_nf.sup() == nf.sup() && cand_nf.inf() > nf.inf()) {
            acc = last.concat(&acc)?.free_reduced();
            current = candidate;
            nf = cand_nf;
            continue;
        }
        break;
    }
    Ok((current, acc))
}

fn delta_power_word(n: usize, p: i64) -> BraidWord {
    let delta = delta_word(n);
    if p >= 0 {
        delta.pow(p)
    } else {
        delta.inverse().pow(-p)
    }
}

/// BFS over the conjugate orbit of `a`, one generator conjugation per
/// step, deduplicated by normal form.
fn orbit_search(a: &BraidWord, b: &BraidWord, budget: SearchBudget) -> Result<ConjugacyOutcome> {
    let n = a.strands();
    let (a0, p_a) = cycle_decycle(a)?;
    let (b0, p_b) = cycle_decycle(b)?;
    let target = normal_form(&b0);

    let assemble = |g: &BraidWord| -> Result<BraidWord> {
        // g a0 g^{-1} = b0 lifts to (p_b^{-1} g p_a) a (..)^{-1} = b
        p_b.inverse().concat(g)?.concat(&p_a).map(|w| w.free_reduced())
    };

    if normal_form(&a0) == target {
        return Ok(ConjugacyOutcome::Conjugator(assemble(
            &BraidWord::identity(n)?,
        )?));
    }

    let mut seen: HashMap<NormalForm, ()> = HashMap::new();
    let mut queue: VecDeque<(BraidWord, BraidWord, usize)> = VecDeque::new();
    seen.insert(normal_form(&a0), ());
    queue.push_back((a0, BraidWord::identity(n)?, 0));
    let mut visited = 1usize;

    while let Some((current, g, depth)) = queue.pop_front() {
        if depth >= budget.max_len {
            continue;
        }
        for letter in generator_letters(n) {
            let e = BraidWord::new(n, vec![letter])?;
            let next = conjugate_by(&e, &current)?.free_reduced();
            let nf = normal_form(&next);
            if nf == target {
                let g_next = e.concat(&g)?.free_reduced();
                return Ok(ConjugacyOutcome::Conjugator(assemble(&g_next)?));
            }
            if seen.contains_key(&nf) {
                continue;
            }
            visited += 1;
            if visited > budget.max_nodes {
                return Ok(ConjugacyOutcome::Exhausted);
            }
            let g_next = e.concat(&g)?.free_reduced();
            seen.insert(nf, ());
            queue.push_back((next, g_next, depth + 1));
        }
    }
    Ok(ConjugacyOutcome::Exhausted)
}

/// BFS over the ball of candidate conjugators, deduplicated by the normal
/// form of the conjugator itself so scope predicates can be evaluated per
/// group element.
fn ball_search(
    a: &BraidWord,
    b: &BraidWord,
    scope: &SearchScope,
    budget: SearchBudget,
) -> Result<ConjugacyOutcome> {
    let n = a.strands();
    let admits = |g: &BraidWord| -> Result<bool> {
        match scope {
            SearchScope::Full => Ok(true),
            SearchScope::FirstPure => is_pure_at(g, 1),
            SearchScope::CentralizerOf(omega) => {
                crate::garside::commutes(g, omega)
            }
        }
    };

    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut queue: VecDeque<(BraidWord, usize)> = VecDeque::new();
    let identity = BraidWord::identity(n)?;
    seen.insert(normal_form(&identity));
    queue.push_back((identity, 0));
    let mut visited = 1usize;

    while let Some((g, depth)) = queue.pop_front() {
        if admits(&g)? && equals(&conjugate_by(&g, a)?, b)? {
            return Ok(ConjugacyOutcome::Conjugator(g));
        }
        if depth >= budget.max_len {
            continue;
        }
        for letter in generator_letters(n) {
            let g_next = g.concat(&BraidWord::new(n, vec![letter])?)?.free_reduced();
            let nf = normal_form(&g_next);
            if seen.contains(&nf) {
                continue;
            }
            visited += 1;
            if visited > budget.max_nodes {
                return Ok(ConjugacyOutcome::Exhausted);
            }
            seen.insert(nf);
            queue.push_back((g_next, depth + 1));
        }
    }
    Ok(ConjugacyOutcome::Exhausted)
}

fn generator_letters(n: usize) -> impl Iterator<Item = i32> {
    (1..n as i32).flat_map(|j| [j, -j])
}
