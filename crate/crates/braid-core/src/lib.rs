//! A braid-group computation engine: words and induced permutations,
//! Garside normal forms as the equality witness, linking invariants of
//! pure strands, the cabling algebra on compositions, the periodic braids
//! `delta`, `epsilon` and `mu_{m,d}`, and the type-B centralizer
//! embeddings, all at exact (word-level) precision.
//!
//! The single global convention: in a product `uv` the right factor acts
//! first, so induced permutations satisfy `pi(uv) = pi(u) . pi(v)` and the
//! left action on curve systems satisfies `(uv)*C = u*(v*C)`. See
//! `word::BraidWord::permutation` for the calibration.

pub mod conjugacy;
pub mod embed;
pub mod error;
pub mod garside;
pub mod linking;
pub mod par;
pub mod perm;
pub mod periodic;
pub mod tube;
pub mod word;

pub use conjugacy::{conjugacy_search, ConjugacyOutcome, Obstruction, SearchBudget, SearchScope};
pub use error::{BraidError, Result};
pub use garside::{
    classify_periodic, commutes, conjugate_by, delta_word, equals, is_identity, normal_form,
    permutation_braid_word, NormalForm, Periodicity,
};
pub use linking::{
    delete_strand, is_1_unlinked, is_pure_at, is_pure_on, keep_strands, linking_number_first,
    linking_number_last, subgroup_membership, SubgroupClass,
};
pub use perm::Permutation;
pub use tube::{
    act, cable, decompose, direct_sum, exterior_braid, factored_inverse, factored_multiply,
    flatten, Composition, FactoredBraid,
};
pub use word::BraidWord;

/// Normal forms of a batch of words; parallel when the `parallel` feature
/// is enabled.
pub fn normal_forms_batch(words: &[BraidWord]) -> Vec<NormalForm> {
    par::map_collect(words, normal_form)
}

/// Sequential baseline for the batch normal-form computation.
pub fn normal_forms_batch_seq(words: &[BraidWord]) -> Vec<NormalForm> {
    par::map_collect_seq(words, normal_form)
}
