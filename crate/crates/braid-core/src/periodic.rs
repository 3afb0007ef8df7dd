//! The explicit periodic braids: the rotations `delta` and `epsilon`, the
//! family `mu_{m,d}` realizing the `2*pi/m` rotation of `d` rings of `m`
//! punctures around a fixed center, its decorated reducible variant, and
//! the structural description of which permutations and factored braids
//! centralize it.

use crate::error::{BraidError, Result};
use crate::garside::{commutes, delta_word, equals};
use crate::perm::Permutation;
use crate::tube::{Composition, FactoredBraid};
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};

/// `delta = sigma_{n-1} .. sigma_1`, the one-step rotation.
pub fn delta_braid(n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(BraidError::InvalidParameters(
            "delta needs at least 1 strand".into(),
        ));
    }
    let letters: Vec<i32> = (1..n as i32).rev().collect();
    BraidWord::new(n, letters)
}

/// `epsilon = delta sigma_1`, the rotation fixing a center puncture.
pub fn epsilon_braid(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::InvalidParameters(
            "epsilon needs at least 2 strands".into(),
        ));
    }
    delta_braid(n)?.concat(&BraidWord::new(n, vec![1])?)
}

/// Parameters selecting a plain `mu_{m,d}` or a decorated `mu_{m,dvec}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MuParams {
    Plain { m: usize, d: usize },
    Decorated { m: usize, dvec: Vec<usize> },
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(BraidError::InvalidParameters(
            "mu requires m >= 2".into(),
        ));
    }
    Ok(())
}

/// The periodic braid `mu_{m,d}` on `md+1` strands, built by the recursion
/// `mu_{m,d} = mu_{m,d-1} (sigma_{dm} .. sigma_1)(sigma_1 .. sigma_{(d-1)m+1})`
/// with `mu_{m,0}` the 1-strand identity.
pub fn mu(m: usize, d: usize) -> Result<BraidWord> {
    check_m(m)?;
    let n = m * d + 1;
    let mut letters: Vec<i32> = Vec::with_capacity(m * d * d + d);
    for e in 1..=d {
        letters.extend((1..=(e * m) as i32).rev());
        letters.extend(1..=((e - 1) * m + 1) as i32);
    }
    BraidWord::new(n, letters)
}

/// Puncture coordinates: `x_0 = 1` and `x_{i,j} = (i-1)m + j + 1`, so ring
/// `i` occupies a consecutive block. For `i = 0` the value of `j` is
/// ignored.
pub fn x_coordinate(m: usize, d: usize, i: usize, j: usize) -> Result<usize> {
    check_m(m)?;
    if i > d {
        return Err(BraidError::InvalidParameters(format!(
            "ring index {i} exceeds d = {d}"
        )));
    }
    if i == 0 {
        return Ok(1);
    }
    if j == 0 || j > m {
        return Err(BraidError::InvalidParameters(format!(
            "sector index {j} out of range 1..={m}"
        )));
    }
    Ok((i - 1) * m + j + 1)
}

/// The closed-form induced permutation of `mu_{m,d}`: the center is fixed
/// and each ring rotates one step, `x_{i,j} -> x_{i,j-1}` with the second
/// index taken modulo `m`.
pub fn mu_permutation(m: usize, d: usize) -> Result<Permutation> {
    check_m(m)?;
    let n = m * d + 1;
    let mut images = vec![0usize; n];
    for i in 1..=d {
        for j in 1..=m {
            let from = x_coordinate(m, d, i, j)?;
            let j_prev = if j == 1 { m } else { j - 1 };
            let to = x_coordinate(m, d, i, j_prev)?;
            images[from - 1] = to - 1;
        }
    }
    Permutation::from_images(images)
}

/// Validate the decorated shape `(d_0 + 1, d_1, .., d_r)` and return
/// `(d_0, [d_1, .., d_r], d)`.
fn decorated_parts(dvec: &Composition) -> (usize, &[usize], usize) {
    let d0 = dvec.blocks()[0] - 1;
    let rest = &dvec.blocks()[1..];
    let d = dvec.total() - 1;
    (d0, rest, d)
}

/// The lifted composition
/// `L_m(dvec) = (m d_0 + 1, d_1 x m, .., d_r x m)` of `md + 1`.
pub fn l_m(m: usize, dvec: &Composition) -> Result<Composition> {
    check_m(m)?;
    let (d0, rest, _) = decorated_parts(dvec);
    let mut blocks = Vec::with_capacity(1 + rest.len() * m);
    blocks.push(m * d0 + 1);
    for &di in rest {
        blocks.extend(std::iter::repeat(di).take(m));
    }
    Composition::new(blocks)
}

/// The decorated braid `mu_{m,dvec}` in factored form: exterior `mu_{m,r}`
/// over `L_m(dvec)`, interior `mu_{m,d_0}` in the center block, and in each
/// ring of blocks one full twist followed by identities.
pub fn mu_decorated(m: usize, dvec: &Composition) -> Result<FactoredBraid> {
    let (d0, rest, _) = decorated_parts(dvec);
    let source = l_m(m, dvec)?;
    let r = rest.len();
    let exterior = mu(m, r)?;
    let mut interiors = Vec::with_capacity(source.block_count());
    interiors.push(mu(m, d0)?);
    for &di in rest {
        interiors.push(delta_word(di).pow(2));
        for _ in 1..m {
            interiors.push(BraidWord::identity(di)?);
        }
    }
    FactoredBraid::new(source, exterior, interiors)
}

/// The block-rotation data `(k_i, l_i)` of a permutation centralizing
/// `mu_{m,d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerShifts {
    /// Ring rearrangement: ring `i` maps onto ring `k_i` (1-based).
    pub k: Vec<usize>,
    /// Sector shift of each ring, in `0..m`.
    pub l: Vec<usize>,
}

/// Check whether `p` has the structural form of a permutation commuting
/// with `mu_{m,d}`: it fixes the center and maps ring `i` onto ring `k_i`
/// with a rigid sector shift `l_i`, i.e. `p(x_{i,j}) = x_{k_i, j - l_i}`.
/// Returns those shifts, or `None` if the form fails.
pub fn is_centralizer_permutation(
    p: &Permutation,
    m: usize,
    d: usize,
) -> Result<Option<CentralizerShifts>> {
    check_m(m)?;
    let n = m * d + 1;
    if p.size() != n {
        return Err(BraidError::StrandMismatch {
            left: p.size(),
            right: n,
        });
    }
    if p.apply(0) != 0 {
        return Ok(None);
    }
    let mut ks = Vec::with_capacity(d);
    let mut ls = Vec::with_capacity(d);
    for i in 1..=d {
        let img = p.apply(x_coordinate(m, d, i, 1)? - 1) + 1;
        if img == 1 {
            return Ok(None);
        }
        let k = (img - 2) / m + 1;
        let j_img = (img - 2) % m + 1;
        // p(x_{i,1}) = x_{k, 1 - l} determines l modulo m
        let l = (1 + m - j_img) % m;
        for j in 1..=m {
            let expect_j = ((j + m - 1 - l) % m) + 1; // j - l, representative 1..=m
            if p.apply(x_coordinate(m, d, i, j)? - 1) + 1 != x_coordinate(m, d, k, expect_j)? {
                return Ok(None);
            }
        }
        ks.push(k);
        ls.push(l);
    }
    Ok(Some(CentralizerShifts { k: ks, l: ls }))
}

/// Exhaustively verify, over all `(md+1)!` permutations, that the
/// structural form coincides with commutation with the induced permutation
/// of `mu_{m,d}`. Returns the number of counterexamples (0 when the lemma
/// holds).
pub fn centralizer_permutation_lemma_counterexamples(m: usize, d: usize) -> Result<usize> {
    let n = m * d + 1;
    let mu_perm = mu_permutation(m, d)?;
    let firsts: Vec<usize> = (0..n).collect();
    let counts = crate::par::map_collect(&firsts, |&first| {
        let mut bad = 0usize;
        let mut images = Vec::with_capacity(n);
        images.push(first);
        let mut used = vec![false; n];
        used[first] = true;
        count_mismatches(&mut images, &mut used, n, m, d, &mu_perm, &mut bad);
        bad
    });
    Ok(counts.into_iter().sum())
}

fn count_mismatches(
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    n: usize,
    m: usize,
    d: usize,
    mu_perm: &Permutation,
    bad: &mut usize,
) {
    if images.len() == n {
        let p = Permutation::from_images(images.clone()).expect("built as a bijection");
        let structural = is_centralizer_permutation(&p, m, d)
            .expect("size matches")
            .is_some();
        let commuting = p.compose(mu_perm) == mu_perm.compose(&p);
        if structural != commuting {
            *bad += 1;
        }
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            images.push(v);
            count_mismatches(images, used, n, m, d, mu_perm, bad);
            images.pop();
            used[v] = false;
        }
    }
}

/// Structural centralizer test for factored braids over `L_m(dvec)`: the
/// exterior must centralize `mu_{m,r}` with block-rotation data `(k_i, l_i)`
/// compatible with the block sizes, the center interior must centralize
/// `mu_{m,d_0}`, and each ring's interiors must be a rigid repetition with
/// full-twist insertions in the first `l_i` slots.
pub fn centralizer_membership_structural(
    f: &FactoredBraid,
    m: usize,
    dvec: &Composition,
) -> Result<bool> {
    let (d0, rest, _) = decorated_parts(dvec);
    let source = l_m(m, dvec)?;
    if f.source() != &source {
        return Err(BraidError::SourceMismatch);
    }
    let r = rest.len();

    let shifts = match is_centralizer_permutation(&f.exterior().permutation(), m, r)? {
        Some(s) => s,
        None => return Ok(false),
    };
    for i in 1..=r {
        if rest[shifts.k[i - 1] - 1] != rest[i - 1] {
            return Ok(false);
        }
    }
    if !commutes(f.exterior(), &mu(m, r)?)? {
        return Ok(false);
    }
    if !commutes(&f.interiors()[0], &mu(m, d0)?)? {
        return Ok(false);
    }
    for i in 1..=r {
        let di = rest[i - 1];
        let l_i = shifts.l[i - 1];
        let base = &f.interiors()[i * m]; // the last slot of ring i is alpha_i
        let twisted = base.concat(&delta_word(di).pow(2))?;
        for j in 1..=m {
            let idx = 1 + (i - 1) * m + (j - 1);
            let expected = if j <= l_i { &twisted } else { base };
            if !equals(&f.interiors()[idx], expected)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
