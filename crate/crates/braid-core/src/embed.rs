//! Monomorphisms between the Artin groups realized as braid subgroups: the
//! subgroup inclusions, and the centralizer embeddings of the type-B group
//! `B_{d+1,1}` into `B_{md+1}` landing in the centralizer of `mu_{m,d}`.
//!
//! The centralizer embedding is represented by a table of images for the
//! generating set `{sigma_1^2, sigma_2, .., sigma_d}` of `B_{d+1,1}`. The
//! image of `sigma_1^2` is the inner-ring rotation `mu_{m,1}`; the image of
//! `sigma_i` swaps rings `i-1` and `i` by `m` simultaneous band crossings,
//! one per sector, each passing above the remainder of its own ring and
//! below the start of the next ring so that the bands are pairwise
//! disjoint. A table is only ever handed out after passing the validation
//! suite: the type-B relations, centralization of `mu_{m,d}`, 1-purity, and
//! the normalization `psi4(Delta_{(d+1)}^2) = mu_{m,d}`.

use crate::error::{BraidError, Result};
use crate::garside::{commutes, equals};
use crate::linking::{delete_strand, is_pure_at, subgroup_membership, SubgroupClass};
use crate::periodic::mu;
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Inclusion of the 1-pure subgroup: the word unchanged, viewed in the
/// full braid group.
pub fn psi1(w: &BraidWord) -> Result<BraidWord> {
    guard_membership(w, SubgroupClass::TypeB)?;
    Ok(w.clone())
}

/// Inclusion of the 1-unlinked subgroup into the 1-pure subgroup.
pub fn psi2(w: &BraidWord) -> Result<BraidWord> {
    guard_membership(w, SubgroupClass::AffineA)?;
    Ok(w.clone())
}

/// Inclusion of the `{1, n+1}`-pure subgroup into the 1-pure subgroup.
pub fn psi3(w: &BraidWord) -> Result<BraidWord> {
    guard_membership(w, SubgroupClass::AffineC)?;
    Ok(w.clone())
}

fn guard_membership(w: &BraidWord, class: SubgroupClass) -> Result<()> {
    if !subgroup_membership(w, class) {
        let pos = match class {
            SubgroupClass::AffineC => w.strands(),
            _ => 1,
        };
        return Err(BraidError::NotPure { pos });
    }
    Ok(())
}

/// A word over the type-B generating set `{t = sigma_1^2, s_2, .., s_d}`
/// of `B_{d+1,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeBWord {
    d: usize,
    letters: Vec<TypeBLetter>,
}

/// One signed type-B generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeBLetter {
    pub gen: TypeBGen,
    pub inverse: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeBGen {
    /// `t = sigma_1^2`.
    T,
    /// `s_i = sigma_i`, `2 <= i <= d`.
    S(usize),
}

impl TypeBWord {
    pub fn new(d: usize, letters: Vec<TypeBLetter>) -> Result<Self> {
        if d == 0 {
            return Err(BraidError::InvalidParameters(
                "type-B words require d >= 1".into(),
            ));
        }
        for l in &letters {
            if let TypeBGen::S(i) = l.gen {
                if i < 2 || i > d {
                    return Err(BraidError::InvalidParameters(format!(
                        "generator s_{i} out of range 2..={d}"
                    )));
                }
            }
        }
        Ok(TypeBWord { d, letters })
    }

    pub fn identity(d: usize) -> Result<Self> {
        TypeBWord::new(d, Vec::new())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn letters(&self) -> &[TypeBLetter] {
        &self.letters
    }

    /// `epsilon_{(d+1)} = s_d s_{d-1} .. s_2 t` over the type-B generators.
    pub fn epsilon(d: usize) -> Result<Self> {
        let mut letters: Vec<TypeBLetter> = (2..=d)
            .rev()
            .map(|i| TypeBLetter {
                gen: TypeBGen::S(i),
                inverse: false,
            })
            .collect();
        letters.push(TypeBLetter {
            gen: TypeBGen::T,
            inverse: false,
        });
        TypeBWord::new(d, letters)
    }

    /// `Delta_{(d+1)}^2 = epsilon^d` over the type-B generators.
    pub fn delta_squared(d: usize) -> Result<Self> {
        let eps = TypeBWord::epsilon(d)?;
        let mut letters = Vec::with_capacity(eps.letters.len() * d);
        for _ in 0..d {
            letters.extend_from_slice(&eps.letters);
        }
        TypeBWord::new(d, letters)
    }

    /// Expand into a plain word in `B_{d+1}`.
    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            match (l.gen, l.inverse) {
                (TypeBGen::T, false) => letters.extend([1, 1]),
                (TypeBGen::T, true) => letters.extend([-1, -1]),
                (TypeBGen::S(i), false) => letters.push(i as i32),
                (TypeBGen::S(i), true) => letters.push(-(i as i32)),
            }
        }
        BraidWord::new(self.d + 1, letters).expect("generators are in range")
    }

    pub fn inverse(&self) -> TypeBWord {
        TypeBWord {
            d: self.d,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TypeBLetter {
                    gen: l.gen,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &TypeBWord) -> Result<TypeBWord> {
        if self.d != other.d {
            return Err(BraidError::StrandMismatch {
                left: self.d + 1,
                right: other.d + 1,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(TypeBWord { d: self.d, letters })
    }
}

/// Rewrite a 1-pure word over the type-B generators. Only words whose
/// `sigma_1` letters occur in adjacent same-signed pairs are handled;
/// general membership rewriting is not attempted.
pub fn rewrite_to_type_b(w: &BraidWord) -> Result<TypeBWord> {
    if w.strands() < 2 {
        return Err(BraidError::InvalidParameters(
            "type-B rewriting requires at least 2 strands".into(),
        ));
    }
    let d = w.strands() - 1;
    let ls = w.letters();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < ls.len() {
        let l = ls[i];
        if l.abs() == 1 {
            if i + 1 < ls.len() && ls[i + 1] == l {
                letters.push(TypeBLetter {
                    gen: TypeBGen::T,
                    inverse: l < 0,
                });
                i += 2;
            } else {
                return Err(BraidError::RewriteFailure(
                    "sigma_1 letters must occur in adjacent same-signed pairs".into(),
                ));
            }
        } else {
            letters.push(TypeBLetter {
                gen: TypeBGen::S(l.unsigned_abs() as usize),
                inverse: l < 0,
            });
            i += 1;
        }
    }
    TypeBWord::new(d, letters)
}

/// Validated images of the type-B generators inside `B_{md+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct GeneratorImageTable {
    m: usize,
    d: usize,
    t_image: BraidWord,
    s_images: Vec<BraidWord>, // index 0 holds the image of s_2
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    m: usize,
    d: usize,
    images: BTreeMap<String, BraidWord>,
}

impl From<GeneratorImageTable> for TableRepr {
    fn from(table: GeneratorImageTable) -> TableRepr {
        let mut images = BTreeMap::new();
        images.insert("t".to_string(), table.t_image);
        for (offset, image) in table.s_images.into_iter().enumerate() {
            images.insert(format!("s{}", offset + 2), image);
        }
        TableRepr {
            m: table.m,
            d: table.d,
            images,
        }
    }
}

impl TryFrom<TableRepr> for GeneratorImageTable {
    type Error = BraidError;

    fn try_from(repr: TableRepr) -> Result<GeneratorImageTable> {
        let t_image = repr
            .images
            .get("t")
            .cloned()
            .ok_or_else(|| BraidError::TableValidation("missing image of t".into()))?;
        let mut s_images = Vec::new();
        for i in 2..=repr.d {
            let image = repr.images.get(&format!("s{i}")).cloned().ok_or_else(|| {
                BraidError::TableValidation(format!("missing image of s_{i}"))
            })?;
            s_images.push(image);
        }
        let table = GeneratorImageTable {
            m: repr.m,
            d: repr.d,
            t_image,
            s_images,
        };
        validate_table(&table)?;
        Ok(table)
    }
}

impl GeneratorImageTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn strands(&self) -> usize {
        self.m * self.d + 1
    }

    pub fn t_image(&self) -> &BraidWord {
        &self.t_image
    }

    /// Image of `s_i` for `2 <= i <= d`.
    pub fn s_image(&self, i: usize) -> Result<&BraidWord> {
        self.s_images.get(i.wrapping_sub(2)).ok_or_else(|| {
            BraidError::InvalidParameters(format!("generator s_{i} out of range 2..={}", self.d))
        })
    }

    fn image_of(&self, letter: &TypeBLetter) -> Result<BraidWord> {
        let base = match letter.gen {
            TypeBGen::T => &self.t_image,
            TypeBGen::S(i) => self.s_image(i)?,
        };
        Ok(if letter.inverse {
            base.inverse()
        } else {
            base.clone()
        })
    }
}

/// One band of the ring swap: strands `j` and `j+m` of the local `2m`-strand
/// group cross once positively, routed past the intermediate strands with
/// the given signs for own-ring and next-ring crossings.
fn pair_swap_band(m: usize, j: usize, own: i32, other: i32) -> Vec<i32> {
    let q = j + m;
    let mut letters = Vec::with_capacity(2 * m - 1);
    for r in ((j + 1)..q).rev() {
        let sign = if r <= m { own } else { other };
        letters.push(sign * r as i32);
    }
    letters.push(j as i32);
    for r in (j + 1)..q {
        let sign = if r <= m { own } else { other };
        letters.push(-sign * r as i32);
    }
    letters
}

/// The equivariant swap of two adjacent rings, as a word in `B_{2m}`:
/// the product of the `m` sector bands.
fn ring_swap_word(m: usize, own: i32, other: i32) -> BraidWord {
    let mut letters = Vec::with_capacity(m * (2 * m - 1));
    for j in 1..=m {
        letters.extend(pair_swap_band(m, j, own, other));
    }
    BraidWord::new(2 * m, letters).expect("band letters are in range")
}

/// Band routing calibrated by the validation suite: each band passes below
/// the remaining sectors of its own ring and above the early sectors of
/// the next ring.
const BAND_SIGNS: (i32, i32) = (-1, 1);

fn candidate_table(m: usize, d: usize, signs: (i32, i32)) -> Result<GeneratorImageTable> {
    if m < 2 || d < 1 {
        return Err(BraidError::InvalidParameters(
            "generator tables require m >= 2 and d >= 1".into(),
        ));
    }
    let n = m * d + 1;
    let t_image = mu(m, 1)?.shifted(0, n)?;
    let ring_swap = ring_swap_word(m, signs.0, signs.1);
    let mut s_images = Vec::with_capacity(d.saturating_sub(1));
    for i in 2..=d {
        s_images.push(ring_swap.shifted((i - 2) * m + 1, n)?);
    }
    Ok(GeneratorImageTable {
        m,
        d,
        t_image,
        s_images,
    })
}

/// Build and validate the generator table for `(m, d)`.
pub fn build_generator_table(m: usize, d: usize) -> Result<GeneratorImageTable> {
    let table = candidate_table(m, d, BAND_SIGNS)?;
    validate_table(&table)?;
    Ok(table)
}

/// The full constraint suite: type-B relations among the images,
/// centralization of `mu_{m,d}`, 1-purity, and the normalization that the
/// image of `Delta_{(d+1)}^2` is `mu_{m,d}`.
pub fn validate_table(table: &GeneratorImageTable) -> Result<()> {
    let (m, d) = (table.m, table.d);
    let n = m * d + 1;
    let fail = |msg: String| Err(BraidError::TableValidation(msg));

    let t = &table.t_image;
    if t.strands() != n {
        return fail(format!("image of t lives in B_{}, expected B_{n}", t.strands()));
    }
    for i in 2..=d {
        let s = table.s_image(i)?;
        if s.strands() != n {
            return fail(format!("image of s_{i} lives in B_{}, expected B_{n}", s.strands()));
        }
    }

    // (d) purity
    if !is_pure_at(t, 1)? {
        return fail("image of t is not 1-pure".into());
    }
    for i in 2..=d {
        if !is_pure_at(table.s_image(i)?, 1)? {
            return fail(format!("image of s_{i} is not 1-pure"));
        }
    }

    // (b) centralization
    let mu_word = mu(m, d)?;
    if !commutes(t, &mu_word)? {
        return fail("image of t does not commute with mu".into());
    }
    for i in 2..=d {
        if !commutes(table.s_image(i)?, &mu_word)? {
            return fail(format!("image of s_{i} does not commute with mu"));
        }
    }

    // (a) type-B relations
    if d >= 2 {
        let s2 = table.s_image(2)?;
        let lhs = t.concat(s2)?.concat(t)?.concat(s2)?;
        let rhs = s2.concat(t)?.concat(s2)?.concat(t)?;
        if !equals(&lhs, &rhs)? {
            return fail("images break t s2 t s2 = s2 t s2 t".into());
        }
    }
    for i in 2..d {
        let a = table.s_image(i)?;
        let b = table.s_image(i + 1)?;
        let lhs = a.concat(b)?.concat(a)?;
        let rhs = b.concat(a)?.concat(b)?;
        if !equals(&lhs, &rhs)? {
            return fail(format!("images break the braid relation of s_{i}, s_{}", i + 1));
        }
    }
    for i in 2..=d {
        for j in (i + 2)..=d {
            if !commutes(table.s_image(i)?, table.s_image(j)?)? {
                return fail(format!("images of s_{i} and s_{j} do not commute"));
            }
        }
    }
    for j in 3..=d {
        if !commutes(t, table.s_image(j)?)? {
            return fail(format!("images of t and s_{j} do not commute"));
        }
    }

    // (c) the central square maps onto mu
    let delta_sq = apply_table(&TypeBWord::delta_squared(d)?, table)?;
    if !equals(&delta_sq, &mu_word)? {
        return fail("image of Delta^2 is not mu".into());
    }

    Ok(())
}

/// Apply the table to a type-B word.
pub fn apply_table(w: &TypeBWord, table: &GeneratorImageTable) -> Result<BraidWord> {
    if w.d() != table.d {
        return Err(BraidError::InvalidParameters(format!(
            "word over {} type-B generators, table has d = {}",
            w.d(),
            table.d
        )));
    }
    let mut out = BraidWord::identity(table.strands())?;
    for letter in w.letters() {
        out = out.concat(&table.image_of(letter)?)?;
    }
    Ok(out)
}

/// The centralizer embedding on 1-pure words presented over the type-B
/// generators: rewrite, then map letterwise through the table. Lands in
/// `Z(mu_{m,d})` inside `B_{md+1,1}`.
pub fn psi4(w: &BraidWord, table: &GeneratorImageTable) -> Result<BraidWord> {
    if !is_pure_at(w, 1)? {
        return Err(BraidError::NotPure { pos: 1 });
    }
    apply_table(&rewrite_to_type_b(w)?, table)
}

/// `psi5 = nu . psi4`: the image with the first strand deleted, in `B_{md}`.
pub fn psi5(w: &BraidWord, table: &GeneratorImageTable) -> Result<BraidWord> {
    delete_strand(&psi4(w, table)?, 1)
}

/// `psi6 = psi1 . psi4`: the same word as `psi4`, viewed in the full group
/// `B_{md+1}` rather than its 1-pure subgroup.
pub fn psi6(w: &BraidWord, table: &GeneratorImageTable) -> Result<BraidWord> {
    psi4(w, table)
}
