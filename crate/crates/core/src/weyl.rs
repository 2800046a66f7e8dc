//! Weyl group elements, reduced words, inversion sets and minimal coset
//! representatives.
//!
//! An element is stored as its integer matrix on the root lattice together
//! with a canonical reduced word; two elements are equal iff their matrices
//! are (words are non-unique, so they never enter comparisons). The
//! canonical word is recomputed from the matrix by the descent algorithm:
//! repeatedly strip the smallest simple reflection `s_i` with `w(α_i) < 0`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{Root, RootSystem, Weight};

/// A word in the simple reflections, 1-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// A Weyl group element: root-lattice action plus a canonical reduced word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    mat: Vec<i64>,
    word: Word,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            rank: rs.rank(),
            mat: linalg::identity(rs.rank()),
            word: Word::empty(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.simple_root(i)?; // index check
        Ok(WeylElement {
            rank: rs.rank(),
            mat: rs.simple_reflection_matrix(i),
            word: Word(vec![i]),
        })
    }

    /// Product of the letters of `word` (need not be reduced; the stored
    /// canonical word is recomputed from the matrix).
    pub fn from_word(rs: &RootSystem, word: &Word) -> Result<Self> {
        let n = rs.rank();
        let mut mat = linalg::identity(n);
        for &i in word.letters() {
            rs.simple_root(i)?;
            mat = linalg::mul(n, &mat, &rs.simple_reflection_matrix(i));
        }
        Ok(Self::from_matrix(rs, mat))
    }

    fn from_matrix(rs: &RootSystem, mat: Vec<i64>) -> Self {
        let word = canonical_word(rs, &mat);
        WeylElement {
            rank: rs.rank(),
            mat,
            word,
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn mul(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        Self::from_matrix(rs, linalg::mul(self.rank, &self.mat, &other.mat))
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let rev = Word(self.word.letters().iter().rev().copied().collect());
        Self::from_word(rs, &rev).expect("letters of a canonical word are valid")
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn canonical_word(&self) -> &Word {
        &self.word
    }

    /// Action on the root lattice.
    pub fn apply_root(&self, x: &Root) -> Root {
        Root::new(linalg::apply(self.rank, &self.mat, x.coords()))
    }

    /// Action on the weight lattice, via the canonical word (rightmost
    /// letter acts first).
    pub fn apply_weight(&self, rs: &RootSystem, nu: &Weight) -> Weight {
        let mut v = nu.clone();
        for &i in self.word.letters().iter().rev() {
            v = rs
                .reflect_weight(i, &v)
                .expect("canonical word letters are valid");
        }
        v
    }

    /// Sort key giving a deterministic order: by length, then word.
    pub fn sort_key(&self) -> (usize, Word) {
        (self.length(), self.word.clone())
    }
}

fn column(n: usize, mat: &[i64], j: usize) -> Vec<i64> {
    (0..n).map(|r| mat[r * n + j]).collect()
}

// Descent algorithm. w(α_i) is column i of the matrix; while some column is
// a negative root, strip the smallest such i on the right. The letters come
// out right-to-left.
fn canonical_word(rs: &RootSystem, mat: &[i64]) -> Word {
    let n = rs.rank();
    let mut m = mat.to_vec();
    let mut reversed = Vec::new();
    loop {
        let descent = (0..n).find(|&j| {
            let col = column(n, &m, j);
            col.iter().all(|&c| c <= 0) && col.iter().any(|&c| c != 0)
        });
        let Some(j) = descent else { break };
        m = linalg::mul(n, &m, &rs.simple_reflection_matrix(j + 1));
        reversed.push(j + 1);
    }
    debug_assert_eq!(
        m,
        linalg::identity(n),
        "matrix does not lie in the Weyl group"
    );
    reversed.reverse();
    Word(reversed)
}

/// 1-based position of the first letter that breaks reducedness, if any.
/// The test is the left-to-right positivity criterion: the prefix product
/// `p` extends reducedly by `s_i` iff `p(α_i)` is positive.
pub fn reduced_failure(rs: &RootSystem, word: &Word) -> Result<Option<usize>> {
    let n = rs.rank();
    let mut mat = linalg::identity(n);
    for (k, &i) in word.letters().iter().enumerate() {
        rs.simple_root(i)?;
        let image = column(n, &mat, i - 1);
        if image.iter().all(|&c| c <= 0) && image.iter().any(|&c| c != 0) {
            return Ok(Some(k + 1));
        }
        mat = linalg::mul(n, &mat, &rs.simple_reflection_matrix(i));
    }
    Ok(None)
}

pub fn is_reduced(rs: &RootSystem, word: &Word) -> Result<bool> {
    Ok(reduced_failure(rs, word)?.is_none())
}

/// The inversion set `R⁺(v⁻¹) = {β ∈ R⁺ : v⁻¹(β) ∈ −R⁺}`, in the positive
/// root order. Its size is `length(v)`.
pub fn inversion_set(rs: &RootSystem, v: &WeylElement) -> Vec<Root> {
    let v_inv = v.inverse(rs);
    rs.positive_roots()
        .iter()
        .filter(|beta| v_inv.apply_root(beta).is_negative())
        .cloned()
        .collect()
}

const MAX_ENUM_RANK: usize = 4;

/// The whole Weyl group, each element once, ordered by (length, word).
/// Guarded: exhaustive enumeration is supported for total rank ≤ 4.
pub fn enumerate_weyl(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    if rs.rank() > MAX_ENUM_RANK {
        return Err(Error::Guard(format!(
            "exhaustive Weyl enumeration supports total rank ≤ {MAX_ENUM_RANK}, got {}",
            rs.rank()
        )));
    }
    let mut out = vec![WeylElement::identity(rs)];
    let mut seen: HashSet<Vec<i64>> = out.iter().map(|w| w.mat.clone()).collect();
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..=rs.rank() {
                let v = w.mul(rs, &WeylElement::simple(rs, i)?);
                if seen.insert(v.mat.clone()) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by_key(|w| w.sort_key());
    Ok(out)
}

/// Minimal-length representatives of the cosets `W/W_{S∖{α_omit}}`,
/// characterized by `v(α_j) ∈ R⁺` for every simple j ≠ omit.
pub fn min_coset_reps(rs: &RootSystem, omit: usize) -> Result<Vec<WeylElement>> {
    rs.simple_root(omit)?;
    let all = enumerate_weyl(rs)?;
    Ok(all
        .into_iter()
        .filter(|v| {
            (1..=rs.rank()).all(|j| {
                j == omit
                    || v.apply_root(&rs.simple_root(j).expect("checked index"))
                        .is_positive()
            })
        })
        .collect())
}

/// All reduced words of length 1..=max_len, in length-lexicographic order.
pub fn reduced_words(rs: &RootSystem, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack = vec![(Word::empty(), linalg::identity(rs.rank()))];
    while let Some((word, mat)) = stack.pop() {
        if word.len() >= max_len {
            continue;
        }
        for i in (1..=rs.rank()).rev() {
            let image = column(rs.rank(), &mat, i - 1);
            if image.iter().all(|&c| c <= 0) && image.iter().any(|&c| c != 0) {
                continue; // not reduced
            }
            let mut letters = word.letters().to_vec();
            letters.push(i);
            let next = Word(letters);
            let next_mat = linalg::mul(rs.rank(), &mat, &rs.simple_reflection_matrix(i));
            out.push(next.clone());
            stack.push((next, next_mat));
        }
    }
    out.sort_by_key(|w| (w.len(), w.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type(t).unwrap()
    }

    fn w(rs: &RootSystem, letters: &[usize]) -> WeylElement {
        WeylElement::from_word(rs, &Word(letters.to_vec())).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let r = rs("A2");
        let e = WeylElement::identity(&r);
        for beta in r.positive_roots() {
            assert_eq!(&e.apply_root(beta), beta);
        }
        let nu = r.fundamental_weight(1).unwrap();
        assert_eq!(e.apply_weight(&r, &nu), nu);
    }

    #[test]
    fn a2_s1s2_sends_alpha1_to_alpha2() {
        let r = rs("A2");
        let prod = w(&r, &[1, 2]);
        // compose reflect twice as the independent route
        let via_reflect = r
            .reflect_root(1, &r.reflect_root(2, &r.simple_root(1).unwrap()).unwrap())
            .unwrap();
        assert_eq!(prod.apply_root(&r.simple_root(1).unwrap()), via_reflect);
        assert_eq!(via_reflect, r.simple_root(2).unwrap());
    }

    #[test]
    fn single_letter_agrees_with_reflect() {
        let r = rs("B2");
        for i in 1..=2 {
            let s = WeylElement::simple(&r, i).unwrap();
            for beta in r.positive_roots() {
                assert_eq!(s.apply_root(beta), r.reflect_root(i, beta).unwrap());
            }
        }
    }

    #[test]
    fn reducedness_examples() {
        let r = rs("A2");
        assert!(is_reduced(&r, &Word::empty()).unwrap());
        assert!(!is_reduced(&r, &Word(vec![1, 1])).unwrap());
        assert_eq!(reduced_failure(&r, &Word(vec![1, 1])).unwrap(), Some(2));
        assert!(is_reduced(&r, &Word(vec![1, 2, 1])).unwrap());
        assert!(matches!(
            is_reduced(&r, &Word(vec![3])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn reducedness_matches_length_from_enumeration() {
        // Oracle: a word is reduced iff the product element has that length,
        // iff its inversion set has that size. All words of length ≤ 6 over
        // rank ≤ 3 systems.
        for t in ["A2", "B2", "G2", "A3", "B3", "A1xA2"] {
            let r = rs(t);
            for letters in all_words(r.rank(), 6) {
                let word = Word(letters);
                let elem = WeylElement::from_word(&r, &word).unwrap();
                let reduced = is_reduced(&r, &word).unwrap();
                assert_eq!(reduced, elem.length() == word.len(), "{t}: word {word}");
                if reduced {
                    assert_eq!(
                        inversion_set(&r, &elem).len(),
                        word.len(),
                        "{t}: word {word}"
                    );
                }
            }
        }
    }

    fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        let mut layer = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for wd in &layer {
                for i in 1..=rank {
                    let mut v = wd.clone();
                    v.push(i);
                    next.push(v.clone());
                    out.push(v);
                }
            }
            layer = next;
        }
        out
    }

    #[test]
    fn inversion_sets() {
        let r = rs("A2");
        assert!(inversion_set(&r, &WeylElement::identity(&r)).is_empty());
        for i in 1..=2 {
            assert_eq!(
                inversion_set(&r, &WeylElement::simple(&r, i).unwrap()),
                vec![r.simple_root(i).unwrap()]
            );
        }
        // v = s1 s2: direct scan of the 3 positive roots. v⁻¹ = s2 s1 sends
        // α1 ↦ −(α1+α2) and α1+α2 ↦ −α2, and keeps α2 positive.
        let v = w(&r, &[1, 2]);
        let inv = inversion_set(&r, &v);
        assert_eq!(inv, vec![Root::new(vec![1, 0]), Root::new(vec![1, 1])]);
        assert_eq!(inv.len(), v.length());
    }

    #[test]
    fn inversion_size_equals_length_on_small_words() {
        for t in ["A2", "B2", "A3"] {
            let r = rs(t);
            for word in reduced_words(&r, 4) {
                let elem = WeylElement::from_word(&r, &word).unwrap();
                assert_eq!(inversion_set(&r, &elem).len(), word.len());
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (t, order) in [
            ("A1", 2),
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("A3", 24),
            ("A1xA1", 4),
        ] {
            let r = rs(t);
            let all = enumerate_weyl(&r).unwrap();
            assert_eq!(all.len(), order, "type {t}");
            assert_eq!(r.weyl_order(), order as u128);
        }
    }

    #[test]
    fn enumeration_guard_refuses_large_rank() {
        let r = rs("A5");
        assert!(matches!(enumerate_weyl(&r), Err(Error::Guard(_))));
    }

    #[test]
    fn coset_representatives() {
        let r1 = rs("A1");
        let reps = min_coset_reps(&r1, 1).unwrap();
        assert_eq!(reps.len(), 2); // {e, s1}
        assert!(reps[0].is_identity());

        let r2 = rs("A2");
        let reps = min_coset_reps(&r2, 1).unwrap();
        assert_eq!(reps.len(), 3); // |W|/|W_{⟨s2⟩}| = 6/2
        assert!(reps.iter().any(|v| v.is_identity()));
        for v in &reps {
            assert!(v.apply_root(&r2.simple_root(2).unwrap()).is_positive());
        }

        // counts |W|/|W_J| for the other corpus types
        for (t, omit, count) in [("B2", 1, 4), ("B2", 2, 4), ("G2", 1, 6), ("G2", 2, 6)] {
            assert_eq!(
                min_coset_reps(&rs(t), omit).unwrap().len(),
                count,
                "{t} omit {omit}"
            );
        }
    }

    #[test]
    fn coset_reps_tile_the_group() {
        // every element factors uniquely as (min rep) · (parabolic part), so
        // counts multiply
        for t in ["A2", "B2", "A3"] {
            let r = rs(t);
            let total = enumerate_weyl(&r).unwrap().len();
            for omit in 1..=r.rank() {
                let reps = min_coset_reps(&r, omit).unwrap();
                assert_eq!(total % reps.len(), 0, "{t} omit {omit}");
            }
        }
    }

    #[test]
    fn length_is_subadditive() {
        let r = rs("B2");
        let all = enumerate_weyl(&r).unwrap();
        for u in &all {
            for v in &all {
                let uv = u.mul(&r, v);
                assert!(uv.length() <= u.length() + v.length());
            }
        }
    }

    #[test]
    fn inverse_and_canonical_words() {
        let r = rs("G2");
        for word in reduced_words(&r, 4) {
            let elem = WeylElement::from_word(&r, &word).unwrap();
            let inv = elem.inverse(&r);
            assert!(elem.mul(&r, &inv).is_identity());
            // canonical word is reduced and multiplies back to the element
            let again = WeylElement::from_word(&r, elem.canonical_word()).unwrap();
            assert_eq!(again, elem);
            assert_eq!(again.length(), elem.canonical_word().len());
        }
    }

    #[test]
    fn reduced_words_enumeration_is_exhaustive() {
        // A2 has 6 nonempty reduced words: two per length 1, 2, 3
        let r = rs("A2");
        let words = reduced_words(&r, 6);
        assert_eq!(words.len(), 6);
        let g = rs("G2");
        // G2 reduced words of length ≤ 2: s1, s2, s1s2, s2s1
        assert_eq!(reduced_words(&g, 2).len(), 4);
    }

    #[test]
    fn weight_action_respects_the_pairing() {
        // ⟨wν, (wβ)∨⟩ = ⟨ν, β∨⟩
        let r = rs("G2");
        for word in reduced_words(&r, 3) {
            let elem = WeylElement::from_word(&r, &word).unwrap();
            for beta in r.positive_roots() {
                for m in 1..=2 {
                    let nu = r.fundamental_weight(m).unwrap();
                    let lhs = r.pairing(
                        &elem.apply_weight(&r, &nu),
                        &r.coroot(&elem.apply_root(beta)).unwrap(),
                    );
                    assert_eq!(lhs, r.pairing(&nu, &r.coroot(beta).unwrap()));
                }
            }
        }
    }
}
