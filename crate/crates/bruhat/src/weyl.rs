//! Exact Weyl group arithmetic for a generalized Cartan matrix.
//!
//! Elements are stored as integer matrices acting on root coordinates in
//! the simple-root basis: column `j` of the matrix holds the coordinates
//! of the image of the j-th simple root. A simple reflection `s_i` sends
//! `alpha_j` to `alpha_j - a_ij * alpha_i`, so its matrix is the identity
//! outside row `i`.
//!
//! Two facts drive every algorithm here:
//!
//! * every real root is a positive or a negative root, so each matrix
//!   column is entirely >= 0 or entirely <= 0;
//! * `len(w * s_i) = len(w) + 1` exactly when column `i` of `w` is
//!   nonnegative, and symmetrically for left multiplication via the
//!   inverse.
//!
//! Inverses are never computed by matrix inversion. Each element carries a
//! reduced word, and the inverse is the product of simple reflections over
//! the reversed word.

use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::gcm::{GcmError, GeneralizedCartanMatrix, NodeSubset};
use crate::matrix::{IntMatrix, Overflow};

/// Default cap on the total number of elements an enumeration may hold.
pub const DEFAULT_ELEMENT_BUDGET: usize = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has {got} coordinates but the rank is {rank}")]
    DimensionMismatch { got: usize, rank: usize },
    #[error("elements belong to different Cartan matrices")]
    MismatchedContext,
    #[error("vector has mixed signs and is not in the root orbit")]
    MixedSign,
    #[error("integer overflow during exact arithmetic")]
    ArithmeticOverflow,
    #[error("element budget {budget} exhausted; levels are complete through length {completed_length}")]
    BudgetExceeded { completed_length: usize, budget: usize },
}

impl From<Overflow> for WeylError {
    fn from(_: Overflow) -> Self {
        WeylError::ArithmeticOverflow
    }
}

impl From<GcmError> for WeylError {
    fn from(e: GcmError) -> Self {
        match e {
            GcmError::IndexOutOfRange { index, rank } => WeylError::IndexOutOfRange { index, rank },
            GcmError::Overflow => WeylError::ArithmeticOverflow,
            // other GcmError variants cannot arise from the calls made here
            _ => WeylError::MismatchedContext,
        }
    }
}

/// Sign of a vector in the root orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Positive,
    Negative,
}

/// An integer vector in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector { coords }
    }

    /// The i-th simple root of a rank-n system.
    pub fn simple(rank: usize, i: usize) -> Result<Self, WeylError> {
        if i >= rank {
            return Err(WeylError::IndexOutOfRange { index: i, rank });
        }
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Ok(RootVector { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Classifies the vector as a positive or negative root vector.
    /// The zero vector and mixed-sign vectors are rejected: the orbit of
    /// the simple roots never contains them.
    pub fn sign(&self) -> Result<RootSign, WeylError> {
        let any_pos = self.coords.iter().any(|&c| c > 0);
        let any_neg = self.coords.iter().any(|&c| c < 0);
        match (any_pos, any_neg) {
            (true, false) => Ok(RootSign::Positive),
            (false, true) => Ok(RootSign::Negative),
            _ => Err(WeylError::MixedSign),
        }
    }
}

fn reflection_matrix(gcm: &GeneralizedCartanMatrix, i: usize) -> IntMatrix {
    let n = gcm.rank();
    let mut m = IntMatrix::identity(n);
    for j in 0..n {
        let v = if i == j { -1 } else { -gcm.entry(i, j) };
        m.set(i, j, v);
    }
    m
}

fn reflection_matrices(gcm: &GeneralizedCartanMatrix) -> Vec<IntMatrix> {
    (0..gcm.rank()).map(|i| reflection_matrix(gcm, i)).collect()
}

/// Greedy strip of smallest left descents, producing the lexicographically
/// least reduced word. `inv` must be the matrix of the inverse element.
fn lex_least_word(reflections: &[IntMatrix], mut inv: IntMatrix) -> Result<Vec<usize>, WeylError> {
    let n = inv.n();
    let mut word = Vec::new();
    loop {
        // column i of the inverse is the image of alpha_i under w^{-1};
        // a negative image marks i as a left descent of w
        let descent = (0..n).find(|&i| inv.column_nonpositive(i));
        match descent {
            None => {
                debug_assert!(inv.is_identity(), "descent-free matrix must be the identity");
                return Ok(word);
            }
            Some(i) => {
                word.push(i);
                inv = inv.mul(&reflections[i])?;
            }
        }
    }
}

/// A Weyl group element: its matrix and its canonical reduced word.
///
/// The stored word is always the lexicographically least reduced word, so
/// word equality coincides with element equality within one group.
#[derive(Debug, Clone)]
pub struct WeylElement {
    gcm: Arc<GeneralizedCartanMatrix>,
    matrix: IntMatrix,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.same_context(other)
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    fn same_context(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.gcm, &other.gcm) || self.gcm == other.gcm
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.matrix.n()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The canonical reduced word (lexicographically least, 0-based
    /// letters) together with the length.
    pub fn canonical_word(&self) -> (&[usize], usize) {
        (&self.word, self.word.len())
    }

    /// Row-major matrix entries; column `j` is the image of the j-th
    /// simple root.
    pub fn matrix_entries(&self) -> &[i64] {
        self.matrix.entries()
    }

    pub fn apply(&self, r: &RootVector) -> Result<RootVector, WeylError> {
        if r.coords().len() != self.rank() {
            return Err(WeylError::DimensionMismatch { got: r.coords().len(), rank: self.rank() });
        }
        Ok(RootVector::new(self.matrix.mul_vec(r.coords())?))
    }

    /// The image of the i-th simple root, read off column `i`.
    pub fn image_of_simple(&self, i: usize) -> Result<RootVector, WeylError> {
        if i >= self.rank() {
            return Err(WeylError::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(RootVector::new((0..self.rank()).map(|k| self.matrix.get(k, i)).collect()))
    }

    /// True when right multiplication by `s_i` shortens the element.
    pub fn has_right_descent(&self, i: usize) -> Result<bool, WeylError> {
        if i >= self.rank() {
            return Err(WeylError::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(self.matrix.column_nonpositive(i))
    }

    /// Exact determinant, always +1 or -1 with parity matching the length.
    pub fn determinant(&self) -> Result<i64, WeylError> {
        Ok(self.matrix.determinant()?)
    }

    /// True when this element is the minimal-length representative of its
    /// coset modulo the parabolic subgroup generated by `parabolic`:
    /// every generator in the subset must map to a positive root.
    pub fn is_minimal_rep(&self, parabolic: &NodeSubset) -> Result<bool, WeylError> {
        parabolic.check_rank(self.rank())?;
        Ok(parabolic.iter().all(|j| self.matrix.column_nonnegative(j)))
    }

    pub fn multiply(&self, rhs: &WeylElement) -> Result<WeylElement, WeylError> {
        if !self.same_context(rhs) {
            return Err(WeylError::MismatchedContext);
        }
        let reflections = reflection_matrices(&self.gcm);
        let matrix = self.matrix.mul(&rhs.matrix)?;
        // (ab)^{-1} = b^{-1} a^{-1}, each factor expanded over its
        // reversed reduced word
        let mut inv = IntMatrix::identity(self.rank());
        for &i in rhs.word.iter().rev().chain(self.word.iter().rev()) {
            inv = inv.mul(&reflections[i])?;
        }
        let word = lex_least_word(&reflections, inv)?;
        Ok(WeylElement { gcm: self.gcm.clone(), matrix, word })
    }

    pub fn inverse(&self) -> Result<WeylElement, WeylError> {
        let reflections = reflection_matrices(&self.gcm);
        let mut matrix = IntMatrix::identity(self.rank());
        for &i in self.word.iter().rev() {
            matrix = matrix.mul(&reflections[i])?;
        }
        // the inverse of the inverse is the element itself
        let word = lex_least_word(&reflections, self.matrix.clone())?;
        Ok(WeylElement { gcm: self.gcm.clone(), matrix, word })
    }
}

/// Elements grouped by length, indices 0..=max_len. Levels past the
/// longest element of a finite group are present and empty.
#[derive(Debug, Clone)]
pub struct LengthLevels {
    levels: Vec<Vec<WeylElement>>,
}

impl LengthLevels {
    pub fn max_len(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, l: usize) -> &[WeylElement] {
        &self.levels[l]
    }

    pub fn levels(&self) -> &[Vec<WeylElement>] {
        &self.levels
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.len() as u64).collect()
    }

    pub fn total(&self) -> u64 {
        self.levels.iter().map(|l| l.len() as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeylElement> {
        self.levels.iter().flatten()
    }
}

/// The Weyl group of a generalized Cartan matrix, with its simple
/// reflection matrices cached.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    gcm: Arc<GeneralizedCartanMatrix>,
    reflections: Vec<IntMatrix>,
}

impl WeylGroup {
    pub fn new(gcm: &GeneralizedCartanMatrix) -> Self {
        let gcm = Arc::new(gcm.clone());
        let reflections = reflection_matrices(&gcm);
        WeylGroup { gcm, reflections }
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            gcm: self.gcm.clone(),
            matrix: IntMatrix::identity(self.rank()),
            word: Vec::new(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement, WeylError> {
        if i >= self.rank() {
            return Err(WeylError::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(WeylElement {
            gcm: self.gcm.clone(),
            matrix: self.reflections[i].clone(),
            word: vec![i],
        })
    }

    /// The product `s_{word[0]} * s_{word[1]} * ...`, canonicalized.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement, WeylError> {
        let n = self.rank();
        let mut matrix = IntMatrix::identity(n);
        let mut inv = IntMatrix::identity(n);
        for &i in word {
            if i >= n {
                return Err(WeylError::IndexOutOfRange { index: i, rank: n });
            }
            matrix = matrix.mul(&self.reflections[i])?;
        }
        for &i in word.iter().rev() {
            inv = inv.mul(&self.reflections[i])?;
        }
        let word = lex_least_word(&self.reflections, inv)?;
        Ok(WeylElement { gcm: self.gcm.clone(), matrix, word })
    }

    fn finish_level(&self, frontier: &HashMap<IntMatrix, IntMatrix>) -> Result<Vec<WeylElement>, WeylError> {
        let mut level = Vec::with_capacity(frontier.len());
        for (matrix, inv) in frontier {
            let word = lex_least_word(&self.reflections, inv.clone())?;
            level.push(WeylElement {
                gcm: self.gcm.clone(),
                matrix: matrix.clone(),
                word,
            });
        }
        level.sort_by(|a, b| a.word.cmp(&b.word));
        Ok(level)
    }

    /// Breadth-first enumeration of the whole group, level by level up to
    /// `max_len`. Each frontier element `w` is extended to `w * s_i` for
    /// exactly the `i` with column `i` nonnegative, which are the
    /// length-increasing products; duplicates are merged by matrix.
    ///
    /// `budget` caps the total number of elements held across all levels;
    /// exceeding it reports the last fully completed length.
    pub fn enumerate_by_length(&self, max_len: usize, budget: usize) -> Result<LengthLevels, WeylError> {
        let n = self.rank();
        let budget = budget.max(1);
        let mut total = 1usize;
        let mut frontier: HashMap<IntMatrix, IntMatrix> = HashMap::new();
        frontier.insert(IntMatrix::identity(n), IntMatrix::identity(n));
        let mut levels = vec![self.finish_level(&frontier)?];
        for l in 1..=max_len {
            let mut next: HashMap<IntMatrix, IntMatrix> = HashMap::new();
            for (matrix, inv) in &frontier {
                for i in 0..n {
                    if !matrix.column_nonnegative(i) {
                        continue;
                    }
                    let longer = matrix.mul(&self.reflections[i])?;
                    if next.contains_key(&longer) {
                        continue;
                    }
                    total += 1;
                    if total > budget {
                        return Err(WeylError::BudgetExceeded { completed_length: l - 1, budget });
                    }
                    let longer_inv = self.reflections[i].mul(inv)?;
                    next.insert(longer, longer_inv);
                }
            }
            frontier = next;
            levels.push(self.finish_level(&frontier)?);
        }
        Ok(LengthLevels { levels })
    }

    /// Coefficients of the growth series: the number of elements of each
    /// length, 0..=max_len.
    pub fn growth_series(&self, max_len: usize, budget: usize) -> Result<Vec<u64>, WeylError> {
        Ok(self.enumerate_by_length(max_len, budget)?.sizes())
    }

    /// Breadth-first enumeration of the minimal coset representatives of
    /// the quotient by the parabolic subgroup generated by `parabolic`.
    ///
    /// From each representative `w` of length `l`, the candidates are the
    /// left products `s_i * w`; a candidate of length `l + 1` (it is not
    /// in the previous level: left products change length by exactly one)
    /// is kept when it is itself minimal. Stripping a left descent from a
    /// minimal representative yields a minimal representative, so the
    /// previous level is a complete membership test.
    pub fn minimal_coset_reps(
        &self,
        parabolic: &NodeSubset,
        max_len: usize,
        budget: usize,
    ) -> Result<LengthLevels, WeylError> {
        parabolic.check_rank(self.rank())?;
        let n = self.rank();
        let budget = budget.max(1);
        let mut total = 1usize;
        let minimal = |m: &IntMatrix| parabolic.iter().all(|j| m.column_nonnegative(j));
        let mut prev: HashSet<IntMatrix> = HashSet::new();
        let mut cur: HashMap<IntMatrix, IntMatrix> = HashMap::new();
        cur.insert(IntMatrix::identity(n), IntMatrix::identity(n));
        let mut levels = vec![self.finish_level(&cur)?];
        for l in 1..=max_len {
            let mut next: HashMap<IntMatrix, IntMatrix> = HashMap::new();
            for (matrix, inv) in &cur {
                for i in 0..n {
                    let candidate = self.reflections[i].mul(matrix)?;
                    if next.contains_key(&candidate) || prev.contains(&candidate) {
                        continue;
                    }
                    if !minimal(&candidate) {
                        continue;
                    }
                    total += 1;
                    if total > budget {
                        return Err(WeylError::BudgetExceeded { completed_length: l - 1, budget });
                    }
                    let candidate_inv = inv.mul(&self.reflections[i])?;
                    next.insert(candidate, candidate_inv);
                }
            }
            prev = cur.into_keys().collect();
            cur = next;
            levels.push(self.finish_level(&cur)?);
        }
        Ok(LengthLevels { levels })
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::gcm::GeneralizedCartanMatrix;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(&GeneralizedCartanMatrix::from_named_str(name).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn random_words_satisfy_length_invariants(
            word in prop::collection::vec(0usize..3, 0..12)
        ) {
            let group = group("A3");
            let w = group.element_from_word(&word).unwrap();
            // each generator changes the length by exactly one
            prop_assert!(w.length() <= word.len());
            prop_assert_eq!(w.length() % 2, word.len() % 2);
            prop_assert_eq!(w.determinant().unwrap(), if w.length() % 2 == 0 { 1 } else { -1 });
            // the canonical word reproduces the element and is reduced
            let canonical = w.canonical_word().0.to_vec();
            prop_assert_eq!(canonical.len(), w.length());
            prop_assert_eq!(&group.element_from_word(&canonical).unwrap(), &w);
            prop_assert_eq!(&w.inverse().unwrap().inverse().unwrap(), &w);
        }

        #[test]
        fn random_words_respect_the_sign_dichotomy(
            word in prop::collection::vec(0usize..4, 0..10)
        ) {
            let group = group("D4");
            let w = group.element_from_word(&word).unwrap();
            for i in 0..4 {
                // every column is a root: all entries share one sign
                prop_assert!(w.image_of_simple(i).unwrap().sign().is_ok());
            }
        }
    }

    #[test]
    fn simple_reflection_matrices() {
        let a2 = group("A2");
        let s1 = a2.simple_reflection(0).unwrap();
        assert_eq!(s1.matrix_entries(), &[-1, 1, 0, 1]);
        let s2 = a2.simple_reflection(1).unwrap();
        assert_eq!(s2.matrix_entries(), &[1, 0, 1, -1]);
        let a1 = group("A1");
        assert_eq!(a1.simple_reflection(0).unwrap().matrix_entries(), &[-1]);
        assert!(a2.simple_reflection(2).is_err());
    }

    #[test]
    fn reflection_in_e9_touches_only_neighbors() {
        let e9 = group("E9");
        let s9 = e9.simple_reflection(8).unwrap();
        // column 7 is alpha_8 + alpha_9, column 8 is -alpha_9
        assert_eq!(s9.image_of_simple(7).unwrap().coords(), &[0, 0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(s9.image_of_simple(8).unwrap().coords(), &[0, 0, 0, 0, 0, 0, 0, 0, -1]);
        assert_eq!(s9.image_of_simple(0).unwrap().coords(), &[1, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn involution_and_order_three_braid() {
        let a2 = group("A2");
        let s1 = a2.simple_reflection(0).unwrap();
        let s2 = a2.simple_reflection(1).unwrap();
        assert!(s1.multiply(&s1).unwrap().is_identity());
        let r = s1.multiply(&s2).unwrap();
        assert_eq!(r.length(), 2);
        let r3 = r.multiply(&r).unwrap().multiply(&r).unwrap();
        assert!(r3.is_identity());
    }

    #[test]
    fn canonical_word_is_lex_least() {
        let a2 = group("A2");
        // s2 s1 s2 equals s1 s2 s1; the canonical form starts with the
        // smaller letter
        let w = a2.element_from_word(&[1, 0, 1]).unwrap();
        assert_eq!(w.canonical_word(), (&[0usize, 1, 0][..], 3));
        let a3 = group("A3");
        // s3 s1 commutes to s1 s3
        let w = a3.element_from_word(&[2, 0]).unwrap();
        assert_eq!(w.canonical_word(), (&[0usize, 2][..], 2));
    }

    #[test]
    fn canonical_words_of_all_of_a2() {
        let a2 = group("A2");
        let levels = a2.enumerate_by_length(3, 1000).unwrap();
        let words: Vec<Vec<usize>> = levels.iter().map(|w| w.word.clone()).collect();
        assert_eq!(
            words,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 1],
                vec![1, 0],
                vec![0, 1, 0],
            ]
        );
    }

    #[test]
    fn element_from_word_cancels() {
        let a2 = group("A2");
        let w = a2.element_from_word(&[0, 0]).unwrap();
        assert!(w.is_identity());
        assert_eq!(w.canonical_word(), (&[][..], 0));
        assert!(a2.element_from_word(&[5]).is_err());
    }

    #[test]
    fn inverse_reverses_words() {
        let a3 = group("A3");
        let w = a3.element_from_word(&[0, 1, 2]).unwrap();
        let inv = w.inverse().unwrap();
        assert_eq!(inv.length(), 3);
        assert!(w.multiply(&inv).unwrap().is_identity());
        assert!(inv.multiply(&w).unwrap().is_identity());
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let a2 = group("A2");
        let d4 = group("D4");
        // same rank, different matrices
        let x = group("A4").identity();
        let y = group("D4").identity();
        assert_eq!(x.multiply(&y), Err(WeylError::MismatchedContext));
        assert_ne!(a2.identity(), d4.identity());
    }

    #[test]
    fn root_sign_classification() {
        assert_eq!(RootVector::new(vec![1, 1]).sign().unwrap(), RootSign::Positive);
        assert_eq!(RootVector::new(vec![0, -1]).sign().unwrap(), RootSign::Negative);
        assert_eq!(RootVector::new(vec![1, -1]).sign(), Err(WeylError::MixedSign));
        assert_eq!(RootVector::new(vec![0, 0]).sign(), Err(WeylError::MixedSign));
    }

    #[test]
    fn apply_moves_roots() {
        let a2 = group("A2");
        let s1 = a2.simple_reflection(0).unwrap();
        let a1 = RootVector::simple(2, 0).unwrap();
        assert_eq!(s1.apply(&a1).unwrap().coords(), &[-1, 0]);
        let bad = RootVector::new(vec![1, 0, 0]);
        assert!(matches!(s1.apply(&bad), Err(WeylError::DimensionMismatch { .. })));
    }

    #[test]
    fn growth_of_small_finite_groups() {
        assert_eq!(group("A1").growth_series(5, 1000).unwrap(), vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(group("A2").growth_series(3, 1000).unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(group("A3").growth_series(6, 1000).unwrap(), vec![1, 3, 5, 6, 5, 3, 1]);
        assert_eq!(
            group("A4").growth_series(10, 1000).unwrap(),
            vec![1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1]
        );
    }

    #[test]
    fn growth_of_d4_is_palindromic_and_sums_to_192() {
        let g = group("D4").growth_series(12, 10_000).unwrap();
        assert_eq!(g, vec![1, 4, 9, 16, 23, 28, 30, 28, 23, 16, 9, 4, 1]);
        assert_eq!(g.iter().sum::<u64>(), 192);
    }

    #[test]
    fn growth_of_infinite_types_keeps_growing()  {
        assert_eq!(group("E10").growth_series(2, 1000).unwrap(), vec![1, 10, 54]);
        assert_eq!(
            group("E9").growth_series(6, 100_000).unwrap(),
            vec![1, 9, 44, 156, 450, 1122, 2508]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let err = group("E10").growth_series(4, 30).unwrap_err();
        assert_eq!(err, WeylError::BudgetExceeded { completed_length: 1, budget: 30 });
    }

    #[test]
    fn minimality_by_column_test() {
        let a2 = group("A2");
        let j = NodeSubset::new([1]);
        assert!(a2.identity().is_minimal_rep(&j).unwrap());
        assert!(a2.simple_reflection(0).unwrap().is_minimal_rep(&j).unwrap());
        assert!(!a2.simple_reflection(1).unwrap().is_minimal_rep(&j).unwrap());
        let s2s1 = a2.element_from_word(&[1, 0]).unwrap();
        assert!(s2s1.is_minimal_rep(&j).unwrap());
        let bad = NodeSubset::new([7]);
        assert!(a2.identity().is_minimal_rep(&bad).is_err());
    }

    #[test]
    fn coset_reps_of_a2_mod_second_node() {
        let a2 = group("A2");
        let levels = a2.minimal_coset_reps(&NodeSubset::new([1]), 3, 1000).unwrap();
        assert_eq!(levels.sizes(), vec![1, 1, 1, 0]);
        let words: Vec<Vec<usize>> = levels.iter().map(|w| w.word.clone()).collect();
        assert_eq!(words, vec![vec![], vec![0], vec![1, 0]]);
    }

    #[test]
    fn coset_reps_of_a3_by_parabolic() {
        let a3 = group("A3");
        let middle = a3.minimal_coset_reps(&NodeSubset::new([1]), 8, 1000).unwrap();
        assert_eq!(middle.sizes(), vec![1, 2, 3, 3, 2, 1, 0, 0, 0]);
        assert_eq!(middle.total(), 12);
        let ends = a3.minimal_coset_reps(&NodeSubset::new([0, 2]), 8, 1000).unwrap();
        assert_eq!(ends.sizes(), vec![1, 1, 2, 1, 1, 0, 0, 0, 0]);
        assert_eq!(ends.total(), 6);
        let full = a3.minimal_coset_reps(&NodeSubset::full(3), 5, 1000).unwrap();
        assert_eq!(full.sizes(), vec![1, 0, 0, 0, 0, 0]);
        let empty = a3.minimal_coset_reps(&NodeSubset::empty(), 6, 1000).unwrap();
        assert_eq!(empty.sizes(), vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn tail_quotients_of_the_chain_are_single_cells() {
        let a8 = group("A8");
        let levels = a8.minimal_coset_reps(&NodeSubset::new(0..7), 8, 100_000).unwrap();
        assert_eq!(levels.sizes(), vec![1; 9]);
    }

    #[test]
    fn tail_quotient_of_e9_branches_at_seven() {
        let e9 = group("E9");
        let levels = e9.minimal_coset_reps(&NodeSubset::new(0..8), 8, 100_000).unwrap();
        assert_eq!(levels.sizes(), vec![1, 1, 1, 1, 1, 1, 1, 2, 2]);
        // the two length-7 representatives pick up the two branch
        // neighbors of the trivalent node
        let len7: Vec<Vec<usize>> = levels.level(7).iter().map(|w| w.word.clone()).collect();
        assert_eq!(len7, vec![vec![1, 3, 4, 5, 6, 7, 8], vec![2, 3, 4, 5, 6, 7, 8]]);
    }

    #[test]
    fn coset_budget_is_enforced() {
        let e9 = group("E9");
        let err = e9.minimal_coset_reps(&NodeSubset::new(0..8), 8, 5).unwrap_err();
        assert_eq!(err, WeylError::BudgetExceeded { completed_length: 4, budget: 5 });
    }

    #[test]
    fn length_additive_factorization_through_minimal_reps() {
        // every element of length l in the whole group splits uniquely as
        // (minimal rep of length k) * (parabolic element of length l - k)
        let e9 = group("E9");
        let j = NodeSubset::new(0..8);
        let full = e9.growth_series(6, 100_000).unwrap();
        let reps = e9.minimal_coset_reps(&j, 6, 100_000).unwrap().sizes();
        let e8 = group("E8").growth_series(6, 100_000).unwrap();
        for l in 0..=6 {
            let conv: u64 = (0..=l).map(|k| reps[k] * e8[l - k]).sum();
            assert_eq!(conv, full[l], "length {l}");
        }
    }

    #[test]
    fn determinant_parity_matches_length() {
        let d4 = group("D4");
        for w in d4.enumerate_by_length(5, 10_000).unwrap().iter() {
            let det = w.determinant().unwrap();
            assert_eq!(det, if w.length() % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn rank_zero_group_is_trivial() {
        let empty = GeneralizedCartanMatrix::validate(&[]).unwrap();
        let g = WeylGroup::new(&empty);
        assert_eq!(g.growth_series(3, 10).unwrap(), vec![1, 0, 0, 0]);
    }
}
