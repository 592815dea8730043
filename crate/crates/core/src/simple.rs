//! Simple elements (permutation braids): the positive prefixes of the half
//! twist `Δ`, in bijection with permutations of the strands.
//!
//! A simple element is stored by its crossing map: entry `i` is the final
//! position of the strand starting at position `i`. Two strands cross in the
//! element exactly when the map inverts their order, and every pair crosses at
//! most once. The public [`SimpleElement::permutation`] uses the braid-word
//! convention of [`BraidWord::permutation`], which is the inverse of this map.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::words::BraidWord;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleElement {
    ends: Permutation,
}

impl SimpleElement {
    pub fn identity(n: usize) -> Self {
        SimpleElement {
            ends: Permutation::identity(n),
        }
    }

    /// The half twist `Δ = σ_1 (σ_2 σ_1) ⋯ (σ_{n-1} ⋯ σ_1)`.
    pub fn delta(n: usize) -> Self {
        SimpleElement {
            ends: Permutation::reversal(n),
        }
    }

    /// The atom `σ_i` (1-based).
    pub fn atom(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(BraidError::IndexOutOfRange {
                index: i as i64,
                strands: n,
            });
        }
        Ok(SimpleElement {
            ends: Permutation::adjacent_transposition(n, i - 1),
        })
    }

    /// The simple element whose braid permutation is `perm`.
    pub fn from_permutation(perm: &Permutation) -> Self {
        SimpleElement {
            ends: perm.inverse(),
        }
    }

    pub(crate) fn from_ends(ends: Permutation) -> Self {
        SimpleElement { ends }
    }

    /// Every simple element of `B_n`, ordered by crossing map.
    pub fn all(n: usize) -> Vec<SimpleElement> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut out = vec![SimpleElement::from_ends(Permutation::from_images_unchecked(
            images.clone(),
        ))];
        while next_permutation(&mut images) {
            out.push(SimpleElement::from_ends(Permutation::from_images_unchecked(
                images.clone(),
            )));
        }
        out
    }

    pub fn strands(&self) -> usize {
        self.ends.size()
    }

    /// Braid permutation, matching [`BraidWord::permutation`] of any word for this element.
    pub fn permutation(&self) -> Permutation {
        self.ends.inverse()
    }

    pub fn is_identity(&self) -> bool {
        self.ends.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.ends.images().iter().enumerate().all(|(i, &x)| x == n - 1 - i)
    }

    /// Letter length of any positive word for this element: the number of crossings.
    pub fn letter_len(&self) -> usize {
        let e = self.ends.images();
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Canonical positive word: strands are inserted one at a time from the
    /// left, each sliding left past the already-placed strands it must cross.
    /// For `Δ` this yields `σ_1 (σ_2 σ_1) ⋯ (σ_{n-1} ⋯ σ_1)`.
    pub fn to_word(&self) -> BraidWord {
        let e = self.ends.images();
        let mut letters = Vec::with_capacity(self.letter_len());
        for k in 1..e.len() {
            let passes = (0..k).filter(|&j| e[j] > e[k]).count();
            for step in 0..passes {
                letters.push((k - step) as i32);
            }
        }
        BraidWord::from_letters_unchecked(self.strands(), letters)
    }

    /// Reads a positive word in which no two strands cross twice.
    pub fn from_word(w: &BraidWord) -> Result<Self> {
        let n = w.strands();
        let mut at: Vec<usize> = (0..n).collect();
        let mut crossed = vec![false; n * n];
        for &l in w.letters() {
            if l < 0 {
                return Err(BraidError::NotPositive);
            }
            let i = l as usize - 1;
            let (a, b) = (at[i], at[i + 1]);
            let (lo, hi) = (a.min(b), a.max(b));
            if crossed[lo * n + hi] {
                return Err(BraidError::NotSimple {
                    first: lo + 1,
                    second: hi + 1,
                });
            }
            crossed[lo * n + hi] = true;
            at.swap(i, i + 1);
        }
        let mut ends = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            ends[strand] = pos;
        }
        Ok(SimpleElement::from_ends(Permutation::from_images_unchecked(ends)))
    }

    /// `σ_i ≼ self` for 1-based `i`: the strands starting at `i` and `i + 1` cross.
    #[inline]
    pub fn left_divides_atom(&self, i: usize) -> bool {
        let e = self.ends.images();
        e[i - 1] > e[i]
    }

    /// `self ≽ σ_i`: the strands ending at `i` and `i + 1` have crossed.
    pub fn atom_right_divides(&self, i: usize) -> bool {
        let starts = self.ends.inverse();
        starts.image(i - 1) > starts.image(i)
    }

    /// 1-based indices `i` with `σ_i ≼ self`.
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.strands())
            .filter(|&i| self.left_divides_atom(i))
            .collect()
    }

    /// 1-based indices `i` with `self ≽ σ_i`.
    pub fn finishing_set(&self) -> Vec<usize> {
        let starts = self.ends.inverse();
        (1..self.strands())
            .filter(|&i| starts.image(i - 1) > starts.image(i))
            .collect()
    }

    /// Product `self · other`, which must itself be simple.
    pub fn mul(&self, other: &SimpleElement) -> SimpleElement {
        debug_assert!(self.product_is_simple(other));
        SimpleElement::from_ends(other.ends.compose(&self.ends))
    }

    /// Whether `self · other` is simple, i.e. no pair of strands crosses in both.
    pub fn product_is_simple(&self, other: &SimpleElement) -> bool {
        let a = self.ends.images();
        let b = other.ends.images();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] > a[j] && b[a[j]] > b[a[i]] {
                    return false;
                }
            }
        }
        true
    }

    /// `self^{-1} · other` where `self ≼ other`.
    pub fn left_quotient(&self, other: &SimpleElement) -> SimpleElement {
        SimpleElement::from_ends(other.ends.compose(&self.ends.inverse()))
    }

    /// `other · self^{-1}` where `other ≽ self`.
    pub fn right_quotient(&self, other: &SimpleElement) -> SimpleElement {
        SimpleElement::from_ends(self.ends.inverse().compose(&other.ends))
    }

    /// `∂s = s^{-1} Δ`, the simple element with `s · ∂s = Δ`.
    pub fn right_complement(&self) -> SimpleElement {
        let n = self.strands();
        let starts = self.ends.inverse();
        let ends = starts.images().iter().map(|&x| n - 1 - x).collect();
        SimpleElement::from_ends(Permutation::from_images_unchecked(ends))
    }

    /// `Δ s^{-1}`, the simple element `c` with `c · s = Δ`.
    pub fn left_complement(&self) -> SimpleElement {
        let n = self.strands();
        let starts = self.ends.inverse();
        let ends = (0..n).map(|j| starts.image(n - 1 - j)).collect();
        SimpleElement::from_ends(Permutation::from_images_unchecked(ends))
    }

    /// Conjugation by `Δ^k`: for odd `k`, `σ_i ↦ σ_{n-i}`.
    pub fn tau(&self, k: i64) -> SimpleElement {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let n = self.strands();
        let e = self.ends.images();
        let ends = (0..n).map(|j| n - 1 - e[n - 1 - j]).collect();
        SimpleElement::from_ends(Permutation::from_images_unchecked(ends))
    }

    /// Image under word reversal, which swaps prefixes and suffixes.
    pub fn reverse(&self) -> SimpleElement {
        SimpleElement::from_ends(self.ends.inverse())
    }

    /// Greatest common prefix, found by peeling common atoms.
    pub fn meet(&self, other: &SimpleElement) -> SimpleElement {
        debug_assert_eq!(self.strands(), other.strands());
        let n = self.strands();
        let mut a = self.ends.clone();
        let mut b = other.ends.clone();
        let mut acc = Permutation::identity(n);
        loop {
            let common = (0..n.saturating_sub(1))
                .find(|&k| a.image(k) > a.image(k + 1) && b.image(k) > b.image(k + 1));
            let Some(k) = common else { break };
            a.swap_sources(k);
            b.swap_sources(k);
            acc.swap_targets(k);
        }
        SimpleElement::from_ends(acc)
    }

    /// Greatest common suffix.
    pub fn meet_right(&self, other: &SimpleElement) -> SimpleElement {
        self.reverse().meet(&other.reverse()).reverse()
    }

    /// Least common multiple in the prefix order, via complements:
    /// `s ∨ t = Δ · (∂s ∧_suffix ∂t)^{-1}`.
    pub fn join(&self, other: &SimpleElement) -> SimpleElement {
        let common_suffix = self
            .right_complement()
            .meet_right(&other.right_complement());
        common_suffix.left_complement()
    }

    /// `(self · next) ∧ Δ = self`, equivalently every atom starting `next` finishes `self`.
    pub fn is_left_weighted_with(&self, next: &SimpleElement) -> bool {
        let starts = self.ends.inverse();
        (1..self.strands()).all(|i| {
            !next.left_divides_atom(i) || starts.image(i - 1) > starts.image(i)
        })
    }
}

impl fmt::Debug for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple[{}]", self.to_word())
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
