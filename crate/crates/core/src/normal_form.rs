//! Left normal form `Δ^p a_1 ⋯ a_r`.
//!
//! Normal forms are built incrementally: multiplying a normal form by a
//! simple element on the right only disturbs a suffix of the factor list, and
//! on the left only a prefix, so each letter costs one short local pass.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::simple::SimpleElement;
use crate::words::{ensure_same_strands, BraidWord};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftNormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<SimpleElement>,
}

impl LeftNormalForm {
    pub fn identity(strands: usize) -> Self {
        LeftNormalForm {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(strands: usize, p: i64) -> Self {
        LeftNormalForm {
            strands,
            inf: p,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(s: &SimpleElement) -> Self {
        let mut nf = Self::identity(s.strands());
        nf.mul_simple_right(s);
        nf
    }

    /// Normalizes `Δ^inf · factors` for arbitrary simple factors, sweeping
    /// adjacent pairs left to right until every pair is left-weighted.
    pub fn from_parts(strands: usize, inf: i64, factors: Vec<SimpleElement>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(f) = factors.iter().find(|f| f.strands() != strands) {
            return Err(BraidError::StrandMismatch {
                left: strands,
                right: f.strands(),
            });
        }
        let mut nf = LeftNormalForm {
            strands,
            inf,
            factors,
        };
        loop {
            nf.tidy();
            let mut changed = false;
            for i in 0..nf.factors.len().saturating_sub(1) {
                let t = nf.factors[i].right_complement().meet(&nf.factors[i + 1]);
                if !t.is_identity() {
                    nf.factors[i] = nf.factors[i].mul(&t);
                    nf.factors[i + 1] = t.left_quotient(&nf.factors[i + 1]);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        nf.tidy();
        Ok(nf)
    }

    /// Normal form of a braid word.
    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut negatives_after = w.letters().iter().filter(|&&l| l < 0).count() as i64;
        let mut nf = Self::delta_power(n, -negatives_after);
        for &l in w.letters() {
            let atom = atom_unchecked(n, l.unsigned_abs() as usize);
            if l > 0 {
                nf.mul_simple_right(&atom.tau(negatives_after));
            } else {
                // σ_i^{-1} = ∂σ_i · Δ^{-1}; every Δ^{-1} is moved to the front,
                // twisting the factors it passes by τ.
                nf.mul_simple_right(&atom.right_complement().tau(negatives_after));
                negatives_after -= 1;
            }
        }
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SimpleElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// `|inf|` copies of `Δ^{±1}` followed by the factor words.
    pub fn to_word(&self) -> BraidWord {
        let delta = SimpleElement::delta(self.strands).to_word();
        let delta_block = if self.inf < 0 { delta.invert() } else { delta };
        let mut letters = Vec::new();
        for _ in 0..self.inf.unsigned_abs() {
            letters.extend_from_slice(delta_block.letters());
        }
        for f in &self.factors {
            letters.extend_from_slice(f.to_word().letters());
        }
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    /// Checks properness and left-weightedness of the factor list.
    pub fn is_normal(&self) -> bool {
        self.factors
            .iter()
            .all(|f| !f.is_identity() && !f.is_delta() && f.strands() == self.strands)
            && self
                .factors
                .windows(2)
                .all(|w| w[0].is_left_weighted_with(&w[1]))
    }

    /// Conjugation by `Δ^k`: `Δ^{-k} x Δ^k`.
    pub fn tau(&self, k: i64) -> Self {
        LeftNormalForm {
            strands: self.strands,
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.tau(k)).collect(),
        }
    }

    /// `self ← self · Δ^k`.
    pub fn mul_delta_right(&mut self, k: i64) {
        self.inf += k;
        if k % 2 != 0 {
            for f in &mut self.factors {
                *f = f.tau(k);
            }
        }
    }

    /// `self ← Δ^k · self`.
    pub fn mul_delta_left(&mut self, k: i64) {
        self.inf += k;
    }

    /// `self ← self · s`.
    pub fn mul_simple_right(&mut self, s: &SimpleElement) {
        debug_assert_eq!(s.strands(), self.strands);
        if s.is_identity() {
            return;
        }
        if s.is_delta() {
            self.mul_delta_right(1);
            return;
        }
        self.factors.push(s.clone());
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let t = self.factors[i - 1]
                .right_complement()
                .meet(&self.factors[i]);
            if t.is_identity() {
                break;
            }
            self.factors[i - 1] = self.factors[i - 1].mul(&t);
            self.factors[i] = t.left_quotient(&self.factors[i]);
            i -= 1;
        }
        self.tidy();
    }

    /// `self ← s · self`.
    pub fn mul_simple_left(&mut self, s: &SimpleElement) {
        debug_assert_eq!(s.strands(), self.strands);
        // s · Δ^p A = Δ^p · τ^p(s) · A
        let carry = s.tau(self.inf);
        if carry.is_identity() {
            return;
        }
        if carry.is_delta() {
            self.inf += 1;
            return;
        }
        let old = std::mem::take(&mut self.factors);
        let mut out = Vec::with_capacity(old.len() + 1);
        let mut carry = carry;
        let mut rest = old.into_iter();
        loop {
            let Some(a) = rest.next() else {
                out.push(carry);
                break;
            };
            let t = carry.right_complement().meet(&a);
            if t.is_identity() {
                out.push(carry);
                out.push(a);
                out.extend(rest);
                break;
            }
            out.push(carry.mul(&t));
            carry = t.left_quotient(&a);
        }
        self.factors = out;
        self.tidy();
    }

    /// Drops identity factors and absorbs `Δ` factors into the power.
    fn tidy(&mut self) {
        if self
            .factors
            .iter()
            .all(|f| !f.is_identity() && !f.is_delta())
        {
            return;
        }
        let old = std::mem::take(&mut self.factors);
        for f in old {
            if f.is_identity() {
                continue;
            }
            if f.is_delta() {
                // A Δ in the middle is moved to the front past the factors before it.
                self.inf += 1;
                for g in &mut self.factors {
                    *g = g.tau(1);
                }
                continue;
            }
            self.factors.push(f);
        }
    }

    pub fn product(&self, other: &LeftNormalForm) -> Result<LeftNormalForm> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        if other.factors.len() <= self.factors.len() {
            // Δ^p A · Δ^q B = Δ^{p+q} τ^q(A) B
            let mut out = LeftNormalForm {
                strands: self.strands,
                inf: self.inf + other.inf,
                factors: self.factors.iter().map(|f| f.tau(other.inf)).collect(),
            };
            for f in &other.factors {
                out.mul_simple_right(f);
            }
            Ok(out)
        } else {
            let mut out = other.clone();
            for f in self.factors.iter().rev() {
                out.mul_simple_left(f);
            }
            out.inf += self.inf;
            Ok(out)
        }
    }

    pub fn inverse(&self) -> LeftNormalForm {
        // a^{-1} = Δ^{-1} · (Δ a^{-1}), and Δ a^{-1} is the left complement of a.
        let mut out = LeftNormalForm::delta_power(self.strands, -self.inf);
        for f in &self.factors {
            out.mul_simple_left(&f.left_complement());
            out.inf -= 1;
            debug_assert!(out.is_normal());
        }
        out
    }

    /// `s^{-1} · self · s`.
    pub fn conjugate_by_simple(&self, s: &SimpleElement) -> LeftNormalForm {
        let mut out = self.clone();
        out.mul_simple_right(s);
        // s^{-1} = Δ^{-1} · (Δ s^{-1})
        out.mul_simple_left(&s.left_complement());
        out.inf -= 1;
        out
    }

    /// `c^{-1} · self · c`.
    pub fn conjugate(&self, c: &LeftNormalForm) -> Result<LeftNormalForm> {
        c.inverse().product(self)?.product(c)
    }

    pub fn exponent_sum(&self) -> i64 {
        let n = self.strands as i64;
        self.inf * n * (n - 1) / 2 + self.factors.iter().map(|f| f.letter_len() as i64).sum::<i64>()
    }

    /// Image under word reversal (an anti-automorphism), as a normal form.
    pub fn reverse(&self) -> LeftNormalForm {
        // rev(Δ^p a_1 ⋯ a_r) = rev(a_r) ⋯ rev(a_1) Δ^p
        let mut out = LeftNormalForm::identity(self.strands);
        for f in self.factors.iter().rev() {
            out.mul_simple_right(&f.reverse());
        }
        out.mul_delta_right(self.inf);
        out
    }

    /// The factor sequence and power as a JSON-friendly view.
    pub fn factor_images(&self) -> Vec<Vec<usize>> {
        self.factors
            .iter()
            .map(|f| f.permutation().one_based())
            .collect()
    }
}

pub(crate) fn atom_unchecked(n: usize, i: usize) -> SimpleElement {
    SimpleElement::atom(n, i).expect("letter validated by BraidWord")
}

/// Normal form of a braid word.
pub fn normal_form(w: &BraidWord) -> LeftNormalForm {
    LeftNormalForm::from_word(w)
}

/// Whether two words represent the same braid.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    ensure_same_strands(a, b)?;
    Ok(normal_form(a) == normal_form(b))
}

impl fmt::Debug for LeftNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftNormalForm(n={}, {self})", self.strands)
    }
}

/// `D^p | [w_1] [w_2] ...`, each factor written as its canonical word.
impl fmt::Display for LeftNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.inf)?;
        for factor in &self.factors {
            write!(f, " [{}]", factor.to_word())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn nf(n: usize, letters: &[i32]) -> LeftNormalForm {
        normal_form(&w(n, letters))
    }

    fn simple(n: usize, letters: &[i32]) -> SimpleElement {
        SimpleElement::from_word(&w(n, letters)).unwrap()
    }

    #[test]
    fn examples() {
        let x = nf(3, &[1, 2, 1, 2]);
        assert_eq!(x.inf(), 1);
        assert_eq!(x.factors(), &[simple(3, &[2])]);
        assert_eq!(x.to_string(), "D^1 | [2]");

        let y = nf(3, &[-1]);
        assert_eq!(y.inf(), -1);
        assert_eq!(y.factors(), &[simple(3, &[1, 2])]);

        let d3 = SimpleElement::delta(4).to_word().power(3);
        assert_eq!(normal_form(&d3), LeftNormalForm::delta_power(4, 3));
        assert!(nf(4, &[]).is_identity());
    }

    #[test]
    fn serialization_examples() {
        assert!(LeftNormalForm::identity(3).to_word().is_empty());
        assert_eq!(LeftNormalForm::delta_power(3, 1).to_word(), w(3, &[1, 2, 1]));
        let y = nf(3, &[-1]);
        assert_eq!(y.to_word(), w(3, &[-1, -2, -1, 1, 2]));
        assert_eq!(normal_form(&y.to_word()), y);
    }

    #[test]
    fn equality_examples() {
        assert!(equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        let a = w(4, &[1, 2]).power(3);
        let b = w(4, &[2, 1]).power(3);
        assert!(equal(&a, &b).unwrap());
        assert!(!equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(equal(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn product_and_inverse_examples() {
        let one = nf(3, &[1]).product(&nf(3, &[-1])).unwrap();
        assert!(one.is_identity());
        assert_eq!(nf(3, &[1, 2, 1]).inverse(), LeftNormalForm::delta_power(3, -1));
        let p = nf(3, &[1, 2, 1]).product(&nf(3, &[1])).unwrap();
        assert_eq!(p.inf(), 1);
        assert_eq!(p.factors(), &[simple(3, &[1])]);
    }

    #[test]
    fn delta_twists_generators() {
        for n in 2..=6 {
            let d = SimpleElement::delta(n).to_word();
            for i in 1..n as i32 {
                let lhs = w(n, &[i]).concat(&d).unwrap();
                let rhs = d.concat(&w(n, &[n as i32 - i])).unwrap();
                assert!(equal(&lhs, &rhs).unwrap());
            }
        }
    }

    #[test]
    fn from_parts_agrees_with_incremental() {
        let n = 4;
        let all = SimpleElement::all(n);
        for (k, a) in all.iter().enumerate() {
            let b = &all[(k * 7 + 3) % all.len()];
            let c = &all[(k * 5 + 11) % all.len()];
            let swept = LeftNormalForm::from_parts(n, 1, vec![a.clone(), b.clone(), c.clone()]).unwrap();
            let mut inc = LeftNormalForm::delta_power(n, 1);
            for s in [a, b, c] {
                inc.mul_simple_right(s);
            }
            assert_eq!(swept, inc);
            assert!(swept.is_normal());
        }
    }

    fn word_strategy() -> impl Strategy<Value = BraidWord> {
        (2usize..=5).prop_flat_map(|n| {
            let m = n as i32 - 1;
            proptest::collection::vec((1..=m, any::<bool>()), 0..30).prop_map(move |v| {
                let letters = v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
                BraidWord::new(n, letters).unwrap()
            })
        })
    }

    fn word_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
        (2usize..=5).prop_flat_map(|n| {
            let m = n as i32 - 1;
            let one = proptest::collection::vec((1..=m, any::<bool>()), 0..20).prop_map(move |v| {
                let letters = v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
                BraidWord::new(n, letters).unwrap()
            });
            (one.clone(), one)
        })
    }

    proptest! {
        #[test]
        fn output_is_normal_and_fixed(a in word_strategy()) {
            let x = normal_form(&a);
            prop_assert!(x.is_normal());
            prop_assert_eq!(normal_form(&x.to_word()), x);
        }

        #[test]
        fn left_and_right_construction_agree(a in word_strategy()) {
            let right = normal_form(&a);
            let n = a.strands();
            let mut left = LeftNormalForm::identity(n);
            for &l in a.letters().iter().rev() {
                let i = l.unsigned_abs() as usize;
                if l > 0 {
                    left.mul_simple_left(&atom_unchecked(n, i));
                } else {
                    // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1})
                    left.mul_simple_left(&atom_unchecked(n, i).left_complement());
                    left.mul_delta_left(-1);
                }
                prop_assert!(left.is_normal());
            }
            prop_assert_eq!(left, right);
        }

        #[test]
        fn homomorphisms_are_consistent(a in word_strategy()) {
            let x = normal_form(&a);
            prop_assert_eq!(x.exponent_sum(), a.exponent_sum());
            prop_assert_eq!(x.to_word().permutation(), a.permutation());
            prop_assert_eq!(x.sup(), x.inf() + x.canonical_length() as i64);
        }

        #[test]
        fn product_and_inverse_match_words((a, b) in word_pair()) {
            let x = normal_form(&a);
            let y = normal_form(&b);
            prop_assert_eq!(x.product(&y).unwrap(), normal_form(&a.concat(&b).unwrap()));
            prop_assert_eq!(y.product(&x).unwrap(), normal_form(&b.concat(&a).unwrap()));
            prop_assert_eq!(x.inverse(), normal_form(&a.invert()));
            prop_assert!(x.product(&x.inverse()).unwrap().is_identity());
        }

        #[test]
        fn reverse_matches_word_reversal(a in word_strategy()) {
            prop_assert_eq!(normal_form(&a).reverse(), normal_form(&a.reverse()));
        }

        #[test]
        fn simple_conjugation_matches_words(a in word_strategy(), k in 0usize..200) {
            let n = a.strands();
            let all = SimpleElement::all(n);
            let s = &all[k % all.len()];
            let sw = s.to_word();
            let expected = normal_form(&sw.invert().concat(&a).unwrap().concat(&sw).unwrap());
            prop_assert_eq!(normal_form(&a).conjugate_by_simple(s), expected);
        }

        #[test]
        fn free_reduce_preserves_braid(a in word_strategy()) {
            prop_assert_eq!(normal_form(&a.free_reduce()), normal_form(&a));
        }
    }
}
