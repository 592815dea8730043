//! Pure braids: strand removal and combing into free-group coordinates.
//!
//! In `B_m` write `x_k = ι(x_k) = (σ_{m-1}^{-1} ⋯ σ_{k+1}^{-1}) σ_k^2 (σ_{k+1} ⋯ σ_{m-1})`,
//! the pure braid where strand `k` loops around the last strand. Combing
//! writes a braid that fixes the last strand as `ι(F) · S`, with `F` a word in
//! `x_1, ..., x_{m-1}` and `S` a braid on the first `m - 1` strands.

use crate::error::{BraidError, Result};
use crate::free_group::FreeWord;
use crate::words::BraidWord;

pub fn is_pure(w: &BraidWord) -> bool {
    w.permutation().is_identity()
}

/// The word `ι(x_i)` in `B_ambient`.
pub fn pure_generator(i: usize, ambient: usize) -> Result<BraidWord> {
    if i == 0 || i >= ambient {
        return Err(BraidError::IndexOutOfRange {
            index: i as i64,
            strands: ambient,
        });
    }
    let top = ambient as i32 - 1;
    let i = i as i32;
    let mut letters: Vec<i32> = ((i + 1)..=top).rev().map(|k| -k).collect();
    letters.extend([i, i]);
    letters.extend((i + 1)..=top);
    Ok(BraidWord::from_letters_unchecked(ambient, letters))
}

/// Final position (1-based) of the strand starting at position `start`.
fn track(w: &BraidWord, start: usize) -> usize {
    let mut j = start;
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        if i == j {
            j += 1;
        } else if i + 1 == j {
            j -= 1;
        }
    }
    j
}

/// Deletes the last strand, provided it ends where it started.
pub fn remove_last_strand(w: &BraidWord) -> Result<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return Err(BraidError::InvalidArgument(
            "cannot remove a strand from a braid with fewer than 2 strands".into(),
        ));
    }
    if track(w, n) != n {
        return Err(BraidError::LastStrandMoves);
    }
    let mut j = n;
    let mut letters = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        if i == j {
            j += 1;
        } else if i + 1 == j {
            j -= 1;
        } else if i < j {
            letters.push(l);
        } else {
            letters.push(l.signum() * (i as i32 - 1));
        }
    }
    Ok(BraidWord::from_letters_unchecked(n - 1, letters))
}

/// The same letters viewed in `B_{n+1}` with an extra straight strand.
pub fn include_strand(w: &BraidWord) -> BraidWord {
    BraidWord::from_letters_unchecked(w.strands() + 1, w.letters().to_vec())
}

/// Free-group coordinates of a pure braid, top level first. The level for
/// `B_k` is a word in `F_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombingCoordinates {
    pub levels: Vec<FreeWord>,
}

impl CombingCoordinates {
    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(FreeWord::is_empty)
    }

    /// Rebuilds a braid word in `B_n` as `ι(L_n) ι(L_{n-1}) ⋯ ι(L_2)`.
    pub fn reconstruct(&self, n: usize) -> BraidWord {
        let mut letters = Vec::new();
        for level in &self.levels {
            let ambient = level.rank() + 1;
            for &l in level.letters() {
                let g = pure_generator(l.unsigned_abs() as usize, ambient)
                    .expect("level letters are in range");
                let g = if l < 0 { g.invert() } else { g };
                letters.extend_from_slice(g.letters());
            }
        }
        BraidWord::from_letters_unchecked(n, letters)
    }
}

/// One combing step in `B_m`: returns `(F, S)` with `w = ι(F) · S`.
fn comb_level(w: &BraidWord) -> (FreeWord, BraidWord) {
    let m = w.strands();
    let rank = m - 1;
    // psi[k] = S x_{k+1} S^{-1} for the σ-word S emitted so far
    let mut psi: Vec<FreeWord> = (1..=rank).map(|k| FreeWord::generator(rank, k)).collect();
    let mut f = FreeWord::identity(rank);
    let mut s = Vec::new();
    let mut j = m;
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let e = l.signum();
        if i == j {
            if e < 0 {
                f = f.mul(&psi[j - 1].inverse());
            }
            j += 1;
        } else if i + 1 == j {
            if e > 0 {
                f = f.mul(&psi[j - 2]);
            }
            j -= 1;
        } else {
            // the letter passes on one side of the tracked strand
            let k = if i < j { i } else { i - 1 };
            s.push(e * k as i32);
            let (a, b) = (psi[k - 1].clone(), psi[k].clone());
            if e > 0 {
                // σ_k x_k σ_k^{-1} = x_k^{-1} x_{k+1} x_k, σ_k x_{k+1} σ_k^{-1} = x_k
                psi[k - 1] = a.conjugate(&b);
                psi[k] = a;
            } else {
                // σ_k^{-1} x_k σ_k = x_{k+1}, σ_k^{-1} x_{k+1} σ_k = x_{k+1} x_k x_{k+1}^{-1}
                psi[k] = b.inverse().conjugate(&a);
                psi[k - 1] = b;
            }
        }
    }
    debug_assert_eq!(j, m);
    (f, BraidWord::from_letters_unchecked(m - 1, s))
}

pub fn comb(w: &BraidWord) -> Result<CombingCoordinates> {
    if !is_pure(w) {
        return Err(BraidError::NotPure);
    }
    let mut levels = Vec::new();
    let mut cur = w.clone();
    while cur.strands() >= 2 {
        let (f, rest) = comb_level(&cur);
        levels.push(f);
        cur = rest;
    }
    Ok(CombingCoordinates { levels })
}

pub fn is_trivial_pure(w: &BraidWord) -> Result<bool> {
    Ok(comb(w)?.is_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::equal;
    use proptest::prelude::*;

    fn bw(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn purity_examples() {
        assert!(is_pure(&bw(3, &[1, 1])));
        assert!(!is_pure(&bw(3, &[1])));
        assert!(is_pure(&bw(3, &[1, 2]).power(3)));
    }

    #[test]
    fn pure_generator_examples() {
        assert_eq!(pure_generator(3, 4).unwrap(), bw(4, &[3, 3]));
        assert_eq!(pure_generator(1, 3).unwrap(), bw(3, &[-2, 1, 1, 2]));
        for m in 2..=6 {
            for i in 1..m {
                assert!(is_pure(&pure_generator(i, m).unwrap()));
            }
        }
        assert!(pure_generator(3, 3).is_err());
        assert!(pure_generator(0, 3).is_err());
    }

    #[test]
    fn strand_removal_examples() {
        assert_eq!(remove_last_strand(&bw(3, &[1, 1])).unwrap(), bw(2, &[1, 1]));
        assert!(remove_last_strand(&pure_generator(1, 3).unwrap()).unwrap().is_empty());
        assert_eq!(
            remove_last_strand(&bw(3, &[2])),
            Err(BraidError::LastStrandMoves)
        );
        for m in 2..=6 {
            for i in 1..m {
                let g = remove_last_strand(&pure_generator(i, m).unwrap()).unwrap();
                assert!(equal(&g, &BraidWord::identity(m - 1)).unwrap());
            }
        }
        // a letter on the far side of the tracked strand is renumbered
        assert_eq!(remove_last_strand(&bw(4, &[3, 2, 2, 3])).unwrap(), bw(3, &[]));
        assert_eq!(
            remove_last_strand(&bw(4, &[-3, -2, 3, 2, 3])).unwrap(),
            bw(3, &[2])
        );
    }

    #[test]
    fn include_strand_examples() {
        assert_eq!(include_strand(&bw(2, &[1])), bw(3, &[1]));
        assert_eq!(include_strand(&bw(2, &[])), bw(3, &[]));
    }

    #[test]
    fn comb_examples() {
        for n in 2..=5 {
            let c = comb(&bw(n, &[n as i32 - 1, n as i32 - 1])).unwrap();
            assert_eq!(c.levels.len(), n - 1);
            assert_eq!(c.levels[0].letters(), &[n as i32 - 1]);
            assert!(c.levels[1..].iter().all(FreeWord::is_empty));
        }
        assert!(comb(&bw(4, &[])).unwrap().is_trivial());
        let c = comb(&pure_generator(1, 3).unwrap()).unwrap();
        assert_eq!(c.levels[0].letters(), &[1]);
        assert!(c.levels[1].is_empty());
        assert_eq!(comb(&bw(3, &[1])), Err(BraidError::NotPure));
    }

    #[test]
    fn triviality_examples() {
        let a = bw(3, &[1, 1]);
        let b = bw(3, &[2, 2]);
        let commutator = a.concat(&b).unwrap().concat(&a.invert()).unwrap().concat(&b.invert()).unwrap();
        assert!(!is_trivial_pure(&commutator).unwrap());
        assert!(is_trivial_pure(&bw(3, &[1, 2, 1, -2, -1, -2])).unwrap());
        assert!(is_trivial_pure(&bw(3, &[])).unwrap());
    }

    /// Checks each conjugation rule used while pushing σ-letters right.
    #[test]
    fn conjugation_rules_hold() {
        for m in 3..=6 {
            let x = |k: usize| pure_generator(k, m).unwrap();
            let s = |l: i32| bw(m, &[l]);
            let conj = |l: i32, w: &BraidWord| s(l).concat(w).unwrap().concat(&s(-l)).unwrap();
            for k in 1..m - 1 {
                let kk = k as i32;
                let lhs = conj(kk, &x(k));
                let rhs = x(k).invert().concat(&x(k + 1)).unwrap().concat(&x(k)).unwrap();
                assert!(equal(&lhs, &rhs).unwrap());
                assert!(equal(&conj(kk, &x(k + 1)), &x(k)).unwrap());
                assert!(equal(&conj(-kk, &x(k)), &x(k + 1)).unwrap());
                let rhs = x(k + 1).concat(&x(k)).unwrap().concat(&x(k + 1).invert()).unwrap();
                assert!(equal(&conj(-kk, &x(k + 1)), &rhs).unwrap());
                for j in 1..m {
                    if j != k && j != k + 1 {
                        assert!(equal(&conj(kk, &x(j)), &x(j)).unwrap());
                        assert!(equal(&conj(-kk, &x(j)), &x(j)).unwrap());
                    }
                }
            }
        }
    }

    fn pure_word() -> impl Strategy<Value = BraidWord> {
        (2usize..=5).prop_flat_map(|n| {
            let m = n as i32 - 1;
            proptest::collection::vec((1..=m, any::<bool>()), 0..12).prop_map(move |v| {
                let letters: Vec<i32> = v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
                let w = BraidWord::new(n, letters).unwrap();
                // w followed by a positive word for the inverse permutation is pure
                let fix = crate::simple::SimpleElement::from_permutation(&w.permutation().inverse());
                w.concat(&fix.to_word()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reconstruction_is_equal(w in pure_word()) {
            let c = comb(&w).unwrap();
            for (idx, level) in c.levels.iter().enumerate() {
                prop_assert_eq!(level.rank(), w.strands() - 1 - idx);
            }
            prop_assert!(equal(&c.reconstruct(w.strands()), &w).unwrap());
        }

        #[test]
        fn triviality_agrees_with_normal_form(w in pure_word()) {
            let trivial = equal(&w, &BraidWord::identity(w.strands())).unwrap();
            prop_assert_eq!(is_trivial_pure(&w).unwrap(), trivial);
        }

        #[test]
        fn removal_is_a_section(w in pure_word()) {
            prop_assert_eq!(remove_last_strand(&include_strand(&w)).unwrap(), w.clone());
            let top_trivial = comb(&w).unwrap().levels[0].is_empty();
            let rest = remove_last_strand(&w).unwrap();
            if top_trivial && equal(&rest, &BraidWord::identity(rest.strands())).unwrap() {
                prop_assert!(equal(&w, &BraidWord::identity(w.strands())).unwrap());
            }
        }

        #[test]
        fn removal_is_a_homomorphism(a in pure_word(), b in pure_word()) {
            prop_assume!(a.strands() == b.strands());
            let ab = remove_last_strand(&a.concat(&b).unwrap()).unwrap();
            let sep = remove_last_strand(&a).unwrap().concat(&remove_last_strand(&b).unwrap()).unwrap();
            prop_assert!(equal(&ab, &sep).unwrap());
        }
    }
}
