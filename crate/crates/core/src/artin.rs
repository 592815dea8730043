//! Artin's action of `B_n` on the free group `F_n`.
//!
//! `σ_i` sends `x_i ↦ x_{i+1}` and `x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}`, fixing the
//! other generators. A braid word acts letter by letter starting from its first
//! letter, so `act(ab, w) = act(b, act(a, w))`.

use crate::error::{BraidError, Result};
use crate::free_group::FreeWord;
use crate::words::BraidWord;

fn check_rank(strands: usize, rank: usize) -> Result<()> {
    if strands != rank {
        return Err(BraidError::StrandMismatch {
            left: strands,
            right: rank,
        });
    }
    Ok(())
}

/// Images of `x_1, ..., x_n` under a single letter.
fn letter_images(rank: usize, letter: i32) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=rank).map(|j| FreeWord::generator(rank, j)).collect();
    let i = letter.unsigned_abs() as usize;
    let (xi, xj) = (FreeWord::generator(rank, i), FreeWord::generator(rank, i + 1));
    if letter > 0 {
        images[i - 1] = xj.clone();
        images[i] = xj.conjugate(&xi);
    } else {
        images[i] = xi.clone();
        images[i - 1] = xi.inverse().conjugate(&xj);
    }
    images
}

/// Applies `ρ_{σ_i}` (or its inverse for negative `i`) to `w`.
pub fn act_generator(letter: i32, w: &FreeWord) -> Result<FreeWord> {
    let i = letter.unsigned_abs() as usize;
    if letter == 0 || i >= w.rank() {
        return Err(BraidError::IndexOutOfRange {
            index: letter as i64,
            strands: w.rank(),
        });
    }
    Ok(w.substitute(&letter_images(w.rank(), letter)))
}

/// Images of all generators under `ρ_β`.
///
/// Letters are folded in from the last one, so each step only rewrites the two
/// table entries the letter touches.
pub fn generator_images(beta: &BraidWord) -> Vec<FreeWord> {
    let n = beta.strands();
    let mut img: Vec<FreeWord> = (1..=n).map(|j| FreeWord::generator(n, j)).collect();
    for &l in beta.letters().iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if l > 0 {
            img[i] = b.clone();
            img[i + 1] = b.conjugate(&a);
        } else {
            img[i + 1] = a.clone();
            img[i] = a.inverse().conjugate(&b);
        }
    }
    img
}

/// `ρ_β(w)`.
pub fn act(beta: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    check_rank(beta.strands(), w.rank())?;
    Ok(w.substitute(&generator_images(beta)))
}

/// Whether `ρ_β` fixes every generator, which by faithfulness means `β = 1`.
pub fn is_trivial_by_action(beta: &BraidWord) -> bool {
    generator_images(beta)
        .iter()
        .enumerate()
        .all(|(j, w)| w.letters() == [j as i32 + 1])
}

/// Artin's two conditions on `x_i ↦ images[i - 1]`: every image is a conjugate
/// of a generator, and `x_1 ⋯ x_n` is fixed.
pub fn is_braid_automorphism(images: &[FreeWord]) -> bool {
    let n = images.len();
    if images.iter().any(|w| w.rank() != n) {
        return false;
    }
    if images.iter().any(|w| w.conjugate_of_generator().is_none()) {
        return false;
    }
    let product = images
        .iter()
        .fold(FreeWord::identity(n), |acc, w| acc.mul(w));
    product == FreeWord::boundary(n)
}
