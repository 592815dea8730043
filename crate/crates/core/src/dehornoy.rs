//! Dehornoy's left-invariant order via handle reduction.
//!
//! A handle is a factor `σ_i^e v σ_i^{-e}` where `v` only uses generators of
//! index above `i`. Reducing it replaces each `σ_{i+1}^d` in `v` by
//! `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e` and drops the two ends. Once no handle is
//! left, the lowest generator occurs with a single sign, which is the sign of
//! the braid.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{BraidError, Result};
use crate::words::{ensure_same_strands, BraidWord};

pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// Position `(start, end)` of the handle whose end comes first.
///
/// `last_at_most[i]` holds the latest position seen so far carrying a letter of
/// index at most `i`; a letter `σ_i^{-e}` closes a handle exactly when that
/// position carries `σ_i^e`.
fn first_handle(letters: &[i32], strands: usize) -> Option<(usize, usize)> {
    let mut last_at_most: Vec<Option<usize>> = vec![None; strands];
    for (q, &l) in letters.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        if let Some(p) = last_at_most[i] {
            if letters[p] == -l {
                return Some((p, q));
            }
        }
        for slot in &mut last_at_most[i..] {
            *slot = Some(q);
        }
    }
    None
}

fn free_reduce_in_place(letters: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

/// Reduces every handle, spending at most `fuel` reduction steps.
pub fn handle_reduce_with_fuel(w: &BraidWord, fuel: u64) -> Result<BraidWord> {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    free_reduce_in_place(&mut letters);
    let mut steps = 0u64;
    while let Some((p, q)) = first_handle(&letters, n) {
        if steps >= fuel {
            return Err(BraidError::FuelExhausted { fuel });
        }
        steps += 1;
        let e = letters[p].signum();
        let i = letters[p].unsigned_abs() as i32;
        let mut out = Vec::with_capacity(letters.len() + 2 * (q - p));
        out.extend_from_slice(&letters[..p]);
        for &d in &letters[p + 1..q] {
            if d.abs() == i + 1 {
                out.extend([-e * (i + 1), d.signum() * i, e * (i + 1)]);
            } else {
                out.push(d);
            }
        }
        out.extend_from_slice(&letters[q + 1..]);
        free_reduce_in_place(&mut out);
        letters = out;
    }
    Ok(BraidWord::from_letters_unchecked(n, letters))
}

pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    handle_reduce_with_fuel(w, DEFAULT_FUEL)
}

/// Sign of a handle-free word, read off its lowest generator.
fn sign_of_reduced(w: &BraidWord) -> Result<Sign> {
    let Some(lowest) = w.letters().iter().map(|l| l.abs()).min() else {
        return Ok(Sign::Zero);
    };
    let mut signs = w
        .letters()
        .iter()
        .filter(|l| l.abs() == lowest)
        .map(|l| l.signum());
    let first = signs.next().expect("lowest index occurs");
    if signs.any(|s| s != first) {
        return Err(BraidError::Internal(format!(
            "handle-free word {w} uses σ_{lowest} with both signs"
        )));
    }
    Ok(if first > 0 { Sign::Positive } else { Sign::Negative })
}

pub fn sign_with_fuel(w: &BraidWord, fuel: u64) -> Result<Sign> {
    sign_of_reduced(&handle_reduce_with_fuel(w, fuel)?)
}

pub fn sign(w: &BraidWord) -> Result<Sign> {
    sign_with_fuel(w, DEFAULT_FUEL)
}

/// Compares `a` and `b`: `a < b` when `a^{-1} b` is σ-positive.
pub fn compare_with_fuel(a: &BraidWord, b: &BraidWord, fuel: u64) -> Result<Ordering> {
    ensure_same_strands(a, b)?;
    Ok(match sign_with_fuel(&a.invert().concat(b)?, fuel)? {
        Sign::Positive => Ordering::Less,
        Sign::Zero => Ordering::Equal,
        Sign::Negative => Ordering::Greater,
    })
}

pub fn compare(a: &BraidWord, b: &BraidWord) -> Result<Ordering> {
    compare_with_fuel(a, b, DEFAULT_FUEL)
}

pub fn less(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Ok(compare(a, b)? == Ordering::Less)
}
