//! Periodic and central braids.

use std::fmt;

use crate::conjugacy::are_conjugate;
use crate::error::{BraidError, Result};
use crate::normal_form::normal_form;
use crate::words::BraidWord;

/// `δ = σ_1 σ_2 ⋯ σ_{n-1}`.
pub fn delta_braid(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::InvalidArgument(format!(
            "δ needs at least 2 strands, got {n}"
        )));
    }
    BraidWord::new(n, (1..n as i32).collect())
}

/// `ε = σ_1 δ = σ_1 σ_1 σ_2 ⋯ σ_{n-1}`.
pub fn epsilon_braid(n: usize) -> Result<BraidWord> {
    let d = delta_braid(n)?;
    BraidWord::new(n, vec![1]).and_then(|s| s.concat(&d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodicBase {
    Delta,
    Epsilon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Periodicity {
    pub base: PeriodicBase,
    pub power: i64,
}

impl fmt::Display for Periodicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            PeriodicBase::Delta => "delta",
            PeriodicBase::Epsilon => "epsilon",
        };
        write!(f, "{base} {}", self.power)
    }
}

/// Whether `x` is conjugate to a power of `δ` or of `ε`. The exponent sum
/// fixes the only possible power, so at most two conjugacy tests run.
pub fn is_periodic(x: &BraidWord, max_vertices: usize) -> Result<Option<Periodicity>> {
    let n = x.strands();
    if n == 1 {
        return Ok(Some(Periodicity {
            base: PeriodicBase::Delta,
            power: 0,
        }));
    }
    let s = x.exponent_sum();
    let candidates = [
        (PeriodicBase::Delta, n as i64 - 1, delta_braid(n)?),
        (PeriodicBase::Epsilon, n as i64, epsilon_braid(n)?),
    ];
    for (base, per, word) in candidates {
        if s % per != 0 {
            continue;
        }
        let k = s / per;
        if are_conjugate(x, &word.power(k), max_vertices)?.is_some() {
            return Ok(Some(Periodicity { base, power: k }));
        }
    }
    Ok(None)
}

/// Membership in the center: `⟨Δ^2⟩` for `n > 2`, `⟨Δ⟩` for `n = 2`.
pub fn is_central(x: &BraidWord) -> bool {
    let nf = normal_form(x);
    match x.strands() {
        1 => true,
        2 => nf.canonical_length() == 0,
        _ => nf.canonical_length() == 0 && nf.inf() % 2 == 0,
    }
}

pub fn power(x: &BraidWord, k: i64) -> BraidWord {
    x.power(k)
}
