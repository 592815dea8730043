//! Braid words over the Artin generators.
//!
//! A letter `i > 0` stands for `σ_i`, a letter `-i` for `σ_i^{-1}`. The strand
//! count travels with the word; operations on two words insist on equal
//! strand counts.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            check_letter(l, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(strands >= 1);
        debug_assert!(letters.iter().all(|&l| check_letter(l, strands).is_ok()));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::from_letters_unchecked(strands.max(1), Vec::new())
    }

    /// Parses the word grammar: tokens separated by whitespace or commas, each
    /// either an optionally negated decimal index or a single letter alias
    /// (`a`..`y` for `σ_1`..`σ_25`, upper case for inverses).
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        let letters = parse_letters(text)?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive_word(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Cancels adjacent pairs `σ_i^{±1} σ_i^{∓1}` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord::from_letters_unchecked(self.strands, out)
    }

    /// The group inverse: letters reversed with signs flipped.
    pub fn invert(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&l| -l).collect();
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        ensure_same_strands(self, other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_letters_unchecked(self.strands, letters))
    }

    /// Letter order reversed, signs kept. This is the anti-automorphism that
    /// exchanges the prefix and suffix orders.
    pub fn reverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().copied().collect();
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The induced permutation, composed letter by letter as
    /// `(i_1 i_1+1) ∘ (i_2 i_2+1) ∘ ⋯`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p.swap_sources(l.unsigned_abs() as usize - 1);
        }
        p
    }

    /// `Δ^{-k} w Δ^{k}`: for odd `k` every index `i` becomes `n - i`.
    pub fn apply_tau(&self, k: i64) -> BraidWord {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let n = self.strands as i32;
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (n - l.abs()))
            .collect();
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    /// `k`-fold product, using the inverse for negative `k`.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    /// The same letters read in a group with a different number of strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, [{}])", self.strands, self)
    }
}

/// Canonical serialization: space-separated signed decimals.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[i32]) -> fmt::Result {
    let mut first = true;
    for l in letters {
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        write!(f, "{l}")?;
    }
    Ok(())
}

pub(crate) fn ensure_same_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    Ok(())
}

fn check_letter(l: i32, strands: usize) -> Result<()> {
    if l == 0 || l.unsigned_abs() as usize >= strands {
        return Err(BraidError::IndexOutOfRange {
            index: l as i64,
            strands,
        });
    }
    Ok(())
}

/// Tokenizes the word grammar into signed letters without range checks.
pub(crate) fn parse_letters(text: &str) -> Result<Vec<i32>> {
    let mut letters = Vec::new();
    let tokens = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty());
    for (position, token) in tokens.enumerate() {
        let syntax = |reason: &str| BraidError::Syntax {
            position,
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = token.chars();
        let first = chars.next().expect("tokens are non-empty");
        if token.len() == 1 && first.is_ascii_alphabetic() {
            let lower = first.to_ascii_lowercase();
            if lower == 'z' {
                return Err(syntax("letter aliases run from a to y"));
            }
            let index = (lower as u8 - b'a' + 1) as i32;
            letters.push(if first.is_ascii_uppercase() { -index } else { index });
            continue;
        }
        let digits = token.strip_prefix('-').unwrap_or(token);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax("expected a signed decimal index or a letter alias"));
        }
        let magnitude: i32 = digits
            .parse()
            .map_err(|_| syntax("index does not fit in 32 bits"))?;
        if magnitude == 0 {
            return Err(syntax("generator indices start at 1"));
        }
        letters.push(if token.starts_with('-') { -magnitude } else { magnitude });
    }
    Ok(letters)
}
