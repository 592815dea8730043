//! Reduced words in the free group `F_n` on `x_1, ..., x_n`.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::words::{parse_letters, write_letters};

/// Letter `j > 0` is `x_j`, letter `-j` is `x_j^{-1}`. Always freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(BraidError::IndexOutOfRange {
                    index: l as i64,
                    strands: rank + 1,
                });
            }
        }
        Ok(Self::reduced(rank, letters))
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        Self::new(rank, parse_letters(text)?)
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, j: usize) -> Self {
        debug_assert!(j >= 1 && j <= rank);
        FreeWord {
            rank,
            letters: vec![j as i32],
        }
    }

    /// `x_1 x_2 ⋯ x_n`.
    pub fn boundary(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: (1..=rank as i32).collect(),
        }
    }

    fn reduced(rank: usize, letters: Vec<i32>) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(letters.len());
        for l in letters {
            push_reduced(&mut out, l);
        }
        FreeWord { rank, letters: out }
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FreeWord {
            rank: self.rank,
            letters: out,
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, e: i32) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `self^{-1} · w · self`.
    pub fn conjugate(&self, w: &FreeWord) -> FreeWord {
        self.inverse().mul(w).mul(self)
    }

    /// Strips matching inverse letters from both ends.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let l = &self.letters;
        let (mut a, mut b) = (0, l.len());
        while b - a >= 2 && l[a] == -l[b - 1] {
            a += 1;
            b -= 1;
        }
        FreeWord {
            rank: self.rank,
            letters: l[a..b].to_vec(),
        }
    }

    /// `Some(j)` when the word is a conjugate of the generator `x_j`.
    pub fn conjugate_of_generator(&self) -> Option<usize> {
        match self.cyclic_reduce().letters.as_slice() {
            [j] if *j > 0 => Some(*j as usize),
            _ => None,
        }
    }

    /// Replaces each `x_j` by `images[j - 1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &m in &img.letters {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut out, -m);
                }
            }
        }
        FreeWord { rank, letters: out }
    }
}

#[inline]
fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord(F_{}: {self})", self.rank)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}
