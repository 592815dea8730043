//! Permutations of strand positions.
//!
//! Points are stored 0-based; the public one-based views exist for
//! serialization and display. The permutation of a braid maps each final
//! position to the starting position of the strand that ends there, so that
//! the permutation of a product `ab` is the function composite `P(a) ∘ P(b)`.

use std::fmt;

use crate::error::{BraidError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The reversal `i -> n - 1 - i`, which is the permutation of the half twist.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    /// Swap of positions `i` and `i + 1` (0-based), the image of the atom `σ_{i+1}`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(BraidError::InvalidArgument(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(BraidError::InvalidArgument(
                "one-based images must be positive".into(),
            ));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// Function composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ (i i+1)`, in place.
    pub(crate) fn swap_sources(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// `(i i+1) ∘ self`, in place.
    pub(crate) fn swap_targets(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }

    /// Cycles in standard form: each starting at its smallest point, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths (fixed points included) in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.extend(std::iter::repeat_n(1, self.size() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_based())
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}
