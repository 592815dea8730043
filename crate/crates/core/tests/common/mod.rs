//! Seeded corpora and brute-force oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use braid_core::{generator_images, BraidWord, FreeWord, Permutation, SimpleElement};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_positive_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| rng.gen_range(1..n as i32)).collect();
    BraidWord::new(n, letters).unwrap()
}

/// One random move that preserves the braid: a far commutation, a braid
/// relation (all letters of one sign), or insertion/deletion of a cancelling pair.
fn relation_move(rng: &mut ChaCha8Rng, n: usize, l: &mut Vec<i32>) {
    for _ in 0..8 {
        let kind = rng.gen_range(0..4);
        match kind {
            0 if l.len() >= 2 => {
                let p = rng.gen_range(0..l.len() - 1);
                if (l[p].abs() - l[p + 1].abs()).abs() > 1 {
                    l.swap(p, p + 1);
                    return;
                }
            }
            1 if l.len() >= 3 => {
                let p = rng.gen_range(0..l.len() - 2);
                let (a, b, c) = (l[p], l[p + 1], l[p + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    l[p] = b;
                    l[p + 1] = a;
                    l[p + 2] = b;
                    return;
                }
            }
            2 => {
                let p = rng.gen_range(0..=l.len());
                let i = rng.gen_range(1..n as i32);
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                l.splice(p..p, [s * i, -s * i]);
                return;
            }
            3 if l.len() >= 2 => {
                if let Some(p) = (0..l.len() - 1).find(|&p| l[p] == -l[p + 1]) {
                    l.drain(p..p + 2);
                    return;
                }
            }
            _ => {}
        }
    }
}

/// Applies `moves` random relation moves; the result is the same braid.
pub fn shuffle_by_relations(rng: &mut ChaCha8Rng, w: &BraidWord, moves: usize) -> BraidWord {
    let mut l = w.letters().to_vec();
    for _ in 0..moves {
        relation_move(rng, w.strands(), &mut l);
    }
    BraidWord::new(w.strands(), l).unwrap()
}

/// `w` followed by a positive word undoing its permutation, so the result is pure.
pub fn purify(w: &BraidWord) -> BraidWord {
    let fix = SimpleElement::from_permutation(&w.permutation().inverse());
    w.concat(&fix.to_word()).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Random,
    Trivial,
    Pure,
}

/// Mixed corpus with `n ≤ 5` and length `≤ 30`: plain random words, words
/// that are trivial by construction, and pure words.
pub fn corpus(seed: u64, count: usize) -> Vec<(Kind, BraidWord)> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=30);
        let w = match k % 3 {
            0 => (Kind::Random, random_word(&mut rng, n, len)),
            1 => {
                let half = random_word(&mut rng, n, len * 2 / 5);
                let other = shuffle_by_relations(&mut rng, &half, 50);
                let w = half.concat(&other.invert()).unwrap();
                let w = if w.len() > 30 {
                    half.concat(&half.invert()).unwrap()
                } else {
                    w
                };
                (Kind::Trivial, w)
            }
            _ => {
                let base = random_word(&mut rng, n, len * 2 / 3);
                // at most 20 + n(n-1)/2 <= 30 letters
                (Kind::Pure, purify(&base))
            }
        };
        out.push(w);
    }
    out
}

/// Artin images identify braids exactly (the action is faithful).
pub fn artin_key(w: &BraidWord) -> Vec<FreeWord> {
    generator_images(w)
}

/// All positive braids of letter length at most `n(n-1)/2` dividing `Δ`,
/// found without using any simple-element code: elements are grown letter by
/// letter, identified by their Artin images, and kept if they extend to `Δ`.
pub struct DivisorPoset {
    pub n: usize,
    /// A representative positive word per divisor.
    pub words: Vec<BraidWord>,
    /// `below[a][b]` iff divisor `a` is a prefix of divisor `b`.
    pub below: Vec<Vec<bool>>,
    pub index: HashMap<Vec<FreeWord>, usize>,
}

impl DivisorPoset {
    pub fn build(n: usize) -> Self {
        let top = n * (n - 1) / 2;
        let mut delta_word = Vec::new();
        for k in 1..n as i32 {
            for j in (1..=k).rev() {
                delta_word.push(j);
            }
        }
        let delta_key = artin_key(&word(n, &delta_word));

        // layers[l]: distinct positive braids of length l, with a word each
        let mut layers: Vec<Vec<(Vec<FreeWord>, Vec<i32>)>> = vec![vec![(artin_key(&word(n, &[])), vec![])]];
        for l in 0..top {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for (_, w) in &layers[l] {
                for i in 1..n as i32 {
                    let mut v = w.clone();
                    v.push(i);
                    let key = artin_key(&word(n, &v));
                    if seen.insert(key.clone()) {
                        next.push((key, v));
                    }
                }
            }
            layers.push(next);
        }

        // keep the prefixes of Δ, from the top layer down
        let mut keep: Vec<HashSet<Vec<FreeWord>>> = vec![HashSet::new(); top + 1];
        keep[top] = layers[top]
            .iter()
            .filter(|(k, _)| *k == delta_key)
            .map(|(k, _)| k.clone())
            .collect();
        assert_eq!(keep[top].len(), 1, "Δ must have length n(n-1)/2");
        for l in (0..top).rev() {
            for (key, w) in &layers[l] {
                let extends = (1..n as i32).any(|i| {
                    let mut v = w.clone();
                    v.push(i);
                    keep[l + 1].contains(&artin_key(&word(n, &v)))
                });
                if extends {
                    keep[l].insert(key.clone());
                }
            }
        }

        let mut words = Vec::new();
        let mut index = HashMap::new();
        for l in 0..=top {
            for (key, w) in &layers[l] {
                if keep[l].contains(key) {
                    index.insert(key.clone(), words.len());
                    words.push(word(n, w));
                }
            }
        }

        // covering relation a → aσ_i, then reflexive-transitive closure
        let m = words.len();
        let mut below = vec![vec![false; m]; m];
        for a in 0..m {
            below[a][a] = true;
            for i in 1..n as i32 {
                let v = words[a].concat(&word(n, &[i])).unwrap();
                if let Some(&b) = index.get(&artin_key(&v)) {
                    below[a][b] = true;
                }
            }
        }
        for k in 0..m {
            for a in 0..m {
                if below[a][k] {
                    for b in 0..m {
                        if below[k][b] {
                            below[a][b] = true;
                        }
                    }
                }
            }
        }
        DivisorPoset { n, words, below, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn locate(&self, w: &BraidWord) -> Option<usize> {
        self.index.get(&artin_key(w)).copied()
    }

    /// Greatest lower bound by exhaustive search.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&u| self.below[u][a] && self.below[u][b])
            .collect();
        let greatest: Vec<usize> = lower
            .iter()
            .copied()
            .filter(|&g| lower.iter().all(|&u| self.below[u][g]))
            .collect();
        assert_eq!(greatest.len(), 1, "divisors of Δ form a lattice");
        greatest[0]
    }

    /// Least upper bound by exhaustive search.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&u| self.below[a][u] && self.below[b][u])
            .collect();
        let least: Vec<usize> = upper
            .iter()
            .copied()
            .filter(|&g| upper.iter().all(|&u| self.below[g][u]))
            .collect();
        assert_eq!(least.len(), 1, "divisors of Δ form a lattice");
        least[0]
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

pub fn time<T>(f: impl FnOnce() -> T) -> (T, std::time::Duration) {
    let start = std::time::Instant::now();
    let out = f();
    (out, start.elapsed())
}
