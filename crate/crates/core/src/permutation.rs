use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semiring::{ExtMatrix, ExtScalar, Scalar};

/// A bijection of `{0, …, n−1}`, stored as its image list.
///
/// Indices are 0-based internally; `Display` and `FromStr` use the 1-based
/// convention of the command-line interface.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s] = i;
        }
        Permutation { images }
    }

    /// Tropical permutation matrix with `P[σ(i), i] = 0`, −∞ elsewhere.
    pub fn matrix(&self) -> ExtMatrix {
        let n = self.len();
        ExtMatrix::from_fn(n, n, |r, c| {
            if self.images[c] == r {
                ExtScalar::Finite(Scalar::zero())
            } else {
                ExtScalar::Bottom
            }
        })
        .expect("n >= 1")
    }

    /// Every permutation of degree `n`, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n)
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .expect("pivot");
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Disjoint non-trivial cycles, each starting at its least element (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.images[start];
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }

    /// One-line notation, 1-based: `"1 3 2"`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]", self.one_line())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses 1-based one-line notation, separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(Error::Parse {
                    line: 1,
                    msg: format!("bad permutation entry {t:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty permutation".into(),
            });
        }
        Permutation::new(images).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })
    }
}
