use std::fmt;

use num_traits::Num;

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A permutation of `{1, …, N}`.
///
/// Stored 0-based; the 1-based form is what gets parsed and printed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// From 1-based images, e.g. `[2, 3, 1]` for the 3-cycle `(1 2 3)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero: Option<Vec<usize>> = images.iter().map(|&i| i.checked_sub(1)).collect();
        let zero =
            zero.ok_or_else(|| Error::InvalidInput("permutation entries start at 1".into()))?;
        Self::from_images(zero)
    }

    /// The transposition exchanging 0-based `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch("permutation sizes differ".into()));
        }
        Ok(Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s] = i;
        }
        Perm { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// ε(σ) = (−1)^{#inversions}.
    pub fn signature(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle decomposition, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Writes σ as a product of transpositions (one per non-trivial cycle step).
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        self.cycles()
            .into_iter()
            .flat_map(|c| {
                let head = c[0];
                c.into_iter().skip(1).map(move |x| (head, x))
            })
            .collect()
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &s)| *i == s)
            .count()
    }

    /// Permutation matrix sending `e_j` to `e_{σ(j)}`: entry `(σ(j), j)` is 1.
    ///
    /// With this orientation `matrix(σ∘τ) = matrix(σ)·matrix(τ)`.
    pub fn matrix<T: Clone + Num>(&self) -> Matrix<T> {
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for (j, &s) in self.images.iter().enumerate() {
            m[(s, j)] = T::one();
        }
        m
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
