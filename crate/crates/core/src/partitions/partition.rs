use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `{0, …, k−1}` stored as a restricted-growth string:
/// `block_of[i]` is the index of the block of `i`, blocks numbered by first
/// appearance starting from 0. Displayed 1-based, e.g. `1121`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    block_of: Vec<u8>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary labeling (equal labels share a block).
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut seen: Vec<&T> = Vec::new();
        let block_of = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(b) => b as u8,
                None => {
                    seen.push(l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        Self { block_of }
    }

    /// From a list of blocks covering `0..k` exactly once.
    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= k || label[i] != usize::MAX {
                    return Err(Error::InvalidInput(format!("blocks do not partition 0..{k}")));
                }
                label[i] = b;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(Error::InvalidInput(format!("blocks do not cover 0..{k}")));
        }
        Ok(Self::from_labels(&label))
    }

    /// `k` singletons.
    pub fn singletons(k: usize) -> Self {
        Self { block_of: (0..k as u8).collect() }
    }

    /// One block with `k` points.
    pub fn one_block(k: usize) -> Self {
        Self { block_of: vec![0; k] }
    }

    pub(crate) fn from_rgs_unchecked(block_of: Vec<u8>) -> Self {
        Self { block_of }
    }

    pub fn k(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self) -> &[u8] {
        &self.block_of
    }

    /// Number of blocks `|π|`.
    pub fn block_count(&self) -> usize {
        self.block_of.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (i, &b) in self.block_of.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    fn same_k(&self, other: &Self) -> Result<()> {
        if self.k() != other.k() {
            return Err(Error::DimensionMismatch(format!(
                "partitions of {} and {} points",
                self.k(),
                other.k()
            )));
        }
        Ok(())
    }

    /// `self ≤ other`: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_k(other)?;
        let mut image = vec![u8::MAX; self.block_count()];
        for (a, b) in self.block_of.iter().zip(&other.block_of) {
            let slot = &mut image[*a as usize];
            if *slot == u8::MAX {
                *slot = *b;
            } else if *slot != *b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `π ∨ ν`, the finest partition coarser than both.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_k(other)?;
        let k = self.k();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for part in [self, other] {
            let mut first = vec![usize::MAX; part.block_count()];
            for (i, &b) in part.block_of.iter().enumerate() {
                let f = &mut first[b as usize];
                if *f == usize::MAX {
                    *f = i;
                } else {
                    let (ra, rb) = (find(&mut parent, *f), find(&mut parent, i));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
        Ok(Self::from_labels(&roots))
    }

    pub fn is_pairing(&self) -> bool {
        self.blocks().iter().all(|b| b.len() == 2)
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        let blocks = self.blocks();
        // blocks cross iff some element of one lies strictly between two
        // consecutive elements of the other while another element lies outside
        for (x, bx) in blocks.iter().enumerate() {
            for by in &blocks[x + 1..] {
                for w in bx.windows(2) {
                    let inside = by.iter().any(|&p| w[0] < p && p < w[1]);
                    let outside = by.iter().any(|&p| p < w[0] || p > w[1]);
                    if inside && outside {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block_count() < 10 {
            for &b in &self.block_of {
                write!(f, "{}", b + 1)?;
            }
            Ok(())
        } else {
            let labels: Vec<String> = self.block_of.iter().map(|b| (b + 1).to_string()).collect();
            f.write_str(&labels.join(","))
        }
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses a restricted-growth string such as `1121`, or a comma
    /// separated list of labels; the labels must already be canonical.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("{s:?} is not a restricted-growth string"));
        let labels: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        let mut next = 1;
        for &l in &labels {
            if l == 0 || l > next {
                return Err(bad());
            }
            if l == next {
                next += 1;
            }
        }
        if labels.len() > u8::MAX as usize {
            return Err(bad());
        }
        Ok(Self { block_of: labels.iter().map(|&l| (l - 1) as u8).collect() })
    }
}

/// A word over `{∘, •}`; `true` is white `∘`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredWord {
    letters: Vec<bool>,
}

impl ColoredWord {
    pub fn new(letters: Vec<bool>) -> Self {
        Self { letters }
    }

    /// The uncolored ground set of size `k`, read as all white.
    pub fn white(k: usize) -> Self {
        Self { letters: vec![true; k] }
    }

    pub fn letters(&self) -> &[bool] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromStr for ColoredWord {
    type Err = Error;

    /// Accepts `∘`/`•`, `o`/`x` or `w`/`b`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '∘' | 'o' | 'w' | 'W' => Ok(true),
                '•' | 'x' | 'b' | 'B' => Ok(false),
                _ => Err(Error::InvalidInput(format!("unexpected letter {c:?} in colored word"))),
            })
            .collect::<Result<_>>()
            .map(Self::new)
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &w in &self.letters {
            f.write_str(if w { "∘" } else { "•" })?;
        }
        Ok(())
    }
}
