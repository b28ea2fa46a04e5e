use std::fmt;
use std::str::FromStr;

use super::partition::{ColoredWord, SetPartition};
use crate::error::{Error, Result};

/// Largest ground set enumerated for categories not made of pairings.
pub const PARTITION_LIMIT: usize = 12;
/// Largest ground set enumerated for pairing categories.
pub const PAIRING_LIMIT: usize = 16;

/// Categories of partitions attached to the classical easy groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    /// All partitions (`S_N`).
    P,
    /// Partitions with even blocks (`H_N`).
    PEven,
    /// All pairings (`O_N`).
    P2,
    /// Pairings joining `∘` with `•` (`U_N`).
    MatchingP2,
    /// Noncrossing partitions.
    NC,
    /// Noncrossing pairings.
    NC2,
    /// Noncrossing pairings joining `∘` with `•`.
    MatchingNC2,
    /// Blocks with `#∘ − #• ≡ 0 (mod s)` (`H_N^s`); `s = 0` stands for
    /// `s = ∞`, i.e. `#∘ = #•` in each block (`K_N`).
    Ps(u32),
}

impl Category {
    pub const ALL_FIXED: [Category; 7] = [
        Category::P,
        Category::PEven,
        Category::P2,
        Category::MatchingP2,
        Category::NC,
        Category::NC2,
        Category::MatchingNC2,
    ];

    fn pairings_only(self) -> bool {
        matches!(self, Self::P2 | Self::MatchingP2 | Self::NC2 | Self::MatchingNC2)
    }

    fn limit(self) -> usize {
        if self.pairings_only() {
            PAIRING_LIMIT
        } else {
            PARTITION_LIMIT
        }
    }

    /// Whether `pi`, laid on the points of `word`, belongs to the category.
    pub fn contains(self, pi: &SetPartition, word: &ColoredWord) -> bool {
        if pi.k() != word.len() {
            return false;
        }
        let colors = word.letters();
        let blocks = pi.blocks();
        let matching = |b: &Vec<usize>| colors[b[0]] != colors[b[1]];
        match self {
            Self::P => true,
            Self::PEven => blocks.iter().all(|b| b.len() % 2 == 0),
            Self::P2 => pi.is_pairing(),
            Self::MatchingP2 => pi.is_pairing() && blocks.iter().all(matching),
            Self::NC => pi.is_noncrossing(),
            Self::NC2 => pi.is_pairing() && pi.is_noncrossing(),
            Self::MatchingNC2 => pi.is_pairing() && pi.is_noncrossing() && blocks.iter().all(matching),
            Self::Ps(s) => blocks.iter().all(|b| {
                let white = b.iter().filter(|&&i| colors[i]).count() as i64;
                let diff = white - (b.len() as i64 - white);
                if s == 0 {
                    diff == 0
                } else {
                    diff.rem_euclid(s as i64) == 0
                }
            }),
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::P => f.write_str("P"),
            Self::PEven => f.write_str("P_even"),
            Self::P2 => f.write_str("P2"),
            Self::MatchingP2 => f.write_str("MatchingP2"),
            Self::NC => f.write_str("NC"),
            Self::NC2 => f.write_str("NC2"),
            Self::MatchingNC2 => f.write_str("MatchingNC2"),
            Self::Ps(0) => f.write_str("P_s(inf)"),
            Self::Ps(s) => write!(f, "P_s({s})"),
        }
    }
}

impl FromStr for Category {
    type Err = Error;

    /// `P`, `P_even`, `P2`, `MatchingP2`, `NC`, `NC2`, `MatchingNC2`,
    /// `P_s(3)`, `P_s(inf)` (also `Ps:3`, `Ps:inf`).
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !matches!(c, '_' | ' ' | '-')).collect::<String>().to_lowercase();
        let fixed = match norm.as_str() {
            "p" => Some(Self::P),
            "peven" => Some(Self::PEven),
            "p2" => Some(Self::P2),
            "matchingp2" | "𝒫2" => Some(Self::MatchingP2),
            "nc" => Some(Self::NC),
            "nc2" => Some(Self::NC2),
            "matchingnc2" => Some(Self::MatchingNC2),
            _ => None,
        };
        if let Some(c) = fixed {
            return Ok(c);
        }
        let arg = norm
            .strip_prefix("ps(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| norm.strip_prefix("ps:"))
            .ok_or_else(|| Error::InvalidInput(format!("unknown category {s:?}")))?;
        match arg {
            "inf" | "∞" | "infinity" | "0" => Ok(Self::Ps(0)),
            _ => match arg.parse::<u32>() {
                Ok(v) if v >= 1 => Ok(Self::Ps(v)),
                _ => Err(Error::InvalidInput(format!("P_s needs s ≥ 1 or inf, got {arg:?}"))),
            },
        }
    }
}

/// Canonical order: more blocks first, then lexicographic on the
/// restricted-growth string. Refinement `π ≤ ν` implies `π` comes first.
pub fn canonical_sort(parts: &mut [SetPartition]) {
    parts.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
}

/// `D(k)`: the partitions of the points of `word` in the category, in
/// canonical order.
pub fn enumerate(word: &ColoredWord, cat: Category) -> Result<Vec<SetPartition>> {
    let k = word.len();
    if k > cat.limit() {
        return Err(Error::Budget { what: "partition ground set", value: k, limit: cat.limit() });
    }
    let mut out = Vec::new();
    if cat.pairings_only() {
        if k.is_multiple_of(2) {
            let mut labels = vec![u8::MAX; k];
            pairings(&mut labels, 0, &mut |l| {
                let pi = SetPartition::from_labels(l);
                if cat.contains(&pi, word) {
                    out.push(pi);
                }
            });
        }
    } else {
        let mut rgs = Vec::with_capacity(k);
        growth_strings(k, &mut rgs, 0, &mut |r| {
            let pi = SetPartition::from_rgs_unchecked(r.to_vec());
            if cat.contains(&pi, word) {
                out.push(pi);
            }
        });
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// All of `P(k)` in canonical order.
pub fn all_partitions(k: usize) -> Result<Vec<SetPartition>> {
    enumerate(&ColoredWord::white(k), Category::P)
}

fn growth_strings(k: usize, rgs: &mut Vec<u8>, max: u8, visit: &mut impl FnMut(&[u8])) {
    if rgs.len() == k {
        visit(rgs);
        return;
    }
    let top = if rgs.is_empty() { 0 } else { max + 1 };
    for b in 0..=top {
        rgs.push(b);
        growth_strings(k, rgs, max.max(b), visit);
        rgs.pop();
    }
}

fn pairings(labels: &mut [u8], next: u8, visit: &mut impl FnMut(&[u8])) {
    let Some(first) = labels.iter().position(|&l| l == u8::MAX) else {
        visit(labels);
        return;
    };
    labels[first] = next;
    for j in first + 1..labels.len() {
        if labels[j] == u8::MAX {
            labels[j] = next;
            pairings(labels, next + 1, visit);
            labels[j] = u8::MAX;
        }
    }
    labels[first] = u8::MAX;
}
