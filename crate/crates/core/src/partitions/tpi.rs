//! The linear maps `T_π : (ℂ^N)^{⊗k} → (ℂ^N)^{⊗l}` attached to partitions
//! with `k` upper and `l` lower points, and the operations on diagrams they
//! intertwine with.

use super::category::all_partitions;
use super::partition::SetPartition;
use crate::error::{Error, Result};
use crate::matcore::Matrix;

/// Largest `N` accepted by [`tpi_map`].
pub const TPI_MAX_N: usize = 5;
/// Largest `k + l` accepted by [`tpi_map`].
pub const TPI_MAX_POINTS: usize = 6;

/// A partition of `k` upper points followed by `l` lower points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoRowPartition {
    upper: usize,
    lower: usize,
    partition: SetPartition,
}

impl TwoRowPartition {
    pub fn new(upper: usize, lower: usize, partition: SetPartition) -> Result<Self> {
        if partition.k() != upper + lower {
            return Err(Error::DimensionMismatch(format!(
                "{} points for a partition in P({upper},{lower})",
                partition.k()
            )));
        }
        Ok(Self { upper, lower, partition })
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// `|| … |` in `P(k, k)`.
    pub fn identity(k: usize) -> Self {
        let labels: Vec<usize> = (0..k).chain(0..k).collect();
        Self { upper: k, lower: k, partition: SetPartition::from_labels(&labels) }
    }

    /// Horizontal concatenation `[πσ]`.
    pub fn concat(&self, other: &Self) -> Self {
        let (a, b) = (self.partition.block_of(), other.partition.block_of());
        let shift = self.partition.block_count();
        let lab = |x: u8, off: usize| x as usize + off;
        let labels: Vec<usize> = a[..self.upper]
            .iter()
            .map(|&x| lab(x, 0))
            .chain(b[..other.upper].iter().map(|&x| lab(x, shift)))
            .chain(a[self.upper..].iter().map(|&x| lab(x, 0)))
            .chain(b[other.upper..].iter().map(|&x| lab(x, shift)))
            .collect();
        Self {
            upper: self.upper + other.upper,
            lower: self.lower + other.lower,
            partition: SetPartition::from_labels(&labels),
        }
    }

    /// Upside-down turning `π*`.
    pub fn adjoint(&self) -> Self {
        let b = self.partition.block_of();
        let labels: Vec<u8> = b[self.upper..].iter().chain(&b[..self.upper]).copied().collect();
        Self { upper: self.lower, lower: self.upper, partition: SetPartition::from_labels(&labels) }
    }

    /// Vertical composition `[σ over π]` (first `sigma`, then `self`),
    /// together with the number `c` of closed components erased in the middle.
    pub fn compose(&self, sigma: &Self) -> Result<(Self, usize)> {
        if sigma.lower != self.upper {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack P({},{}) under P({},{})",
                self.upper, self.lower, sigma.upper, sigma.lower
            )));
        }
        let (k, m, l) = (sigma.upper, sigma.lower, self.lower);
        // points: σ upper 0..k, middle k..k+m, π lower k+m..k+m+l
        let total = k + m + l;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut link = |pts: &[usize], labels: &[u8]| {
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    if labels[i] == labels[j] {
                        let (a, b) = (find(&mut parent, pts[i]), find(&mut parent, pts[j]));
                        parent[a] = b;
                    }
                }
            }
        };
        let sigma_pts: Vec<usize> = (0..k + m).collect();
        link(&sigma_pts, sigma.partition.block_of());
        let pi_pts: Vec<usize> = (k..total).collect();
        link(&pi_pts, self.partition.block_of());
        let roots: Vec<usize> = (0..total).map(|x| find(&mut parent, x)).collect();
        let outer: Vec<usize> = (0..k).chain(k + m..total).collect();
        let mut middle_roots: Vec<usize> = (k..k + m).map(|x| roots[x]).collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        let closed = middle_roots.iter().filter(|r| !outer.iter().any(|&o| roots[o] == **r)).count();
        let labels: Vec<usize> = outer.iter().map(|&o| roots[o]).collect();
        Ok((Self { upper: k, lower: l, partition: SetPartition::from_labels(&labels) }, closed))
    }
}

/// All of `P(k, l)`.
pub fn two_row_partitions(upper: usize, lower: usize) -> Result<Vec<TwoRowPartition>> {
    Ok(all_partitions(upper + lower)?
        .into_iter()
        .map(|p| TwoRowPartition { upper, lower, partition: p })
        .collect())
}

/// `T_π` as an `N^l × N^k` 0–1 matrix; multi-indices are read with the first
/// tensor factor most significant.
pub fn tpi_map(pi: &TwoRowPartition, n: usize) -> Result<Matrix<i64>> {
    let (k, l) = (pi.upper, pi.lower);
    if n == 0 || n > TPI_MAX_N {
        return Err(Error::Budget { what: "T_π dimension N", value: n, limit: TPI_MAX_N });
    }
    if k + l > TPI_MAX_POINTS {
        return Err(Error::Budget { what: "T_π points k + l", value: k + l, limit: TPI_MAX_POINTS });
    }
    let digits = |mut x: usize, len: usize| {
        let mut d = vec![0; len];
        for slot in d.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        d
    };
    let (cols, rows) = (n.pow(k as u32), n.pow(l as u32));
    Ok(Matrix::from_fn(rows, cols, |r, c| {
        let mut idx = digits(c, k);
        idx.extend(digits(r, l));
        super::lattice::delta(&pi.partition, &idx) as i64
    }))
}
