//! Simple graphs: closed walks, adjacency spectral measures, Laplacians and
//! spanning-tree counts by the matrix-tree theorem.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{det_int, rank_int, IntMat, Mat};
use crate::spectra::{eigh, AtomicLaw, MERGE_TOL};

/// Largest edge count [`spanning_tree_bruteforce`] accepts.
pub const BRUTEFORCE_EDGE_LIMIT: usize = 24;

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from 0-based edges; loops and out-of-range vertices are
    /// rejected, repeated edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        Self {
            n,
            edges: (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect(),
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput("a cycle needs at least 3 vertices".into()));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The graph whose edges are the set bits of `mask` over the pairs
    /// `(0,1), (0,2), …, (n−2,n−1)` in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self {
            n,
            edges: pairs.enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect(),
        }
    }

    /// `{"n": N, "edges": [[i, j], …]}` with 1-based vertices.
    pub fn from_json(text: &str) -> Result<Self> {
        let g: GraphJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("graph JSON: {e}")))?;
        let edges = g
            .edges
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::InvalidInput("graph JSON vertices are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(g.n, edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        })
        .expect("serializable")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn adjacency_int(&self) -> IntMat {
        let mut d = IntMat::zeros(self.n, self.n);
        for &(a, b) in &self.edges {
            d[(a, b)] = BigInt::one();
            d[(b, a)] = BigInt::one();
        }
        d
    }

    pub fn adjacency(&self) -> Mat {
        self.adjacency_int().map(|x| Complex64::new(if x.is_zero() { 0.0 } else { 1.0 }, 0.0))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!("vertex {v} outside 0..{}", self.n)));
        }
        Ok(())
    }
}

/// Closed walks of length `k` at `base`: `(d^k)_{base,base}`, exactly.
pub fn loop_count(g: &Graph, base: usize, k: u32) -> Result<BigInt> {
    g.check_vertex(base)?;
    let d = g.adjacency_int();
    let mut v = vec![BigInt::zero(); g.n];
    v[base] = BigInt::one();
    for _ in 0..k {
        v = d.matvec(&v)?;
    }
    Ok(v[base].clone())
}

/// `μ = Σ_i U_{base,i}² δ_{λ_i}` for `d = U·diag(λ)·Uᵗ`; its `k`-th moment
/// counts closed walks of length `k` at `base`.
pub fn loop_measure(g: &Graph, base: usize) -> Result<AtomicLaw> {
    g.check_vertex(base)?;
    let (values, u) = eigh(&g.adjacency())?;
    let locations: Vec<Complex64> = values.iter().map(|&l| Complex64::new(l, 0.0)).collect();
    let weights: Vec<f64> = (0..g.n).map(|i| u[(base, i)].norm_sqr()).collect();
    let total: f64 = weights.iter().sum();
    let weights: Vec<f64> = weights.iter().map(|w| w / total).collect();
    // eigenvalues of integer matrices cluster at rounding level
    AtomicLaw::weighted(&locations, &weights, MERGE_TOL.max(1e-7))
}

/// `L = v − d`, with `v` the diagonal matrix of valences.
pub fn laplacian_int(g: &Graph) -> IntMat {
    let mut l = -&g.adjacency_int();
    for i in 0..g.n {
        l[(i, i)] = BigInt::from(g.degree(i));
    }
    l
}

pub fn laplacian(g: &Graph) -> Mat {
    laplacian_int(g).to_complex()
}

/// Signed cofactor `(−1)^{i+j} det(L^{ij})`.
pub fn laplacian_cofactor(g: &Graph, i: usize, j: usize) -> Result<BigInt> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    let minor = det_int(&laplacian_int(g).minor(i, j))?;
    Ok(if (i + j).is_multiple_of(2) { minor } else { -minor })
}

/// Number of spanning trees, by the matrix-tree theorem.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    if g.n == 0 {
        return BigInt::zero();
    }
    laplacian_cofactor(g, 0, 0).expect("vertex 0 exists")
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Merges the classes; false if already merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Counts spanning trees by checking every `(n−1)`-edge subset.
pub fn spanning_tree_bruteforce(g: &Graph) -> Result<u64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::Budget { what: "edges for brute-force tree count", value: m, limit: BRUTEFORCE_EDGE_LIMIT });
    }
    if g.n == 0 {
        return Ok(0);
    }
    let k = g.n - 1;
    if k > m {
        return Ok(0);
    }
    if k == 0 {
        return Ok(1);
    }
    let mut count = 0;
    // Gosper's hack: all m-bit masks with k bits set, in increasing order
    let mut mask: u32 = (1 << k) - 1;
    while mask < 1 << m {
        let mut uf = UnionFind::new(g.n);
        let acyclic = (0..m)
            .filter(|&e| mask >> e & 1 == 1)
            .all(|e| uf.union(edges[e].0, edges[e].1));
        // n−1 edges without a cycle necessarily connect all n vertices
        if acyclic {
            count += 1;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(count)
}

/// Connected components as `dim ker L` (exact rank).
pub fn component_count(g: &Graph) -> usize {
    g.n - rank_int(&laplacian_int(g))
}

/// Connected components by union-find.
pub fn component_count_traversal(g: &Graph) -> usize {
    let mut uf = UnionFind::new(g.n);
    g.n - g.edges().filter(|&(a, b)| uf.union(a, b)).count()
}

#[cfg(test)]
fn incidence_matrix(g: &Graph) -> IntMat {
    // edges oriented low → high
    let edges: Vec<_> = g.edges().collect();
    IntMat::from_fn(g.n, edges.len(), |v, e| {
        if edges[e].0 == v {
            BigInt::one()
        } else if edges[e].1 == v {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}
