//! The partition lattice: order and Möbius matrices, Gram and Weingarten
//! matrices, truncated character moments.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::category::{all_partitions, enumerate, Category};
use super::partition::{ColoredWord, SetPartition};
use crate::error::{Error, Result};
use crate::matcore::{IntMat, RatMat};

/// `A(π, ν) = [π ≤ ν]` over `parts`.
pub fn order_matrix(parts: &[SetPartition]) -> IntMat {
    let n = parts.len();
    IntMat::from_fn(n, n, |i, j| {
        BigInt::from(parts[i].leq(&parts[j]).expect("same ground set") as u8)
    })
}

/// Möbius function of `P(k)`, by the defining recurrence
/// `μ(π,ν) = −Σ_{π≤τ<ν} μ(π,τ)`.
pub fn mobius(a: &SetPartition, b: &SetPartition) -> Result<BigInt> {
    if a.k() != b.k() {
        return Err(Error::DimensionMismatch(format!("partitions of {} and {} points", a.k(), b.k())));
    }
    let parts = all_partitions(a.k())?;
    let mut memo = HashMap::new();
    mobius_rec(a, b, &parts, &mut memo)
}

fn mobius_rec(
    a: &SetPartition,
    b: &SetPartition,
    parts: &[SetPartition],
    memo: &mut HashMap<SetPartition, BigInt>,
) -> Result<BigInt> {
    if let Some(v) = memo.get(b) {
        return Ok(v.clone());
    }
    let value = if a == b {
        BigInt::one()
    } else if !a.leq(b)? {
        BigInt::zero()
    } else {
        let mut sum = BigInt::zero();
        for t in parts {
            if t != b && a.leq(t)? && t.leq(b)? {
                sum += mobius_rec(a, t, parts, memo)?;
            }
        }
        -sum
    };
    memo.insert(b.clone(), value.clone());
    Ok(value)
}

/// `M(π, ν) = μ(π, ν)` over `P(k)` in canonical order.
pub fn mobius_matrix(k: usize) -> Result<IntMat> {
    let parts = all_partitions(k)?;
    let n = parts.len();
    let mut m = IntMat::zeros(n, n);
    for i in 0..n {
        // one memo per left argument: the recurrence only varies the right one
        let mut memo = HashMap::new();
        for j in 0..n {
            m[(i, j)] = mobius_rec(&parts[i], &parts[j], &parts, &mut memo)?;
        }
    }
    Ok(m)
}

/// `N(N−1)⋯(N−r+1)`.
pub fn falling_factorial(n: u64, r: usize) -> BigInt {
    (0..r as u64).fold(BigInt::one(), |acc, i| {
        if i > n {
            BigInt::zero()
        } else {
            acc * BigInt::from(n - i)
        }
    })
}

/// `G(π, ν) = N^{|π∨ν|}` over `parts`.
pub fn gram_of(parts: &[SetPartition], n: u64) -> IntMat {
    let m = parts.len();
    let base = BigInt::from(n);
    IntMat::from_fn(m, m, |i, j| {
        let blocks = parts[i].join(&parts[j]).expect("same ground set").block_count();
        base.pow(blocks as u32)
    })
}

/// Gram matrix of `D(k)` for the category on the word.
pub fn gram(word: &ColoredWord, n: u64, cat: Category) -> Result<IntMat> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1".into()));
    }
    Ok(gram_of(&enumerate(word, cat)?, n))
}

/// `L(π, ν) = N(N−1)⋯(N−|π|+1)·[ν ≤ π]` over `P(k)`; `G = A·L`.
pub fn lower_factor(k: usize, n: u64) -> Result<IntMat> {
    let parts = all_partitions(k)?;
    let m = parts.len();
    Ok(IntMat::from_fn(m, m, |i, j| {
        if parts[j].leq(&parts[i]).expect("same ground set") {
            falling_factorial(n, parts[i].block_count())
        } else {
            BigInt::zero()
        }
    }))
}

/// `∏_{π∈P(k)} N!/(N−|π|)!`.
pub fn gram_det_formula(k: usize, n: u64) -> Result<BigInt> {
    Ok(all_partitions(k)?
        .iter()
        .map(|p| falling_factorial(n, p.block_count()))
        .product())
}

/// `W = G⁻¹` exactly. Refused for `N < k`, where the vectors `ξ_π` need not
/// be independent.
pub fn weingarten(word: &ColoredWord, n: u64, cat: Category) -> Result<RatMat> {
    let k = word.len();
    if n < k as u64 {
        return Err(Error::SingularGram { k, n: n as usize });
    }
    let g = gram(word, n, cat)?.to_rational();
    g.inverse().ok_or(Error::SingularGram { k, n: n as usize })
}

/// `δ_π(i)`: 1 when the indices are constant on the blocks of `π`.
pub fn delta(pi: &SetPartition, indices: &[usize]) -> bool {
    let mut seen: Vec<Option<usize>> = vec![None; pi.block_count()];
    pi.block_of().iter().zip(indices).all(|(&b, &i)| match seen[b as usize] {
        Some(v) => v == i,
        None => {
            seen[b as usize] = Some(i);
            true
        }
    })
}

/// `∫ g_{i₁j₁}⋯g_{i_kj_k} = Σ_{π,ν} δ_π(i) δ_ν(j) W(π, ν)` (indices 0-based).
pub fn weingarten_integral(word: &ColoredWord, n: u64, cat: Category, i: &[usize], j: &[usize]) -> Result<BigRational> {
    if i.len() != word.len() || j.len() != word.len() {
        return Err(Error::DimensionMismatch("one row and one column index per letter".into()));
    }
    if i.iter().chain(j).any(|&x| x as u64 >= n) {
        return Err(Error::InvalidInput(format!("indices must lie in 0..{n}")));
    }
    let parts = enumerate(word, cat)?;
    let w = weingarten(word, n, cat)?;
    let mut sum = BigRational::zero();
    for (a, pa) in parts.iter().enumerate() {
        if !delta(pa, i) {
            continue;
        }
        for (b, pb) in parts.iter().enumerate() {
            if delta(pb, j) {
                sum += &w[(a, b)];
            }
        }
    }
    Ok(sum)
}

/// `∫ (u₁₁ + ⋯ + u_ss)^k = Tr(W_{kN} G_{ks})`.
pub fn truncated_char_moment(cat: Category, k: usize, n: u64, s: u64) -> Result<BigRational> {
    let word = ColoredWord::white(k);
    let w = weingarten(&word, n, cat)?;
    let parts = enumerate(&word, cat)?;
    let gs = if s == 0 {
        IntMat::zeros(parts.len(), parts.len())
    } else {
        gram_of(&parts, s)
    }
    .to_rational();
    Ok((&w * &gs).trace())
}

/// Coefficients `c_j = #{π ∈ D(k) : |π| = j}` of `Σ_{π∈D(k)} t^{|π|}`.
pub fn asymptotic_moment(cat: Category, k: usize) -> Result<Vec<u64>> {
    let parts = enumerate(&ColoredWord::white(k), cat)?;
    let mut coeffs = vec![0u64; k + 1];
    for p in &parts {
        coeffs[p.block_count()] += 1;
    }
    Ok(coeffs)
}

/// `Σ_j c_j t^j`.
pub fn eval_moment_poly(coeffs: &[u64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c as f64)
}
