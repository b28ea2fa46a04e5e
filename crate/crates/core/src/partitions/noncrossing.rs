use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::SetPartition;
use crate::error::{Error, Result};

/// Doubles every point of a noncrossing partition of `k` points into a
/// noncrossing pairing of `2k`: point `i` becomes legs `2i, 2i+1`, the right
/// leg of each block element is paired with the left leg of the next one,
/// and the outer legs of the block close it.
pub fn fatten(p: &SetPartition) -> Result<SetPartition> {
    if !p.is_noncrossing() {
        return Err(Error::Crossing);
    }
    let mut labels = vec![0usize; 2 * p.k()];
    let mut next = 0;
    for block in p.blocks() {
        for w in block.windows(2) {
            labels[2 * w[0] + 1] = next;
            labels[2 * w[1]] = next;
            next += 1;
        }
        labels[2 * block[0]] = next;
        labels[2 * block[block.len() - 1] + 1] = next;
        next += 1;
    }
    Ok(SetPartition::from_labels(&labels))
}

/// Inverse of [`fatten`]: collapses the legs `2i, 2i+1` back into `i`.
pub fn shrink(p: &SetPartition) -> Result<SetPartition> {
    if !p.k().is_multiple_of(2) || !p.is_pairing() || !p.is_noncrossing() {
        return Err(Error::InvalidInput("shrinking needs a noncrossing pairing of 2k points".into()));
    }
    let k = p.k() / 2;
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for b in p.blocks() {
        let (x, y) = (find(&mut parent, b[0] / 2), find(&mut parent, b[1] / 2));
        parent[x.max(y)] = x.min(y);
    }
    let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
    Ok(SetPartition::from_labels(&roots))
}

/// `C_k = (2k)! / (k!(k+1)!)`.
pub fn catalan(k: u32) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
    }
    c
}

/// `C_0, …, C_k` from `C_{j+1} = Σ_{a+b=j} C_a C_b`.
pub fn catalan_recurrence(k: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for j in 0..k {
        let next = (0..=j).fold(BigInt::zero(), |acc, a| acc + &c[a] * &c[j - a]);
        c.push(next);
    }
    c
}
