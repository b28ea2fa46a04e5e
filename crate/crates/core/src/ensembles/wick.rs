use crate::error::{Error, Result};

/// Longest word accepted by [`wick_count`].
pub const WICK_LIMIT: usize = 12;

/// One factor of a Gaussian monomial: which variable, and whether it is
/// the variable itself (`true`) or its conjugate (`false`).
pub type WickLetter = (usize, bool);

/// Number of pairings of the word that match each letter with a conjugate
/// letter of the same variable.
pub fn wick_count(word: &[WickLetter]) -> Result<u64> {
    if word.len() > WICK_LIMIT {
        return Err(Error::Budget { what: "Wick word length", value: word.len(), limit: WICK_LIMIT });
    }
    fn go(rest: &mut Vec<WickLetter>) -> u64 {
        let Some(first) = rest.pop() else {
            return 1;
        };
        let mut total = 0;
        for i in 0..rest.len() {
            let other = rest[i];
            if other.0 == first.0 && other.1 != first.1 {
                rest.swap_remove(i);
                total += go(rest);
                rest.push(other);
                let last = rest.len() - 1;
                rest.swap(i, last);
            }
        }
        rest.push(first);
        total
    }
    Ok(go(&mut word.to_vec()))
}

/// `E[∏ z_{i_j}^{ε_j}]` for i.i.d. complex Gaussians with `E|z|² = t`.
pub fn wick_moment(word: &[WickLetter], t: f64) -> Result<f64> {
    let count = wick_count(word)?;
    Ok(if count == 0 { 0.0 } else { count as f64 * t.powi(word.len() as i32 / 2) })
}
