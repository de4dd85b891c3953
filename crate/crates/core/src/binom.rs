//! Exact binomial coefficients.
//!
//! Counts are `u128`; every multiplication is checked and an overflow is
//! reported as [`Error::Overflow`] rather than wrapped.

use crate::{Error, Result};

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `binom(top, bottom)`, with `binom(a, b) = 0` for `b > a` and
/// `binom(a, 0) = 1` for every `a` including `a = 0`.
pub fn binomial(top: u128, bottom: u128) -> Result<u128> {
    if bottom > top {
        return Ok(0);
    }
    let bottom = bottom.min(top - bottom);
    let mut acc: u128 = 1;
    for i in 0..bottom {
        // acc = C(top, i); next = acc * (top - i) / (i + 1), kept exact.
        let g = gcd(acc, i + 1);
        let factor = (top - i) / ((i + 1) / g);
        acc = (acc / g).checked_mul(factor).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Signed-top variant used where a formula can produce a negative top
/// argument; any negative top gives zero (the set being counted is empty).
pub fn binomial_i(top: i128, bottom: i128) -> Result<u128> {
    if top < 0 || bottom < 0 {
        return Ok(0);
    }
    binomial(top as u128, bottom as u128)
}

/// Sum of binomials with overflow detection.
pub(crate) fn checked_sum<I: IntoIterator<Item = u128>>(terms: I) -> Result<u128> {
    terms
        .into_iter()
        .try_fold(0u128, |acc, x| acc.checked_add(x))
        .ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn matches_pascal_triangle() {
        let rows = pascal(120);
        for (n, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n as u128, k as u128).unwrap(), v, "C({n},{k})");
            }
            assert_eq!(binomial(n as u128, n as u128 + 1).unwrap(), 0);
        }
    }

    #[test]
    fn zero_conventions() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(3, 4).unwrap(), 0);
        assert_eq!(binomial_i(-1, 0).unwrap(), 0);
        assert_eq!(binomial_i(5, -1).unwrap(), 0);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(binomial(128, 64).is_ok());
        assert_eq!(binomial(400, 200), Err(Error::Overflow));
    }
}
